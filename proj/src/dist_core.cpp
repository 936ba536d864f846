#include "domrt/dist_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "domrt/kernels.hpp"

namespace domrt {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0) || p > 1.0)
        throw std::domain_error(std::string(what) + " must lie in [0,1]");
}

void check_succ(double p, const char* what) {
    if (!(p > 0.0) || p > 1.0)
        throw std::domain_error(std::string(what) + " must lie in (0,1]");
}

}  // namespace

GatedGeomSpec::GatedGeomSpec(std::int64_t offset, std::vector<GatedGeomTerm> terms)
    : offset_(offset), terms_(std::move(terms)) {
    if (offset_ < 0) throw std::domain_error("GatedGeomSpec: offset must be >= 0");
    for (const auto& t : terms_) {
        check_probability(t.gate, "GatedGeomSpec gate");
        check_succ(t.succ, "GatedGeomSpec succ");
    }
}

GatedGeomSpec GatedGeomSpec::geometric(double p) {
    return GatedGeomSpec(0, {GatedGeomTerm{1.0, p}});
}

GatedGeomSpec GatedGeomSpec::sum_of_geometrics(std::span<const double> probs) {
    std::vector<GatedGeomTerm> terms;
    terms.reserve(probs.size());
    for (double p : probs) terms.push_back({1.0, p});
    return GatedGeomSpec(0, std::move(terms));
}

double geom_pmf(double p, std::int64_t k) {
    check_succ(p, "geom_pmf p");
    if (k < 1) throw std::domain_error("geom_pmf: k must be >= 1");
    if (p == 1.0) return k == 1 ? 1.0 : 0.0;
    return std::exp(static_cast<double>(k - 1) * std::log1p(-p)) * p;
}

double geom_tail(double p, std::int64_t k) {
    check_succ(p, "geom_tail p");
    if (k < 1) throw std::domain_error("geom_tail: k must be >= 1");
    if (p == 1.0) return k == 1 ? 1.0 : 0.0;
    return std::exp(static_cast<double>(k - 1) * std::log1p(-p));
}

std::int64_t geom_inverse_transform(double p, double u) {
    check_succ(p, "geom_inverse_transform p");
    if (!(u > 0.0) || !(u < 1.0))
        throw std::domain_error("geom_inverse_transform: u must lie in (0,1)");
    if (p == 1.0) return 1;
    const double v = std::ceil(std::log(u) / std::log1p(-p));
    return v >= 1.0 ? static_cast<std::int64_t>(v) : 1;
}

double spec_mean(const GatedGeomSpec& spec) {
    std::vector<double> parts;
    parts.reserve(spec.terms().size());
    for (const auto& t : spec.terms()) parts.push_back(t.gate / t.succ);
    return static_cast<double>(spec.offset()) + kernels::sum(parts);
}

double spec_variance(const GatedGeomSpec& spec) {
    std::vector<double> parts;
    parts.reserve(spec.terms().size());
    for (const auto& t : spec.terms())
        parts.push_back((t.gate * (2.0 - t.succ) - t.gate * t.gate) / (t.succ * t.succ));
    return kernels::sum(parts);
}

DiscreteDist::DiscreteDist(std::int64_t lo, std::vector<double> pmf, double tail_mass,
                           double eps)
    : lo_(lo), pmf_(std::move(pmf)), tail_mass_(tail_mass), eps_(eps) {
    if (pmf_.empty()) throw std::domain_error("DiscreteDist: empty pmf");
    for (double v : pmf_)
        if (!(v >= 0.0)) throw std::domain_error("DiscreteDist: negative pmf entry");
    if (tail_mass_ < 0.0 || tail_mass_ > eps_ + 1e-12)
        throw std::domain_error("DiscreteDist: tail_mass exceeds eps budget");
    cdf_.resize(pmf_.size());
    double s = 0.0, c = 0.0;
    for (std::size_t i = 0; i < pmf_.size(); ++i) {
        const double v = pmf_[i];
        const double t = s + v;
        if (std::fabs(s) >= std::fabs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
        cdf_[i] = s + c;
    }
    const double total = cdf_.back() + tail_mass_;
    if (std::fabs(total - 1.0) > 1e-12)
        throw std::domain_error("DiscreteDist: pmf + tail_mass does not sum to 1");
}

DiscreteDist DiscreteDist::exact(std::int64_t lo, std::vector<double> pmf) {
    return DiscreteDist(lo, std::move(pmf), 0.0, 0.0);
}

double DiscreteDist::pmf_at(std::int64_t k) const {
    if (k < lo_ || k > hi()) return 0.0;
    return pmf_[static_cast<std::size_t>(k - lo_)];
}

double DiscreteDist::cdf_at(std::int64_t k) const {
    if (k < lo_) return 0.0;
    if (k >= hi()) return cdf_.back();
    return cdf_[static_cast<std::size_t>(k - lo_)];
}

double DiscreteDist::mean() const {
    std::vector<double> parts(pmf_.size());
    for (std::size_t i = 0; i < pmf_.size(); ++i)
        parts[i] = pmf_[i] * static_cast<double>(lo_ + static_cast<std::int64_t>(i));
    return kernels::sum(parts);
}

double DiscreteDist::variance() const {
    const double m = mean();
    std::vector<double> parts(pmf_.size());
    for (std::size_t i = 0; i < pmf_.size(); ++i) {
        const double d = static_cast<double>(lo_ + static_cast<std::int64_t>(i)) - m;
        parts[i] = pmf_[i] * d * d;
    }
    return kernels::sum(parts);
}

std::int64_t DiscreteDist::quantile(double u) const {
    if (!(u > 0.0) || !(u < 1.0))
        throw std::domain_error("quantile: u must lie in (0,1)");
    if (u > cdf_.back()) throw TruncatedTailError("quantile in truncated tail");
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    return lo_ + static_cast<std::int64_t>(it - cdf_.begin());
}

DiscreteDist exact_dist(const GatedGeomSpec& spec, double eps, std::size_t support_cap) {
    if (!(eps > 0.0) || eps > 0.1)
        throw std::domain_error("exact_dist: eps must lie in (0, 0.1]");
    const auto& terms = spec.terms();
    if (terms.empty())
        return DiscreteDist(spec.offset(), {1.0}, 0.0, 0.0);

    const double eps_term = eps / (2.0 * static_cast<double>(terms.size()));

    // Per-term truncation points; over-cap detection before any allocation.
    std::vector<std::int64_t> cutoffs(terms.size());
    std::size_t planned = 1;
    bool truncated = false;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        std::int64_t K;
        if (terms[t].succ == 1.0) {
            K = 1;
        } else {
            K = static_cast<std::int64_t>(
                std::ceil(std::log(eps_term) / std::log1p(-terms[t].succ)));
            if (K < 1) K = 1;
            truncated = true;
        }
        cutoffs[t] = K;
        planned += static_cast<std::size_t>(K);
        if (planned > support_cap)
            throw ResourceLimitError("exact_dist: support would exceed cap of " +
                                     std::to_string(support_cap) + " points");
    }

    std::vector<double> acc{1.0};
    std::vector<double> out;
    std::vector<double> term_pmf;
    std::int64_t lo = spec.offset();

    for (std::size_t t = 0; t < terms.size(); ++t) {
        const double gate = terms[t].gate;
        const double p = terms[t].succ;
        const std::int64_t K = cutoffs[t];
        if (gate == 0.0) continue;

        // Geometric part over {1..K}; stored from index 0 with lo shifted,
        // plus a leading (1-gate) atom at 0 when the gate can stay closed.
        const bool gated = gate < 1.0;
        term_pmf.assign(static_cast<std::size_t>(K) + (gated ? 1 : 0), 0.0);
        double mass = gate * p;
        std::size_t base = 0;
        if (gated)
            term_pmf[0] = 1.0 - gate;
        else
            lo += 1;
        base = gated ? 1 : 0;
        for (std::int64_t k = 0; k < K; ++k) {
            term_pmf[base + static_cast<std::size_t>(k)] = mass;
            mass *= (1.0 - p);
        }

        out.assign(acc.size() + term_pmf.size() - 1, 0.0);
        for (std::size_t j = 0; j < term_pmf.size(); ++j) {
            const double w = term_pmf[j];
            if (w == 0.0) continue;
            kernels::axpy(w, acc, std::span<double>(out).subspan(j, acc.size()));
        }
        acc.swap(out);
    }

    const double retained = kernels::sum(acc);
    const double tail = std::max(0.0, 1.0 - retained);
    return DiscreteDist(lo, std::move(acc), tail, truncated ? eps : 0.0);
}

std::int64_t sample_spec(const GatedGeomSpec& spec, Rng& rng) {
    std::int64_t total = spec.offset();
    for (const auto& t : spec.terms()) {
        const bool fired = t.gate >= 1.0 || rng.next_unit() < t.gate;
        if (fired) total += rng.geometric(t.succ);
    }
    return total;
}

std::int64_t sample_spec(const GatedGeomSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    return sample_spec(spec, rng);
}

DominationVerdict dominates_exact(const DiscreteDist& a, const DiscreteDist& b,
                                  double slack) {
    if (slack < 0.0) throw std::domain_error("dominates_exact: slack must be >= 0");
    if (a.eps() > slack / 4.0 || b.eps() > slack / 4.0)
        throw std::domain_error(
            "dominates_exact: truncation budgets must be at most slack/4");

    const std::int64_t lo = std::min(a.lo(), b.lo());
    const std::int64_t hi = std::max(a.hi(), b.hi());
    const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    std::vector<double> fa(len), fb(len);
    for (std::size_t i = 0; i < len; ++i) {
        const std::int64_t k = lo + static_cast<std::int64_t>(i);
        fa[i] = a.cdf_at(k);
        fb[i] = b.cdf_at(k);
    }
    const auto idx = kernels::first_exceed(fa, fb, slack);
    if (!idx) return {true, 0, 0.0};
    const std::int64_t at = lo + static_cast<std::int64_t>(*idx);
    return {false, at, fb[*idx] - fa[*idx]};
}

std::pair<std::int64_t, std::int64_t> quantile_couple(const DiscreteDist& a,
                                                      const DiscreteDist& b, double u) {
    return {a.quantile(u), b.quantile(u)};
}

void write_csv(std::ostream& os, const DiscreteDist& dist,
               std::span<const std::pair<std::string, std::string>> comments) {
    char buf[64];
    for (const auto& [key, value] : comments) os << "# " << key << "=" << value << "\n";
    os << "k,pmf,cdf\n";
    const auto pmf = dist.pmf();
    const auto cdf = dist.cdf();
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        os << (dist.lo() + static_cast<std::int64_t>(i));
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g", pmf[i], cdf[i]);
        os << buf << "\n";
    }
    std::snprintf(buf, sizeof buf, "%.17g", dist.tail_mass());
    os << "# tail_mass=" << buf << "\n";
}

DiscreteDist read_discrete_dist_csv(std::istream& is) {
    std::string line;
    bool header_seen = false;
    std::int64_t lo = 0;
    bool lo_set = false;
    std::vector<double> pmf;
    double tail = 0.0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("tail_mass=");
            if (pos != std::string::npos) tail = std::stod(line.substr(pos + 10));
            continue;
        }
        if (!header_seen) {
            if (line.rfind("k,pmf,cdf", 0) != 0)
                throw std::runtime_error("DiscreteDist csv: bad header '" + line + "'");
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        std::string field;
        std::getline(row, field, ',');
        const std::int64_t k = std::stoll(field);
        std::getline(row, field, ',');
        const double p = std::stod(field);
        if (!lo_set) {
            lo = k;
            lo_set = true;
        } else if (k != lo + static_cast<std::int64_t>(pmf.size())) {
            throw std::runtime_error("DiscreteDist csv: non-contiguous support");
        }
        pmf.push_back(p);
    }
    if (!header_seen || pmf.empty())
        throw std::runtime_error("DiscreteDist csv: no data rows");
    return DiscreteDist(lo, std::move(pmf), tail, std::max(tail, 0.0));
}

}  // namespace domrt
