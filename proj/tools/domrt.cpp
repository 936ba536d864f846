#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "domrt/analysis.hpp"
#include "domrt/io.hpp"
#include "domrt/suites.hpp"
#include "domrt/tail_bounds.hpp"

namespace {

using namespace domrt;

std::vector<std::pair<std::string, std::string>> effective_config(const CLI::App& cmd) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream dump(cmd.config_to_str(true, false));
    std::string line;
    while (std::getline(dump, line)) {
        if (line.empty() || line[0] == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        out.emplace_back("cfg:" + line.substr(0, eq), line.substr(eq + 1));
    }
    return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    return file;
}

MutationOp parse_op(const std::string& id, int n, int kbits, double rate, double mix_p,
                    double beta) {
    if (id == "onebit") return MutationOp::one_bit();
    if (id == "kbit") return MutationOp::k_bit(kbits);
    if (id == "stdbit")
        return MutationOp::standard_bit(rate < 0.0 ? 1.0 / static_cast<double>(n) : rate);
    if (id == "fitk") return MutationOp::fitness_dependent_k();
    if (id == "fitrate") return MutationOp::fitness_dependent_rate();
    if (id == "mixed") return MutationOp::mixed_one_two(mix_p);
    if (id == "heavy") return MutationOp::heavy_tailed(beta);
    throw std::invalid_argument(
        "unknown op id '" + id +
        "' (valid: onebit, kbit, stdbit, fitk, fitrate, mixed, heavy)");
}

GatedGeomSpec read_spec_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open spec file '" + path + "'");
    std::int64_t offset = 0;
    std::vector<GatedGeomTerm> terms;
    std::string word;
    while (is >> word) {
        if (word == "offset") {
            is >> offset;
        } else if (word == "term") {
            GatedGeomTerm t{};
            is >> t.gate >> t.succ;
            terms.push_back(t);
        } else if (word[0] == '#') {
            std::string rest;
            std::getline(is, rest);
        } else {
            throw std::runtime_error("spec file: unknown directive '" + word + "'");
        }
    }
    return GatedGeomSpec(offset, std::move(terms));
}

void print_row(std::ostream& os, double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    os << buf;
}

int cmd_simulate(CLI::App& cmd, const SimConfig& config, std::size_t runs,
                 std::uint64_t seed, const std::string& metric_name,
                 const std::string& out_path, const std::string& graph_path) {
    SimConfig effective = config;
    if (!graph_path.empty()) {
        std::ifstream gfile(graph_path);
        if (!gfile) throw std::runtime_error("cannot open graph file '" + graph_path + "'");
        effective.graph = WeightedGraph::read(gfile);
        effective.n = effective.graph->n();
    }
    const Metric metric =
        metric_name == "evaluations" ? Metric::evaluations : Metric::iterations;

    const auto records = collect_records(effective, runs, seed);
    std::int64_t censored = 0;
    SampleSet set;
    for (const auto& r : records) {
        censored += r.censored ? 1 : 0;
        if (!r.censored)
            set.values.push_back(metric == Metric::iterations ? r.iterations
                                                              : r.evaluations);
    }
    std::sort(set.values.begin(), set.values.end());
    set.n_samples = set.values.size();
    set.metric = metric;
    set.algo_id = effective.algo;
    set.bench_id = effective.algo == "sssp" || effective.algo == "sorting"
                       ? effective.algo
                       : effective.bench;
    set.n = effective.n;
    set.master_seed = seed;

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    auto comments = effective_config(cmd);
    comments.emplace_back("censored", std::to_string(censored));
    write_csv(os, set, comments);
    if (censored > 0) {
        std::cerr << "simulate: " << censored << " of " << runs
                  << " runs censored at budget " << effective.budget << "\n";
        return 2;
    }
    return 0;
}

int cmd_model(CLI::App& cmd, const std::string& preset, double eps,
              const std::map<std::string, double>& params,
              const std::optional<MutationOp>& op, const std::string& out_path) {
    const GatedGeomSpec spec = preset_spec(preset_by_id(preset, params, op));
    const DiscreteDist dist = exact_dist(spec, eps);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    auto comments = effective_config(cmd);
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", spec_mean(spec));
        comments.emplace_back("spec_mean", buf);
        std::snprintf(buf, sizeof buf, "%.17g", spec_variance(spec));
        comments.emplace_back("spec_variance", buf);
    }
    write_csv(os, dist, comments);
    return 0;
}

int cmd_bound(CLI::App& cmd, const std::string& family, const std::string& side_name,
              std::int64_t n, double p_min, double mu, double delta, double lambda,
              double s, double expect, double C, std::int64_t m, std::int64_t k,
              int grid, double grid_max, const std::string& validate_path,
              std::int64_t threshold, const std::string& out_path) {
    const bool lower_side = side_name == "lower";
    auto evaluate = [&](double dev) -> double {
        if (family == "janson1")
            return geom_sum_upper(UpperFamily::janson1, n, p_min, mu, dev);
        if (family == "janson2")
            return geom_sum_upper(UpperFamily::janson2, n, p_min, mu, dev);
        if (family == "scheideler")
            return lower_side ? geom_sum_lower(LowerFamily::scheideler, p_min, mu, dev)
                              : geom_sum_upper(UpperFamily::scheideler, n, p_min, mu, dev);
        if (family == "weak") return geom_sum_upper(UpperFamily::weak, n, p_min, mu, dev);
        if (family == "equal")
            return geom_sum_upper(UpperFamily::equal, n, p_min, mu, dev);
        if (family == "janson") return geom_sum_lower(LowerFamily::janson, p_min, mu, dev);
        if (family == "middle") return geom_sum_lower(LowerFamily::middle, p_min, mu, dev);
        if (family == "witt") {
            const auto w = witt_bounds(s, p_min, expect, dev);
            return lower_side ? w.lower : w.upper;
        }
        if (family == "harmonic") return harmonic_bound(n, C, dev).tail_bound;
        if (family == "harmonic-sum") return harmonic_sum_bound(n, m, C, dev);
        if (family == "coupon") return coupon_sum_bound(n, m, k, dev).tail_bound;
        throw std::invalid_argument(
            "unknown family '" + family +
            "' (valid: janson1, janson2, scheideler, weak, equal, janson, middle, "
            "witt, harmonic, harmonic-sum, coupon)");
    };

    const bool lambda_family =
        family == "witt" || family == "harmonic-sum";
    const double dev0 = lambda_family ? lambda : delta;

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    for (const auto& [key, value] : effective_config(cmd))
        os << "# " << key << "=" << value << "\n";
    os << (lambda_family ? "lambda" : "delta") << ",bound\n";
    if (grid > 1) {
        for (int g = 0; g < grid; ++g) {
            const double dev = grid_max * static_cast<double>(g) /
                               static_cast<double>(grid - 1);
            print_row(os, dev);
            os << ",";
            print_row(os, evaluate(dev));
            os << "\n";
        }
    } else {
        print_row(os, dev0);
        os << ",";
        print_row(os, evaluate(dev0));
        os << "\n";
    }

    if (!validate_path.empty()) {
        const GatedGeomSpec spec = read_spec_file(validate_path);
        const double bound = evaluate(dev0);
        const auto verdict = validate_bound(
            spec, threshold, bound, lower_side ? TailSide::lower : TailSide::upper);
        os << "# validate: " << (verdict.holds ? "PASS" : "FAIL") << " exact=";
        print_row(os, verdict.exact);
        os << " bound=";
        print_row(os, verdict.bound);
        os << "\n";
        std::cerr << (verdict.holds ? "PASS" : "FAIL") << "\n";
        if (!verdict.holds) return 3;
    }
    return 0;
}

int cmd_compare(const std::string& a_path, const std::string& b_path, double alpha) {
    const CdfInput a = read_cdf_input_file(a_path);
    const CdfInput b = read_cdf_input_file(b_path);
    auto to_cdf = [&](const CdfInput& input) {
        if (const auto* samples = std::get_if<SampleSet>(&input))
            return to_step_cdf(*samples, alpha);
        return to_step_cdf(std::get<DiscreteDist>(input));
    };
    const auto verdict = empirical_dominates(to_cdf(a), to_cdf(b));
    if (verdict.consistent) {
        std::cout << "consistent: no evidence against domination of a by b (alpha="
                  << alpha << ")\n";
        return 0;
    }
    std::cout << "refuted: F_a(" << verdict.at << ") + band < F_b(" << verdict.at
              << ") - band, cdf gap " << verdict.gap << "\n";
    return 3;
}

int cmd_report(CLI::App& cmd, const std::string& suite, std::uint64_t seed,
               const std::string& out_path, const std::string& plot_path) {
    if (suite == "list") {
        for (const auto& id : suites::ids()) std::cout << id << "\n";
        return 0;
    }
    const auto result = suites::run(suite, seed);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    for (const auto& [key, value] : effective_config(cmd))
        os << "# " << key << "=" << value << "\n";
    os << "suite,check,expected,observed,tolerance,pass\n";
    for (const auto& row : result.rows) {
        os << row.suite << "," << row.check << ",";
        print_row(os, row.expected);
        os << ",";
        print_row(os, row.observed);
        os << ",";
        print_row(os, row.tolerance);
        os << "," << (row.pass ? "1" : "0") << "\n";
    }
    if (!plot_path.empty() && !result.plot.empty()) {
        std::ofstream plot(plot_path);
        if (!plot) throw std::runtime_error("cannot open plot file '" + plot_path + "'");
        plot << "lambda,cdf_empirical,cdf_model,band\n";
        for (const auto& row : result.plot) {
            print_row(plot, row.lambda);
            plot << ",";
            print_row(plot, row.cdf_empirical);
            plot << ",";
            print_row(plot, row.cdf_model);
            plot << ",";
            print_row(plot, row.band);
            plot << "\n";
        }
    }
    return result.all_pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domrt: stochastic-domination runtime analysis toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "config file with key = value lines");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run an algorithm, write a SampleSet CSV");
    SimConfig sim_config;
    std::size_t sim_runs = 100;
    std::uint64_t sim_seed = 1;
    std::string sim_metric = "iterations", sim_out, sim_graph, sim_op;
    int sim_kbits = 2;
    double sim_mix_p = 0.5, sim_beta = 1.5;
    sim->add_option("--algo", sim_config.algo, "algorithm id")->required();
    sim->add_option("--bench", sim_config.bench, "benchmark id");
    sim->add_option("--n", sim_config.n, "problem dimension");
    sim->add_option("--runs", sim_runs, "number of independent runs");
    sim->add_option("--seed", sim_seed, "master seed");
    sim->add_option("--budget", sim_config.budget, "iteration budget per run");
    sim->add_option("--metric", sim_metric, "iterations|evaluations")
        ->check(CLI::IsMember({"iterations", "evaluations"}));
    sim->add_option("--out", sim_out, "output CSV path (- for stdout)");
    sim->add_option("--mu", sim_config.mu, "population size");
    sim->add_option("--lambda", sim_config.lambda, "offspring count");
    sim->add_option("--rate", sim_config.rate, "mutation rate (default 1/n)");
    sim->add_option("--op", sim_op, "mutation operator id for rls/ea");
    sim->add_option("--k", sim_config.jump_k, "jump parameter k");
    sim->add_option("--kbits", sim_kbits, "bits flipped by the kbit operator");
    sim->add_option("--mix-p", sim_mix_p, "one-bit probability of the mixed operator");
    sim->add_option("--beta", sim_beta, "heavy-tailed exponent");
    sim->add_option("--graph", sim_graph, "graph file for sssp");

    // model
    auto* model = app.add_subcommand("model", "exact distribution of a preset spec");
    std::string model_preset, model_out, model_op;
    double model_eps = 1e-9;
    std::map<std::string, double> model_params;
    double mp_n = 0, mp_k = 0, mp_mu = 0, mp_lambda = 0, mp_p = 0, mp_m = 0, mp_ell = 0,
           mp_a = 0;
    int model_kbits = 2;
    double model_rate = -1.0, model_mix_p = 0.5, model_beta = 1.5;
    model->add_option("--preset", model_preset, "preset id")->required();
    model->add_option("--eps", model_eps, "truncation budget");
    model->add_option("--out", model_out, "output CSV path (- for stdout)");
    model->add_option("--n", mp_n, "dimension");
    model->add_option("--k", mp_k, "jump/coupon parameter");
    model->add_option("--mu", mp_mu, "population size");
    model->add_option("--lambda", mp_lambda, "offspring count");
    model->add_option("--p", mp_p, "mutation rate");
    model->add_option("--m", mp_m, "graph edges / summand count");
    model->add_option("--ell", mp_ell, "shortest-path edge bound");
    model->add_option("--a", mp_a, "target fitness");
    model->add_option("--op", model_op, "mutation operator id for lo presets");
    model->add_option("--kbits", model_kbits, "bits flipped by the kbit operator");
    model->add_option("--rate", model_rate, "rate for the stdbit operator");
    model->add_option("--mix-p", model_mix_p, "one-bit probability of the mixed operator");
    model->add_option("--beta", model_beta, "heavy-tailed exponent");

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate a tail bound family");
    std::string bound_family, bound_side = "upper", bound_validate, bound_out;
    std::int64_t b_n = 1, b_m = 1, b_k = 1, b_threshold = 0;
    double b_pmin = 1.0, b_mu = 1.0, b_delta = 0.0, b_lambda = 0.0, b_s = 0.0,
           b_expect = 0.0, b_C = 1.0, b_grid_max = 2.0;
    int b_grid = 1;
    bound->add_option("--family", bound_family, "bound family id")->required();
    bound->add_option("--side", bound_side, "upper|lower (for scheideler/witt)")
        ->check(CLI::IsMember({"upper", "lower"}));
    bound->add_option("--n", b_n, "term count");
    bound->add_option("--pmin", b_pmin, "minimum success probability");
    bound->add_option("--mu", b_mu, "mean of the sum");
    bound->add_option("--delta", b_delta, "relative deviation");
    bound->add_option("--lambda", b_lambda, "absolute deviation");
    bound->add_option("--s", b_s, "sum of squared reciprocal probabilities");
    bound->add_option("--expect", b_expect, "mean for witt bounds");
    bound->add_option("--C", b_C, "harmonic constant");
    bound->add_option("--m", b_m, "summand count");
    bound->add_option("--k", b_k, "coupon types missing");
    bound->add_option("--grid", b_grid, "emit this many grid points");
    bound->add_option("--grid-max", b_grid_max, "grid upper end");
    bound->add_option("--validate", bound_validate, "gated-geometric spec file");
    bound->add_option("--threshold", b_threshold, "validation threshold");
    bound->add_option("--out", bound_out, "output CSV path (- for stdout)");

    // compare
    auto* compare = app.add_subcommand("compare", "empirical domination verdict");
    std::string cmp_a, cmp_b;
    double cmp_alpha = 0.01;
    compare->add_option("--a", cmp_a, "left CSV (tested as dominated)")->required();
    compare->add_option("--b", cmp_b, "right CSV (tested as dominating)")->required();
    compare->add_option("--alpha", cmp_alpha, "significance level");

    // report
    auto* report = app.add_subcommand("report", "run a verification suite");
    std::string rep_suite, rep_out, rep_plot;
    std::uint64_t rep_seed = 1;
    report->add_option("--suite", rep_suite, "suite id or 'list'")->required();
    report->add_option("--seed", rep_seed, "master seed");
    report->add_option("--out", rep_out, "summary CSV path (- for stdout)");
    report->add_option("--plot-out", rep_plot, "CDF overlay CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed()) {
            if (!sim_op.empty())
                sim_config.op = parse_op(sim_op, sim_config.n, sim_kbits,
                                         sim_config.rate, sim_mix_p, sim_beta);
            return cmd_simulate(*sim, sim_config, sim_runs, sim_seed, sim_metric,
                                sim_out, sim_graph);
        }
        if (model->parsed()) {
            auto add_if = [&](const char* name, double value) {
                if (model->count(std::string("--") + name) > 0)
                    model_params[name] = value;
            };
            add_if("n", mp_n);
            add_if("k", mp_k);
            add_if("mu", mp_mu);
            add_if("lambda", mp_lambda);
            add_if("p", mp_p);
            add_if("m", mp_m);
            add_if("ell", mp_ell);
            add_if("a", mp_a);
            std::optional<MutationOp> op;
            if (!model_op.empty())
                op = parse_op(model_op, static_cast<int>(mp_n), model_kbits, model_rate,
                              model_mix_p, model_beta);
            return cmd_model(*model, model_preset, model_eps, model_params, op,
                             model_out);
        }
        if (bound->parsed())
            return cmd_bound(*bound, bound_family, bound_side, b_n, b_pmin, b_mu,
                             b_delta, b_lambda, b_s, b_expect, b_C, b_m, b_k, b_grid,
                             b_grid_max, bound_validate, b_threshold, bound_out);
        if (compare->parsed()) return cmd_compare(cmp_a, cmp_b, cmp_alpha);
        if (report->parsed())
            return cmd_report(*report, rep_suite, rep_seed, rep_out, rep_plot);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
