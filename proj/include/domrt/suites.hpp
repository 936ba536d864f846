#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Verification suites confronting the closed-form models and bounds with
// Monte Carlo data. Each suite covers one numbered acceptance criterion and
// backs both `domrt report` and the acceptance test binary.

namespace domrt::suites {

struct CheckRow {
    int criterion;
    std::string suite;
    std::string check;
    double expected;
    double observed;
    double tolerance;
    bool pass;
};

struct PlotRow {
    double lambda;
    double cdf_empirical;
    double cdf_model;
    double band;
};

struct SuiteResult {
    std::string id;
    std::vector<CheckRow> rows;
    std::vector<PlotRow> plot;

    bool all_pass() const;
};

std::vector<std::string> ids();

/// Runs one suite; throws std::invalid_argument on an unknown id.
SuiteResult run(const std::string& id, std::uint64_t seed);

/// All suites, in criterion order.
std::vector<SuiteResult> run_all(std::uint64_t seed);

}  // namespace domrt::suites
