#pragma once

#include "qlfun/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlfun {

// Parameters accepted by the named verification suites; unset fields fall
// back to each suite's documented default grid.  Randomized suites draw
// from a fixed-seed generator so reports are reproducible.
struct SuiteParams {
    std::optional<long> p;
    std::optional<Rational> q;
    std::optional<long> prec;
    std::optional<long> trials;
    std::optional<long> nmax;
    std::optional<long> mmax;
    std::optional<long> kmax;
    std::optional<long> rmax;
    std::optional<long> r;
    std::optional<long> k;
    std::optional<long> j;
    std::optional<double> eps;
    unsigned long seed = 20060515;
};

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

// Runs one named identity suite and returns its report.
VerificationReport run_suite(const std::string& name, const SuiteParams& params = {});

}  // namespace qlfun
