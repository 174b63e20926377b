// Acceptance gate: runs every top-level criterion at its stated tolerance
// and time budget, printing one pass/fail line per criterion.

#include "qlfun/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

using qlfun::SuiteParams;
using qlfun::VerificationReport;

struct Criterion {
    int id;
    std::string label;
    double budget_seconds;
    std::vector<std::string> suites;
};

bool run_criterion(const Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    long cases = 0;
    std::string detail;
    try {
        for (const std::string& suite : c.suites) {
            VerificationReport rep = qlfun::run_suite(suite, SuiteParams{});
            ok = ok && rep.ok();
            cases += rep.cases();
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string(" exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = elapsed <= c.budget_seconds;
    bool pass = ok && in_budget;
    std::printf("%s  [%2d] %-58s %6ld cases  %6.2fs / %gs%s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.label.c_str(), cases, elapsed, c.budget_seconds,
                in_budget ? "" : "  (over budget)", detail.c_str());
    std::fflush(stdout);
    return pass;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Eq.(4) == Eq.(5), n<=8, x<=5, 20 random q, exact", 1.0, {"eq5"}},
        {2, "Eq.(12)/(13), n<=10, m<=8, 20 random q, exact", 2.0, {"eq13"}},
        {3, "distribution relation, m in {1,3,5}, n<=5, exact", 2.0, {"dist"}},
        {4, "Proposition 2 & Theorem 4 interpolation, 1e-8", 5.0, {"prop2", "thm4"}},
        {5, "Eq.(14) two forms & Eq.(15) decomposition, 1e-8", 5.0, {"eq14", "eq15"}},
        {6, "Eq.(17) partial-zeta interpolation mod p^(N-2), N=10", 10.0, {"eq17"}},
        {7, "Eqs.(18-1)/(20) l-function interpolation mod p^(N-2)", 10.0, {"eq18-1", "eq20"}},
        {8, "Eq.(21) & Kummer congruences mod p", 5.0, {"eq21"}},
        {9, "Eqs.(22)/(22-1)/(23), exhaustive r<=10, k+j<=10, exact", 1.0, {"eq22-23"}},
        {10, "Eq.(24) residue expansion mod p^(N-2), N=8", 30.0, {"eq24"}},
        {11, "Theorem 5 reconstruction mod p^(N-2) (+ literal report)", 60.0, {"thm5"}},
        {12, "q = 1 corollary via the classical path mod p^(N-2)", 10.0, {"q1-corollary"}},
        {13, "Remark A exact identity, p in {3,5,7,11}, 20 random q", 1.0, {"remark-a"}},
        {14, "integrality v_p(E_{m,q}) >= 0, p in {3,5,7}, m<=12", 1.0, {"integrality"}},
        {15, "Volkenborn approximants: exponents nondecreasing", 10.0, {"volkenborn"}},
    };

    int failures = 0;
    for (const Criterion& c : criteria)
        if (!run_criterion(c)) ++failures;
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d criteria failed\n", failures);
    return 1;
}
