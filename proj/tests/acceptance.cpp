// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Run directly or through ctest.

#include <chrono>
#include <cstdio>
#include <string>

#include "sgr/verify.hpp"

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int number, const std::string& label, const sgr::VerifyResult& result,
            double seconds) {
    bool pass = result.all_pass() && !result.budget_exhausted;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s — %zu/%zu checks (%.1fs)\n", pass ? "PASS" : "FAIL",
                number, label.c_str(), result.passed(), result.lines.size(), seconds);
    if (!pass) {
        for (const auto& line : result.lines)
            if (!line.pass)
                std::printf("         failed: %s%s%s\n", line.name.c_str(),
                            line.detail.empty() ? "" : " — ", line.detail.c_str());
        if (result.budget_exhausted) std::printf("         (budget exhausted)\n");
    }
}

sgr::VerifyResult filter(const sgr::VerifyResult& in, const std::string& prefix, bool keep) {
    sgr::VerifyResult out;
    out.budget_exhausted = in.budget_exhausted;
    for (const auto& line : in.lines)
        if ((line.name.rfind(prefix, 0) == 0) == keep) out.lines.push_back(line);
    return out;
}

}  // namespace

int main() {
    const int threads = 2;

    {
        Timer t;
        sgr::VerifyResult formula = sgr::verify_kneser_formula(7, threads);
        sgr::VerifyResult remark = filter(formula, "kneser-6-4", true);
        {
            sgr::VerifyResult r2 = filter(formula, "schrijver-6-4", true);
            remark.lines.insert(remark.lines.end(), r2.lines.begin(), r2.lines.end());
        }
        sgr::VerifyResult sweep = filter(filter(formula, "kneser-6-4", false),
                                         "schrijver-6-4", false);
        double elapsed = t.seconds();
        report(1, "Kneser girth closed form, exhaustive n <= 7", sweep, elapsed);
        report(2, "remark girth pair KS(6,4)=3, SS(6,4)=4", remark, 0.0);
    }
    {
        Timer t;
        report(3, "shift-cycle witnesses validate for k < n < 2k, n <= 9",
               sgr::verify_shift_witnesses(9), t.seconds());
    }
    {
        Timer t;
        report(4, "reduced Schrijver chi_b = n-k+1 for C(n,k) <= 15",
               sgr::verify_reduced_schrijver_chib(15, 15), t.seconds());
    }
    {
        Timer t;
        report(5, "extremal construction: chi_b = p, girth >= ceil(n^(1/(p-1))/e)",
               sgr::verify_extremal_bounds(threads), t.seconds());
    }
    {
        Timer t;
        report(6, "ball hypothesis and q-round peeling (C25 success, K9 witness)",
               sgr::verify_peeling(threads), t.seconds());
    }
    {
        Timer t;
        report(7, "quadratic girth bound certificates over the chi_b >= 3 corpus",
               sgr::verify_girth_bound_corpus(), t.seconds());
    }
    {
        Timer t;
        report(8, "13-vertex witness: order 13, chi_b = 3, girth = 4", sgr::verify_myc13(),
               t.seconds());
    }
    {
        Timer t;
        report(9, "minimum-order searches: (3,2)->3, (3,3)->5 unique, (4,3)>4",
               sgr::verify_minimum_order_searches(threads), t.seconds());
    }
    {
        Timer t;
        report(10, "oracle agreement: exhaustive n <= 4 plus 500 random graphs",
               sgr::verify_oracle_agreement(4, 500, 12), t.seconds());
    }
    {
        Timer t;
        report(11, "switching/permutation invariance suite, 200 seeded cases",
               sgr::verify_invariance_suite(200), t.seconds());
    }

    if (failures == 0) {
        std::printf("acceptance: all criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
