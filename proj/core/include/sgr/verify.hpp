#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgr/budget.hpp"

namespace sgr {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyResult {
    std::vector<CheckLine> lines;
    bool budget_exhausted = false;

    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    std::size_t passed() const {
        std::size_t c = 0;
        for (const auto& l : lines) c += l.pass;
        return c;
    }
};

// Closed-form negative girth of Kneser signed graphs, exhaustively for
// 1 <= k <= n <= n_max, plus the Schrijver >= Kneser comparison and the
// (6,4) pair that gates the alternating-subset convention.
VerifyResult verify_kneser_formula(int n_max, int threads = 1);

// Shift-cycle witnesses for all k < n < 2k, n <= n_max: edge rule, length,
// and membership in the built graph at small orders.
VerifyResult verify_shift_witnesses(int n_max);

// chi_b of reduced Schrijver graphs equals n-k+1 whenever C(n,k) <= core_cap.
VerifyResult verify_reduced_schrijver_chib(std::uint64_t core_cap = 15, int n_cap = 15,
                                           const SearchBudget& budget = {});

// Extremal construction sweep for p in {2,3}: chi_b = p where the core is
// small enough to decide exactly, measured girth >= ceil(n^(1/(p-1))/e).
VerifyResult verify_extremal_bounds(int threads = 1, const SearchBudget& budget = {});

// Ball-colorability hypothesis and q-round peeling, including the negative
// 25-cycle success case and the all-negative K_9 failure witness.
VerifyResult verify_peeling(int threads = 1, const SearchBudget& budget = {});

// Layer certificates and the quadratic girth bound over the chi3 corpus.
VerifyResult verify_girth_bound_corpus(const SearchBudget& budget = {});

// The 13-vertex witness gate.
VerifyResult verify_myc13();

// Minimum-order searches: (3,2) -> 3, (3,3) -> 5 with the all-negative K_5
// as the unique class, (4,3) >= 5 by exhausting n <= 4.
VerifyResult verify_minimum_order_searches(int threads = 1, const SearchBudget& budget = {});

// Production algorithms against the brute-force oracles: exhaustive over all
// signed graphs on <= exhaustive_n vertices, then seeded random graphs.
VerifyResult verify_oracle_agreement(int exhaustive_n = 4, int random_cases = 500,
                                     int random_n_max = 12, std::uint64_t seed = 20240901);

// Switching/permutation invariance of balance, girth, chi_b and the
// canonical form over seeded random cases.
VerifyResult verify_invariance_suite(int cases = 200, std::uint64_t seed = 20240902);

}  // namespace sgr
