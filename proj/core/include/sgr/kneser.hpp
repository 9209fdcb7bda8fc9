#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgr/balance.hpp"
#include "sgr/signed_graph.hpp"

namespace sgr {

// A signed k-subset of [n]: k nonzero integers in [-n..n] with pairwise
// distinct absolute values. Kept sorted by absolute value.
struct SignedSubset {
    int ground_n = 0;
    std::vector<int> elems;

    int k() const { return static_cast<int>(elems.size()); }
    std::string to_string() const;  // e.g. "1,-2,3"
    static SignedSubset parse(int ground_n, const std::string& text);

    // Bit i encodes +(i+1), bit n+i encodes -(i+1).
    unsigned __int128 mask() const;

    friend bool operator==(const SignedSubset&, const SignedSubset&) = default;
};

SignedSubset negated(const SignedSubset& s);

// All C(n,k) * 2^k signed k-subsets: absolute-value combinations in
// lexicographic order, then sign patterns in binary order (bit j set makes
// the j-th smallest element negative).
std::vector<SignedSubset> signed_subsets(int n, int k);

// Signs alternate when the elements are listed by increasing absolute value.
bool is_alternating(const SignedSubset& s);

// A generated graph together with its vertex <-> subset bijection.
struct KneserLabeling {
    SignedGraph graph;
    std::vector<SignedSubset> subsets;
    int ground_n = 0;
    int k = 0;

    int index_of(const SignedSubset& s) const;
};

// Kneser signed graph: vertices are signed k-subsets; AB is positive when
// A and -B are disjoint, negative when A and B are (both at once: digon).
KneserLabeling kneser_signed(int n, int k, int threads = 1,
                             std::uint64_t max_vertices = 1'000'000);

// Subgraph induced by alternating subsets (built directly; same edge rule).
KneserLabeling schrijver_signed(int n, int k, int threads = 1,
                                std::uint64_t max_vertices = 1'000'000);

// Closed form for the negative girth of the Kneser signed graph:
// 1 + ceil(k / (n-k)) for n > k, infinite (nullopt) for n = k.
std::optional<int> kneser_girth_closed_form(int n, int k);

// Antitwins: equal neighborhoods and opposite signs toward every common
// neighbor, evaluated outside the pair itself.
std::vector<std::pair<int, int>> antitwin_pairs(const SignedGraph& g);

// Deletes one vertex of each antitwin pair, keeping the member with the
// lexicographically smaller neighborhood signature. Throws unless every
// vertex has exactly one antitwin.
SignedGraph reduce_double_switching(const SignedGraph& g);

// Label-aware reduction: keeps the subset whose smallest-absolute-value
// element is positive.
KneserLabeling reduce_labeled(const KneserLabeling& kl);

// The explicit short inconsistent cycle: A_1 = [k], each next subset obtained
// by shifting along the cyclic ground order 1..n,-1..-n by n-k positions.
// All edges positive except the closing one. Requires k < n < 2k.
struct ShiftCycle {
    std::vector<SignedSubset> subsets;
    std::vector<Sign> signs;  // signs[i] between subsets[i] and subsets[i+1 mod l]

    int length() const { return static_cast<int>(subsets.size()); }
};

ShiftCycle shift_cycle(int n, int k);

// Checks the edge rule, distinctness and the closed-form length directly on
// the subsets; throws std::runtime_error when anything fails.
void validate_shift_cycle(int n, int k, const ShiftCycle& c);

// Maps the witness onto vertex ids of a built Kneser graph.
NegativeCycle to_vertex_cycle(const ShiftCycle& c, const KneserLabeling& kl);

// n-vertex construction maximizing negative girth at fixed balanced chromatic
// number p: the reduced Schrijver graph on the largest feasible parameter k,
// padded with isolated vertices.
struct GirthExtremalWitness {
    SignedGraph graph;  // exactly n_target vertices
    int p = 0;
    int k = 0;
    std::uint64_t core_order = 0;  // C(p+k-1, k)
    int predicted_chi_b = 0;
    int predicted_girth_at_least = 0;  // 1 + ceil(k/(p-1))
};

GirthExtremalWitness max_girth_construction(int p, int n_target,
                                            std::uint64_t max_vertices = 1'000'000);

}  // namespace sgr
