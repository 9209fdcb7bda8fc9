#include "sgr/kneser.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sgr/intmath.hpp"
#include "sgr/parallel.hpp"

namespace sgr {

namespace {

void check_subset(const SignedSubset& s) {
    if (s.ground_n < 0 || s.ground_n > 60)
        throw std::invalid_argument("SignedSubset: ground set out of supported range");
    int prev_abs = 0;
    for (int e : s.elems) {
        int a = std::abs(e);
        if (e == 0 || a > s.ground_n) throw std::invalid_argument("SignedSubset: element out of range");
        if (a <= prev_abs)
            throw std::invalid_argument("SignedSubset: elements must have distinct increasing |.|");
        prev_abs = a;
    }
}

unsigned __int128 negate_mask(unsigned __int128 m, int n) {
    unsigned __int128 full = (static_cast<unsigned __int128>(1) << (2 * n)) - 1;
    return ((m >> n) | (m << n)) & full;
}

}  // namespace

std::string SignedSubset::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) os << ',';
        os << elems[i];
    }
    return os.str();
}

SignedSubset SignedSubset::parse(int ground_n, const std::string& text) {
    SignedSubset s{ground_n, {}};
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) s.elems.push_back(std::stoi(tok));
    std::sort(s.elems.begin(), s.elems.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    check_subset(s);
    return s;
}

unsigned __int128 SignedSubset::mask() const {
    unsigned __int128 m = 0;
    for (int e : elems) {
        int bit = e > 0 ? e - 1 : ground_n + (-e) - 1;
        m |= static_cast<unsigned __int128>(1) << bit;
    }
    return m;
}

SignedSubset negated(const SignedSubset& s) {
    SignedSubset out{s.ground_n, s.elems};
    for (int& e : out.elems) e = -e;
    return out;
}

std::vector<SignedSubset> signed_subsets(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("signed_subsets: need 0 <= k <= n");
    std::vector<SignedSubset> out;
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i + 1;
    auto emit = [&]() {
        for (std::uint32_t pattern = 0; pattern < (1u << k); ++pattern) {
            SignedSubset s{n, combo};
            for (int j = 0; j < k; ++j)
                if (pattern >> j & 1) s.elems[j] = -s.elems[j];
            out.push_back(std::move(s));
        }
    };
    if (k == 0) {
        out.push_back(SignedSubset{n, {}});
        return out;
    }
    for (;;) {
        emit();
        int i = k - 1;
        while (i >= 0 && combo[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
    return out;
}

bool is_alternating(const SignedSubset& s) {
    for (std::size_t i = 1; i < s.elems.size(); ++i)
        if ((s.elems[i - 1] > 0) == (s.elems[i] > 0)) return false;
    return true;
}

int KneserLabeling::index_of(const SignedSubset& s) const {
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (subsets[i] == s) return static_cast<int>(i);
    return -1;
}

namespace {

KneserLabeling build_from_subsets(int n, int k, std::vector<SignedSubset> subsets, int threads) {
    const std::size_t m = subsets.size();
    std::vector<unsigned __int128> masks(m);
    for (std::size_t i = 0; i < m; ++i) masks[i] = subsets[i].mask();
    std::vector<unsigned __int128> neg_masks(m);
    for (std::size_t i = 0; i < m; ++i) neg_masks[i] = negate_mask(masks[i], n);

    std::vector<std::vector<SignedEdge>> chunk_edges(std::max(1, threads));
    parallel_chunks(m, threads, [&](std::size_t begin, std::size_t end, int chunk) {
        auto& edges = chunk_edges[chunk];
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                if ((masks[i] & neg_masks[j]) == 0)
                    edges.push_back({static_cast<int>(i), static_cast<int>(j), Sign::plus});
                if ((masks[i] & masks[j]) == 0)
                    edges.push_back({static_cast<int>(i), static_cast<int>(j), Sign::minus});
            }
        }
    });
    std::vector<SignedEdge> edges;
    for (auto& ce : chunk_edges) edges.insert(edges.end(), ce.begin(), ce.end());

    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = subsets[i].to_string();
    KneserLabeling kl;
    kl.graph = SignedGraph(static_cast<int>(m), std::move(edges), std::move(labels));
    kl.subsets = std::move(subsets);
    kl.ground_n = n;
    kl.k = k;
    return kl;
}

}  // namespace

KneserLabeling kneser_signed(int n, int k, int threads, std::uint64_t max_vertices) {
    if (k < 1 || k > n) throw std::invalid_argument("kneser_signed: need 1 <= k <= n");
    std::uint64_t count = binomial(n, k) * ipow_capped(2, k);
    if (count > max_vertices)
        throw std::invalid_argument("kneser_signed: vertex count exceeds the size guard");
    return build_from_subsets(n, k, signed_subsets(n, k), threads);
}

KneserLabeling schrijver_signed(int n, int k, int threads, std::uint64_t max_vertices) {
    if (k < 1 || k > n) throw std::invalid_argument("schrijver_signed: need 1 <= k <= n");
    std::uint64_t count = 2 * binomial(n, k);
    if (count > max_vertices)
        throw std::invalid_argument("schrijver_signed: vertex count exceeds the size guard");
    // Alternating subsets in the same enumeration order as signed_subsets:
    // per absolute-value combination the two alternating sign patterns.
    std::vector<SignedSubset> subsets;
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i + 1;
    auto emit = [&]() {
        for (int start_neg = 0; start_neg <= 1; ++start_neg) {
            SignedSubset s{n, combo};
            for (int j = 0; j < k; ++j)
                if ((j & 1) == (start_neg ? 0 : 1)) s.elems[j] = -s.elems[j];
            subsets.push_back(std::move(s));
        }
    };
    for (;;) {
        emit();
        int i = k - 1;
        while (i >= 0 && combo[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
    return build_from_subsets(n, k, std::move(subsets), threads);
}

std::optional<int> kneser_girth_closed_form(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("kneser_girth_closed_form: need 1 <= k <= n");
    if (n == k) return std::nullopt;
    return 1 + static_cast<int>((k + (n - k) - 1) / (n - k));
}

std::vector<std::pair<int, int>> antitwin_pairs(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            std::vector<int> zx, zy;
            for (int v : g.neighbors(x))
                if (v != y) zx.push_back(v);
            for (int v : g.neighbors(y))
                if (v != x) zy.push_back(v);
            if (zx != zy) continue;
            bool ok = true;
            for (int v : zx) {
                PairState sx = g.pair_state(x, v), sy = g.pair_state(y, v);
                PairState want = sy;
                if (sy == PairState::plus) want = PairState::minus;
                else if (sy == PairState::minus) want = PairState::plus;
                if (sx != want) {
                    ok = false;
                    break;
                }
            }
            if (ok) pairs.emplace_back(x, y);
        }
    }
    return pairs;
}

SignedGraph reduce_double_switching(const SignedGraph& g) {
    const int n = g.vertex_count();
    auto pairs = antitwin_pairs(g);
    std::vector<int> count(n, 0), twin(n, -1);
    for (auto [x, y] : pairs) {
        ++count[x];
        ++count[y];
        twin[x] = y;
        twin[y] = x;
    }
    for (int v = 0; v < n; ++v)
        if (count[v] != 1)
            throw std::runtime_error("reduce_double_switching: vertex " + std::to_string(v) +
                                     " has " + std::to_string(count[v]) +
                                     " antitwins (graph is not double switching)");

    auto signature = [&](int x, int other) {
        std::vector<std::uint8_t> sig;
        sig.reserve(n);
        for (int v = 0; v < n; ++v) {
            if (v == x || v == other) continue;
            sig.push_back(static_cast<std::uint8_t>(g.pair_state(x, v)));
        }
        return sig;
    };

    std::vector<int> keep;
    for (auto [x, y] : pairs) {
        auto sx = signature(x, y), sy = signature(y, x);
        keep.push_back(sx <= sy ? x : y);
    }
    std::sort(keep.begin(), keep.end());
    return induced(g, keep);
}

KneserLabeling reduce_labeled(const KneserLabeling& kl) {
    std::vector<int> keep;
    for (std::size_t i = 0; i < kl.subsets.size(); ++i)
        if (kl.subsets[i].elems.empty() || kl.subsets[i].elems.front() > 0)
            keep.push_back(static_cast<int>(i));
    std::vector<int> ids;
    KneserLabeling out;
    out.graph = induced(kl.graph, keep, &ids);
    out.subsets.reserve(ids.size());
    for (int id : ids) out.subsets.push_back(kl.subsets[id]);
    out.ground_n = kl.ground_n;
    out.k = kl.k;
    return out;
}

ShiftCycle shift_cycle(int n, int k) {
    if (!(k < n && n < 2 * k))
        throw std::invalid_argument("shift_cycle: requires k < n < 2k");
    const int len = 1 + (k + (n - k) - 1) / (n - k);
    auto element_at = [&](int pos) {
        pos %= 2 * n;
        return pos < n ? pos + 1 : -(pos - n + 1);
    };
    ShiftCycle out;
    for (int i = 0; i < len; ++i) {
        SignedSubset s{n, {}};
        int start = i * (n - k);
        for (int t = 0; t < k; ++t) s.elems.push_back(element_at(start + t));
        std::sort(s.elems.begin(), s.elems.end(),
                  [](int a, int b) { return std::abs(a) < std::abs(b); });
        check_subset(s);
        out.subsets.push_back(std::move(s));
    }
    out.signs.assign(len, Sign::plus);
    out.signs.back() = Sign::minus;  // closing edge subsets[len-1] -- subsets[0]
    return out;
}

void validate_shift_cycle(int n, int k, const ShiftCycle& c) {
    auto expected = kneser_girth_closed_form(n, k);
    if (!expected || c.length() != *expected)
        throw std::runtime_error("shift cycle: length differs from the closed form");
    for (int i = 0; i < c.length(); ++i)
        for (int j = i + 1; j < c.length(); ++j)
            if (c.subsets[i] == c.subsets[j]) throw std::runtime_error("shift cycle: repeated subset");
    Sign product = Sign::plus;
    for (int i = 0; i < c.length(); ++i) {
        const auto& a = c.subsets[i];
        const auto& b = c.subsets[(i + 1) % c.length()];
        unsigned __int128 ma = a.mask(), mb = b.mask();
        bool pos_edge = (ma & negate_mask(mb, n)) == 0;
        bool neg_edge = (ma & mb) == 0;
        Sign s = c.signs[i];
        if ((s == Sign::plus && !pos_edge) || (s == Sign::minus && !neg_edge))
            throw std::runtime_error("shift cycle: stated edge absent under the Kneser rule");
        product = product * s;
    }
    if (product != Sign::minus) throw std::runtime_error("shift cycle: sign product is positive");
}

NegativeCycle to_vertex_cycle(const ShiftCycle& c, const KneserLabeling& kl) {
    NegativeCycle out;
    for (const auto& s : c.subsets) {
        int idx = kl.index_of(s);
        if (idx < 0) throw std::runtime_error("shift cycle: subset not a vertex of the graph");
        out.vertices.push_back(idx);
    }
    out.signs = c.signs;
    return out;
}

GirthExtremalWitness max_girth_construction(int p, int n_target, std::uint64_t max_vertices) {
    if (p < 2) throw std::invalid_argument("max_girth_construction: requires p >= 2");
    if (n_target < p) throw std::invalid_argument("max_girth_construction: requires n >= p");
    int k = 1;
    while (binomial(p + k, k + 1) <= static_cast<std::uint64_t>(n_target)) ++k;
    std::uint64_t core = binomial(p + k - 1, k);

    KneserLabeling reduced = reduce_labeled(schrijver_signed(p + k - 1, k, 1, max_vertices));
    if (static_cast<std::uint64_t>(reduced.graph.vertex_count()) != core)
        throw std::logic_error("max_girth_construction: reduced core has unexpected order");

    std::vector<std::string> labels(n_target);
    for (int v = 0; v < reduced.graph.vertex_count(); ++v) labels[v] = reduced.graph.label(v);
    SignedGraph padded(n_target, reduced.graph.edges(), std::move(labels));

    GirthExtremalWitness out;
    out.graph = std::move(padded);
    out.p = p;
    out.k = k;
    out.core_order = core;
    out.predicted_chi_b = p;
    out.predicted_girth_at_least = 1 + (k + (p - 1) - 1) / (p - 1);
    return out;
}

}  // namespace sgr
