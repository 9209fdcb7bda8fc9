#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sgr {

// Binomial coefficient; throws on overflow of uint64.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            throw std::overflow_error("binomial: overflow");
        r = r * num / i;
    }
    return r;
}

// base^exp, saturating at cap instead of overflowing.
inline std::uint64_t ipow_capped(std::uint64_t base, int exp,
                                 std::uint64_t cap = std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap;
        r *= base;
    }
    return r;
}

// Exact integer ceiling of n^(1/q): the smallest r with r^q >= n.
// Monotone search, no floating point.
inline int q_root(std::uint64_t n, int q) {
    if (n < 1 || q < 1) throw std::invalid_argument("q_root: need n >= 1, q >= 1");
    std::uint64_t lo = 1, hi = 1;
    while (ipow_capped(hi, q, std::numeric_limits<std::uint64_t>::max()) < n) hi *= 2;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (ipow_capped(mid, q) >= n)
            hi = mid;
        else
            lo = mid + 1;
    }
    return static_cast<int>(lo);
}

// n, exponent q, r = ceil(n^(1/q)) and the exact powers r^0..r^q.
struct RootScale {
    std::uint64_t n = 1;
    int q = 1;
    int r = 1;
    std::vector<std::uint64_t> powers;

    RootScale() = default;
    RootScale(std::uint64_t n_, int q_) : n(n_), q(q_), r(q_root(n_, q_)) {
        powers.resize(q + 1);
        powers[0] = 1;
        for (int i = 1; i <= q; ++i) powers[i] = powers[i - 1] * static_cast<std::uint64_t>(r);
    }
};

namespace detail {

// Rational brackets for e^t, scaled by 1e18. Enough for the exponents the
// bound checks use; extend the table if larger p ever shows up.
struct EPowBracket {
    unsigned __int128 lo;
    unsigned __int128 hi;
};

inline EPowBracket e_pow_bracket(int t) {
    auto v = [](std::uint64_t x) { return static_cast<unsigned __int128>(x); };
    switch (t) {
        case 1: return {v(2718281828459045235ULL), v(2718281828459045236ULL)};
        case 2: return {v(7389056098930650227ULL), v(7389056098930650228ULL)};
        case 3: return {v(2008553692318766774ULL) * 10 + 0, v(2008553692318766774ULL) * 10 + 1};
        case 4: return {v(5459815003314423907ULL) * 10 + 8, v(5459815003314423907ULL) * 10 + 9};
        default: throw std::invalid_argument("e_pow_bracket: exponent out of table");
    }
}

constexpr unsigned __int128 kEScale = static_cast<unsigned __int128>(1000000000000000000ULL);

}  // namespace detail

// Exact test of m >= n^(1/t) / e for integers m >= 0, n >= 1, 1 <= t <= 4,
// done as (m*e)^t >= n with rational brackets for e^t. The brackets are tight
// enough that no case in range is ambiguous; if one ever is, this throws
// rather than guessing.
inline bool meets_e_lower_bound(std::uint64_t m, std::uint64_t n, int t) {
    auto br = detail::e_pow_bracket(t);
    unsigned __int128 mt = 1;
    for (int i = 0; i < t; ++i) mt *= m;
    unsigned __int128 target = static_cast<unsigned __int128>(n) * detail::kEScale;
    if (mt * br.lo >= target) return true;
    if (mt * br.hi < target) return false;
    throw std::runtime_error("meets_e_lower_bound: bracket too coarse for input");
}

// ceil(n^(1/t) / e): smallest m with m >= n^(1/t)/e.
inline std::uint64_t ceil_root_over_e(std::uint64_t n, int t) {
    std::uint64_t m = 0;
    while (!meets_e_lower_bound(m, n, t)) ++m;
    return m;
}

// FNV-1a, used for input digests in reports.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace sgr
