#pragma once
// Brute-force reference computations used only by tests. They share nothing with the
// library beyond Rational.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "specgenus/rational.hpp"

namespace oracle {

using specgenus::Rational;

// Calls fn on every k in [lo, hi]^dim.
inline void for_each_box(std::size_t dim, std::int64_t lo, std::int64_t hi,
                         const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> k(dim, lo);
    if (dim == 0 || lo > hi) return;
    while (true) {
        fn(k);
        std::size_t i = 0;
        while (i < dim && ++k[i] > hi) k[i++] = lo;
        if (i == dim) return;
    }
}

// sum of (1 - sum k_i w_i) over k_i >= 1 with sum k_i w_i < 1.
inline Rational weighted_genus(const std::vector<Rational>& w) {
    Rational total;
    std::int64_t hi = 1;
    for (const auto& wi : w) hi = std::max(hi, (Rational(1) / wi).ceil().get_si());
    for_each_box(w.size(), 1, hi, [&](const std::vector<std::int64_t>& k) {
        Rational s;
        for (std::size_t i = 0; i < w.size(); ++i) s += Rational(k[i]) * w[i];
        if (s < Rational(1)) total += Rational(1) - s;
    });
    return total;
}

// Spectrum of x0^a0 + ... + xn^an: all sums of j_i / a_i with 1 <= j_i < a_i.
inline std::map<Rational, std::int64_t> brieskorn_pham_spectrum(const std::vector<std::int64_t>& a) {
    std::map<Rational, std::int64_t> out;
    std::int64_t hi = 0;
    for (auto ai : a) hi = std::max(hi, ai - 1);
    for_each_box(a.size(), 1, hi, [&](const std::vector<std::int64_t>& j) {
        Rational s;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (j[i] >= a[i]) return;
            s += Rational(j[i], a[i]);
        }
        ++out[s];
    });
    return out;
}

// sum of (1 - x/a - y/b) over x, y >= 1 with x/a + y/b < 1.
inline Rational mordell_brute(std::int64_t a, std::int64_t b) {
    Rational total;
    for (std::int64_t x = 1; x < a; ++x) {
        for (std::int64_t y = 1; y < b; ++y) {
            const Rational v = Rational(x, a) + Rational(y, b);
            if (v < Rational(1)) total += Rational(1) - v;
        }
    }
    return total;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed5eedULL);
    return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace oracle
