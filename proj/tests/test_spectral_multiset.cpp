#include <doctest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "specgenus/errors.hpp"
#include "specgenus/spectral_multiset.hpp"

using namespace specgenus;

namespace {

SpectralMultiset z_power(std::int64_t a) {
    std::vector<SpectralEntry> e;
    for (std::int64_t j = 1; j < a; ++j) e.push_back({Rational(j, a), 1});
    return SpectralMultiset(0, e);
}

const SpectralMultiset kCusp(1, {{Rational(5, 6), 1}, {Rational(7, 6), 1}});

}  // namespace

TEST_SUITE("exact_core") {

TEST_CASE("multiset construction merges and sorts") {
    const SpectralMultiset m(1, {{Rational(7, 6), 1}, {Rational(5, 6), 2}, {Rational(7, 6), 1}, {Rational(1), 0}});
    REQUIRE(m.entries().size() == 2);
    CHECK(m.entries()[0] == SpectralEntry{Rational(5, 6), 2});
    CHECK(m.entries()[1] == SpectralEntry{Rational(7, 6), 2});
    CHECK(m.total_multiplicity() == 4);
    CHECK_THROWS_AS(SpectralMultiset(1, {{Rational(1), -1}}), ValidationError);
}

TEST_CASE("cusp genera") {
    CHECK(kCusp.spectral_genus() == Rational(1, 6));
    CHECK(kCusp.geometric_genus() == 1);
    CHECK(kCusp.is_symmetric());
    CHECK(kCusp.in_open_range());
    CHECK(kCusp.min_exponent() == Rational(5, 6));
    CHECK(kCusp.max_exponent() == Rational(7, 6));
    CHECK(kCusp.unshifted().front().exponent == Rational(-1, 6));
}

TEST_CASE("sum product with z^7") {
    const SpectralMultiset h = multiset_sum_product(kCusp, z_power(7));
    CHECK(h.dimension() == 2);
    CHECK(h.total_multiplicity() == 12);
    CHECK(h.min_exponent() == Rational(41, 42));
    CHECK(h.is_symmetric());
    // hand enumeration: 5/6 + j/7 and 7/6 + j/7
    std::map<Rational, std::int64_t> expect;
    for (int j = 1; j <= 6; ++j) {
        ++expect[Rational(5, 6) + Rational(j, 7)];
        ++expect[Rational(7, 6) + Rational(j, 7)];
    }
    std::map<Rational, std::int64_t> got;
    for (const auto& e : h.entries()) got[e.exponent] = e.multiplicity;
    CHECK(got == expect);
}

TEST_CASE("unit is the identity and two A1 give the A1 surface-point") {
    CHECK(multiset_sum_product(kCusp, SpectralMultiset::unit()) == kCusp);
    const SpectralMultiset a1 = z_power(2);
    const SpectralMultiset odp = multiset_sum_product(a1, a1);
    CHECK(odp == SpectralMultiset(1, {{Rational(1), 1}}));
}

TEST_CASE("fractional division reproduces x^3+y^3") {
    const Rational third(1, 3);
    ExponentPolynomial num{{third, 1}, {Rational(1), -1}};
    ExponentPolynomial den{{Rational(0), 1}, {third, -1}};
    const auto n2 = exponent_poly_multiply(num, num);
    const auto d2 = exponent_poly_multiply(den, den);
    const SpectralMultiset m = fractional_poly_divide(n2, d2, 1);
    CHECK(m == SpectralMultiset(1, {{Rational(2, 3), 1}, {Rational(1), 2}, {Rational(4, 3), 1}}));
}

TEST_CASE("fractional division of cusp weights") {
    const Rational h(1, 2), t(1, 3);
    const auto num = exponent_poly_multiply({{h, 1}, {Rational(1), -1}}, {{t, 1}, {Rational(1), -1}});
    const auto den = exponent_poly_multiply({{Rational(0), 1}, {h, -1}}, {{Rational(0), 1}, {t, -1}});
    CHECK(fractional_poly_divide(num, den, 1) == kCusp);
}

TEST_CASE("fractional division rejects remainders") {
    // (T^{2/5} - T) / (1 - T^{2/5}) is not a polynomial in T^{1/5}
    const Rational w(2, 5);
    CHECK_THROWS_AS(fractional_poly_divide({{w, 1}, {Rational(1), -1}}, {{Rational(0), 1}, {w, -1}}, 0),
                    NonExactDivision);
    CHECK_THROWS_AS(fractional_poly_divide({{Rational(0), 1}}, {{Rational(1, 2), 1}, {Rational(0), -1}}, 0),
                    NonExactDivision);
}

TEST_CASE("property: products of random Brieskorn-Pham pieces") {
    for (int trial = 0; trial < 60; ++trial) {
        const int vars = static_cast<int>(oracle::uniform(1, 4));
        std::vector<std::int64_t> a;
        SpectralMultiset acc = SpectralMultiset::unit();
        std::int64_t mu = 1;
        for (int i = 0; i < vars; ++i) {
            a.push_back(oracle::uniform(2, 7));
            acc = multiset_sum_product(acc, z_power(a.back()));
            mu *= a.back() - 1;
        }
        CHECK(acc.dimension() == vars - 1);
        CHECK(acc.total_multiplicity() == mu);
        CHECK(acc.is_symmetric());
        CHECK(acc.in_open_range());
        std::map<Rational, std::int64_t> got;
        for (const auto& e : acc.entries()) got[e.exponent] = e.multiplicity;
        CHECK(got == oracle::brieskorn_pham_spectrum(a));
    }
}

TEST_CASE("json round trip") {
    const SpectralMultiset h = multiset_sum_product(kCusp, z_power(5));
    const nlohmann::json j = to_json(h);
    CHECK(j.is_array());
    CHECK(j[0]["exponent"] == "31/30");
    CHECK(spectral_multiset_from_json(nlohmann::json::parse(j.dump()), 2) == h);
}

}
