#include <doctest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "specgenus/distribution.hpp"
#include "specgenus/errors.hpp"
#include "specgenus/invariants.hpp"

using namespace specgenus;

namespace {

EmpiricalMeasure qh(std::vector<Rational> w) { return EmpiricalMeasure(quasihom_spectrum(w)); }

EmpiricalMeasure homog(int n, std::int64_t d) {
    return qh(std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(1, d)));
}

const EmpiricalMeasure kCusp = qh({Rational(1, 2), Rational(1, 3)});
const EmpiricalMeasure kOdp(SpectralMultiset(1, {{Rational(1), 1}}));

}  // namespace

TEST_SUITE("distribution") {

TEST_CASE("saito cdf values") {
    for (int n = 0; n <= 5; ++n) {
        CHECK(saito_cdf(n, Rational(n + 1)) == Rational(1));
        CHECK(saito_cdf(n, Rational(0)) == Rational(0));
        CHECK(saito_cdf(n, Rational(1)) == Rational(1) / Rational(factorial(static_cast<unsigned>(n + 1))));
    }
    CHECK(saito_cdf(1, Rational(1)) == Rational(1, 2));
    CHECK(saito_cdf(1, Rational(3, 2)) == Rational(7, 8));
    CHECK_THROWS_AS(saito_cdf(1, Rational(-1, 10)), DomainError);
    CHECK_THROWS_AS(saito_cdf(1, Rational(21, 10)), DomainError);
}

TEST_CASE("piecewise representation agrees with inclusion-exclusion") {
    for (int n = 0; n <= 4; ++n) {
        const SaitoDensity density(n);
        for (int j = 0; j <= 40; ++j) {
            const Rational s(j * (n + 1), 40);
            CHECK(density.cdf(s) == saito_cdf(n, s));
        }
    }
}

TEST_CASE("saito symmetry and monotonicity") {
    for (int n = 1; n <= 4; ++n) {
        Rational prev(-1);
        for (int j = 0; j <= 60; ++j) {
            const Rational s(j * (n + 1), 60);
            const Rational c = saito_cdf(n, s);
            CHECK(c >= prev);
            CHECK(c + saito_cdf(n, Rational(n + 1) - s) == Rational(1));
            prev = c;
        }
    }
}

TEST_CASE("saito moments equal sum-of-uniforms moments") {
    for (int n = 0; n <= 4; ++n) {
        const SaitoDensity density(n);
        CHECK(density.moment(0) == Rational(1));
        CHECK(density.mean() == Rational(n + 1, 2));
        CHECK(density.variance() == Rational(n + 1, 12));
    }
    // E[(U0+U1)^3] = 2 E[U^3] + 6 E[U^2] E[U] = 1/2 + 1 = 3/2
    CHECK(SaitoDensity(1).moment(3) == Rational(3, 2));
}

TEST_CASE("empirical moments") {
    Moments m = measure_moments(kCusp);
    CHECK(m.mean == Rational(0));
    CHECK(m.variance == Rational(1, 36));
    m = measure_moments(kOdp);
    CHECK(m.mean == Rational(0));
    CHECK(m.variance == Rational(0));
    m = measure_moments(homog(1, 3));
    CHECK(m.mean == Rational(0));
    CHECK(m.variance == Rational(1, 18));
    CHECK(kCusp.cdf(Rational(5, 6)) == Rational(1, 2));
    CHECK(kCusp.cdf(Rational(1, 2)) == Rational(0));
}

TEST_CASE("Hertling gap vanishes on quasi-homogeneous spectra") {
    CHECK(hertling_gap(kCusp) == Rational(0));
    CHECK(hertling_gap(kOdp) == Rational(0));
    for (int trial = 0; trial < 60; ++trial) {
        const int vars = static_cast<int>(oracle::uniform(1, 4));
        std::vector<Rational> w;
        for (int i = 0; i < vars; ++i) w.emplace_back(1, oracle::uniform(2, 8));
        const EmpiricalMeasure m = qh(w);
        CHECK(hertling_gap(m) == Rational(0));
        CHECK(measure_moments(m).mean == Rational(vars - 2, 2));
    }
    for (auto kind : {Dim1Kind::x_times, Dim1Kind::xy_times}) {
        CHECK(hertling_gap(qh(dim1_weights(kind, 4, 7))) == Rational(0));
    }
}

TEST_CASE("Hertling strong criterion") {
    CHECK(hertling_strong_criterion(kCusp));
    CHECK(hertling_strong_criterion(kOdp));
    CHECK_FALSE(hertling_strong_criterion(homog(1, 12)));
    CHECK_THROWS_AS(hertling_strong_criterion(homog(2, 3)), DimensionError);
    CHECK_THROWS_AS(hertling_strong_criterion(EmpiricalMeasure(SpectralMultiset(1, {{Rational(1, 2), 1}}))),
                    ConsistencyError);
}

TEST_CASE("cdf distance") {
    CHECK(sup_cdf_distance(kOdp, SaitoDensity(1), 1000) == Rational(1, 2));
    // atoms j/grid of x^grid sit on the grid; the distance is the atom mass
    for (std::int64_t grid : {10, 50, 200}) {
        const EmpiricalMeasure atoms = qh({Rational(1, grid)});
        CHECK(sup_cdf_distance(atoms, SaitoDensity(0), grid) <= Rational(1, grid));
    }
    CHECK(sup_cdf_distance(homog(1, 40), SaitoDensity(1), 1000) < Rational(1, 10));
    CHECK_THROWS_AS(sup_cdf_distance(kOdp, SaitoDensity(2), 10), DimensionError);
    CHECK_THROWS_AS(sup_cdf_distance(kOdp, SaitoDensity(1), 0), DomainError);
}

TEST_CASE("cdf distance is nonincreasing along the homogeneous curve family") {
    Rational prev(2);
    for (std::int64_t d : {5, 10, 20, 40}) {
        const Rational dist = sup_cdf_distance(homog(1, d), SaitoDensity(1), 1000);
        CHECK(dist <= prev);
        prev = dist;
    }
}

TEST_CASE("family diagnostics") {
    std::vector<FamilyMember> family;
    for (std::int64_t d = 2; d <= 40; ++d) family.push_back({std::to_string(d), homog(1, d)});
    const FamilyReport r = family_diagnostics(family, 200);
    CHECK(r.rows.size() == 39);
    CHECK(r.genus_limit == Rational(1, 6));
    CHECK(r.geometric_limit == Rational(1, 2));
    CHECK(r.min_alpha_decreasing == true);
    CHECK(r.ratio_sg_increasing_below_limit == true);
    CHECK(r.final_sg_gap < Rational(1, 20));
    CHECK(r.final_pg_gap < Rational(1, 20));
    CHECK(r.rows.back().mu == 1521);
    CHECK(r.rows.back().ratio_pg == Rational(780, 1521));

    const std::string csv = family_csv(r);
    CHECK(csv.rfind("parameter,mu,min_alpha,ratio_pg,ratio_sg,cdf_distance\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 40);
    const nlohmann::json j = to_json(r);
    CHECK(j["schema"] == 1);
    CHECK(j["members"].size() == 39);

    const FamilyReport single = family_diagnostics({family.front()});
    CHECK_FALSE(single.min_alpha_decreasing.has_value());
    CHECK_FALSE(single.ratio_sg_increasing_below_limit.has_value());

    CHECK_THROWS_AS(family_diagnostics({family[3], family[2]}), ValidationError);
    CHECK_THROWS_AS(family_diagnostics({}), ValidationError);
}

}
