#include <doctest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "specgenus/errors.hpp"
#include "specgenus/invariants.hpp"
#include "specgenus/newton_diagram.hpp"
#include "specgenus/polynomial_parser.hpp"

using namespace specgenus;

namespace {

NewtonDiagram diagram(const std::string& poly) { return build_diagram(parse_polynomial(poly)); }

std::vector<Rational> rv(std::initializer_list<Rational> l) { return l; }

// Convenient supports in n+1 variables: axis points plus a few random interior points.
MonomialSupport random_convenient_support(int vars) {
    std::set<LatticePoint> pts;
    for (int i = 0; i < vars; ++i) {
        LatticePoint p(static_cast<std::size_t>(vars), 0);
        p[static_cast<std::size_t>(i)] = oracle::uniform(2, 9);
        pts.insert(p);
    }
    const auto extra = oracle::uniform(0, 3);
    for (int e = 0; e < extra; ++e) {
        LatticePoint p(static_cast<std::size_t>(vars));
        for (auto& c : p) c = oracle::uniform(0, 4);
        if (std::any_of(p.begin(), p.end(), [](auto c) { return c != 0; })) pts.insert(p);
    }
    return MonomialSupport(vars - 1, pts);
}

// phi by brute force over every (n+1)-subset hyperplane: the max of min is the same as the
// min over valid supporting hyperplanes, so evaluate min_F l_F using the library facets but
// check them independently here.
void check_facets_support_everything(const NewtonDiagram& d) {
    for (const auto& f : d.facets()) {
        for (auto c : f.normal) CHECK(c > 0);
        CHECK(f.points.size() >= static_cast<std::size_t>(d.dimension() + 1));
        for (const auto& p : d.support().points()) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < p.size(); ++i) s += f.normal[i] * p[i];
            CHECK(s >= f.level);
        }
        for (const auto& p : f.points) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < p.size(); ++i) s += f.normal[i] * p[i];
            CHECK(s == f.level);
        }
    }
}

}  // namespace

TEST_SUITE("newton_geometry") {

TEST_CASE("homogeneous diagonal has one facet") {
    for (int d = 2; d <= 9; ++d) {
        const NewtonDiagram nd = build_diagram(diagonal_support(1, d));
        REQUIRE(nd.facets().size() == 1);
        CHECK(nd.facets()[0].form() == rv({Rational(1, d), Rational(1, d)}));
        CHECK(nd.axis_intercepts()[0] == d);
        CHECK(nd.axis_intercepts()[1] == d);
        CHECK(nd.convenient());
        CHECK(volumes(nd) == rv({Rational(2 * d), Rational(d * d, 2)}));
    }
}

TEST_CASE("A_{2,2} germ: two facets") {
    const NewtonDiagram nd = diagram("(x^2+y^3)*(y^2+x^3)");
    CHECK(nd.minimal_points() == std::vector<LatticePoint>{{0, 5}, {2, 2}, {5, 0}});
    REQUIRE(nd.facets().size() == 2);
    std::set<std::vector<Rational>> forms;
    for (const auto& f : nd.facets()) forms.insert(f.form());
    CHECK(forms == std::set<std::vector<Rational>>{{Rational(3, 10), Rational(2, 10)}, {Rational(2, 10), Rational(3, 10)}});
    CHECK(phi(nd, rv({Rational(1), Rational(1)})) == Rational(1, 2));
    CHECK(phi(nd, LatticePoint{2, 2}) == Rational(1));
    CHECK(interior_lattice_points(nd) == std::vector<LatticePoint>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}});
    CHECK(interior_phi_deficit(nd) == Rational(13, 10));
    // two triangles (0,0),(0,5),(2,2) and (0,0),(2,2),(5,0): 5 + 5
    CHECK(volumes(nd) == rv({Rational(10), Rational(10)}));
    check_facets_support_everything(nd);
}

TEST_CASE("cusp") {
    const NewtonDiagram nd = diagram("x^2+y^3");
    CHECK(interior_lattice_points(nd) == std::vector<LatticePoint>{{1, 1}});
    CHECK(phi(nd, LatticePoint{1, 1}) == Rational(5, 6));
    CHECK(volumes(nd) == rv({Rational(5), Rational(3)}));
    CHECK(kouchnirenko_mu(nd) == Rational(2));
    CHECK(build_diagram(diagonal_support(1, 2)).facets().size() == 1);
    CHECK(interior_lattice_points(build_diagram(diagonal_support(1, 2))).empty());
}

TEST_CASE("non-convenient supports are flagged") {
    const NewtonDiagram nd = diagram("x*y");
    CHECK_FALSE(nd.convenient());
    CHECK_THROWS_AS(nd.require_convenient(), NotConvenientError);
    CHECK_THROWS_AS(interior_lattice_points(nd), NotConvenientError);
    CHECK_THROWS_AS(volumes(nd), NotConvenientError);
    CHECK_THROWS_AS(phi(nd, LatticePoint{1, 1}), NotConvenientError);
    CHECK_FALSE(diagram("x^2*y + y^3").convenient());
    CHECK_FALSE(diagram("x^2 + y^3 + x*y*z").convenient());
}

TEST_CASE("phi on the homogeneous diagram is the scaled coordinate sum") {
    const NewtonDiagram nd = build_diagram(diagonal_support(2, 7));
    for (int t = 0; t < 50; ++t) {
        const LatticePoint p{oracle::uniform(0, 12), oracle::uniform(0, 12), oracle::uniform(0, 12)};
        CHECK(phi(nd, p) == Rational(p[0] + p[1] + p[2], 7));
    }
}

TEST_CASE("scale support") {
    const auto s = parse_polynomial("x^2+y^3");
    CHECK(scale_support(s, 2).points() == std::set<LatticePoint>{{4, 0}, {0, 6}});
    CHECK(scale_support(s, 1) == s);
    CHECK_THROWS_AS(scale_support(s, 0), ValidationError);
    for (int k = 1; k <= 5; ++k) {
        const NewtonDiagram nd = build_diagram(scale_support(diagonal_support(2, 3), k));
        CHECK(kouchnirenko_mu(nd) == pow(Rational(3 * k - 1), 3));
    }
}

TEST_CASE("interior lattice count grows like k^{n+1} vol") {
    const auto cusp = parse_polynomial("x^2+y^3");
    for (int k : {32, 48}) {
        const auto n = interior_lattice_points(build_diagram(scale_support(cusp, k))).size();
        const double expect = 3.0 * k * k;
        CHECK(std::abs(static_cast<double>(n) - expect) / expect < 0.10);
    }
}

TEST_CASE("homogeneous Kouchnirenko for n <= 3, d <= 12") {
    for (int n = 1; n <= 3; ++n) {
        for (int d = 2; d <= 12; ++d) {
            CHECK(kouchnirenko_mu(build_diagram(diagonal_support(n, d))) == pow(Rational(d - 1), n + 1));
        }
    }
}

TEST_CASE("determinant") {
    CHECK(determinant({{BigInt(2), BigInt(0)}, {BigInt(0), BigInt(3)}}) == 6);
    CHECK(determinant({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}) == -1);
    CHECK(determinant({{BigInt(1), BigInt(2), BigInt(3)}, {BigInt(4), BigInt(5), BigInt(6)}, {BigInt(7), BigInt(8), BigInt(10)}}) == -3);
    CHECK(determinant({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}) == 0);
}

TEST_CASE("property: random convenient diagrams") {
    for (int trial = 0; trial < 80; ++trial) {
        const int vars = static_cast<int>(oracle::uniform(2, 3));
        const NewtonDiagram nd = build_diagram(random_convenient_support(vars));
        REQUIRE(nd.convenient());
        check_facets_support_everything(nd);

        // every support point lies in the upper polyhedron
        for (const auto& p : nd.support().points()) CHECK(phi(nd, p) >= Rational(1));

        // the two placing orders give the same volume
        CHECK(lower_volume(nd, PlacingOrder::lexicographic) == lower_volume(nd, PlacingOrder::reverse_lexicographic));
        CHECK(lower_volume(nd) == volumes(nd).back());
        Rational cell_sum;
        for (const auto& c : cone_cells(nd)) {
            CHECK(c.abs_determinant > 0);
            cell_sum += Rational(c.abs_determinant) / Rational(factorial(static_cast<unsigned>(vars)));
        }
        CHECK(cell_sum == lower_volume(nd));

        for (int s = 0; s < 10; ++s) {
            std::vector<Rational> x, y, mid;
            for (int i = 0; i < vars; ++i) {
                x.emplace_back(oracle::uniform(0, 20), oracle::uniform(1, 5));
                y.emplace_back(oracle::uniform(0, 20), oracle::uniform(1, 5));
                mid.push_back((x.back() + y.back()) / Rational(2));
            }
            const Rational c(oracle::uniform(1, 9), oracle::uniform(1, 9));
            std::vector<Rational> cx;
            for (const auto& v : x) cx.push_back(c * v);
            CHECK(phi(nd, cx) == c * phi(nd, x));                              // homogeneity
            CHECK(phi(nd, mid) >= (phi(nd, x) + phi(nd, y)) / Rational(2));   // concavity
        }

        // interior enumeration equals a box scan with rational phi
        std::vector<LatticePoint> brute;
        std::int64_t hi = 0;
        for (const auto& a : nd.axis_intercepts()) hi = std::max(hi, *a);
        oracle::for_each_box(static_cast<std::size_t>(vars), 1, hi, [&](const std::vector<std::int64_t>& p) {
            std::vector<Rational> q(p.begin(), p.end());
            if (phi(nd, q) < Rational(1)) brute.push_back(p);
        });
        std::sort(brute.begin(), brute.end());
        CHECK(interior_lattice_points(nd) == brute);
    }
}

TEST_CASE("json dump") {
    const nlohmann::json j = to_json(diagram("x^2+y^3"));
    CHECK(j["convenient"] == true);
    CHECK(j["facets"].size() == 1);
    CHECK(j["facets"][0]["form"] == nlohmann::json::array({"1/2", "1/3"}));
    CHECK(j["intercepts"] == nlohmann::json::array({2, 3}));
}

}
