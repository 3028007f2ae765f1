#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "specgenus/polynomial_parser.hpp"
#include "specgenus/rational.hpp"

namespace specgenus {

/// A compact facet of the Newton boundary, given by the linear form
/// l(x) = normal . x / level which equals 1 on the facet.
struct Facet {
    std::vector<std::int64_t> normal;  // primitive, all entries > 0
    std::int64_t level = 1;
    std::vector<LatticePoint> points;  // support points lying on the facet, lexicographic

    /// Coefficients of l as rationals.
    std::vector<Rational> form() const;
    Rational evaluate(const std::vector<Rational>& x) const;
};

/// Lower Newton polyhedron of a monomial support: compact facets, axis intercepts and the
/// gauge function phi with phi = 1 on the compact boundary.
class NewtonDiagram {
public:
    int dimension() const { return support_.dimension(); }
    const MonomialSupport& support() const { return support_; }
    /// Support points not dominated componentwise by another support point.
    const std::vector<LatticePoint>& minimal_points() const { return minimal_; }
    const std::vector<Facet>& facets() const { return facets_; }
    /// Where the boundary meets each coordinate axis; nullopt when it does not.
    const std::vector<std::optional<std::int64_t>>& axis_intercepts() const { return intercepts_; }
    bool convenient() const { return convenient_; }

    /// Throws NotConvenientError unless convenient().
    void require_convenient() const;

    friend NewtonDiagram build_diagram(const MonomialSupport& support);

private:
    explicit NewtonDiagram(MonomialSupport support) : support_(std::move(support)) {}

    MonomialSupport support_;
    std::vector<LatticePoint> minimal_;
    std::vector<Facet> facets_;
    std::vector<std::optional<std::int64_t>> intercepts_;
    bool convenient_ = false;
};

/// Simplex of the cone decomposition of the lower polyhedron: the origin followed by n+1
/// vertices of one compact facet.
struct LatticeCell {
    std::vector<LatticePoint> vertices;
    /// |det| of the n+1 non-origin vertices; the Lebesgue volume is this over (n+1)!.
    BigInt abs_determinant;
};

enum class PlacingOrder { lexicographic, reverse_lexicographic };

/// Computes the compact facets by exhaustive search over (n+1)-subsets of minimal points.
/// A non-convenient support still yields a diagram, flagged convenient() == false.
NewtonDiagram build_diagram(const MonomialSupport& support);

/// min over compact facets of l_F(x). Requires a convenient diagram.
Rational phi(const NewtonDiagram& diagram, const std::vector<Rational>& point);
Rational phi(const NewtonDiagram& diagram, const LatticePoint& point);

/// Lattice points with every coordinate >= 1 and phi < 1, in lexicographic order.
std::vector<LatticePoint> interior_lattice_points(const NewtonDiagram& diagram);

/// Sum over interior lattice points of (1 - phi(x)).
Rational interior_phi_deficit(const NewtonDiagram& diagram);

/// Cone-from-origin triangulation over a placing triangulation of each facet.
std::vector<LatticeCell> cone_cells(const NewtonDiagram& diagram, PlacingOrder order = PlacingOrder::lexicographic);

/// Full-dimensional Lebesgue volume of the lower polyhedron.
Rational lower_volume(const NewtonDiagram& diagram, PlacingOrder order = PlacingOrder::lexicographic);

/// vol_k for k = 1..n+1 (index k-1): the summed k-dimensional volumes of the lower
/// polyhedron cut by every k-dimensional coordinate subspace.
std::vector<Rational> volumes(const NewtonDiagram& diagram);

/// Componentwise dilation of every exponent by k.
MonomialSupport scale_support(const MonomialSupport& support, std::int64_t k);

/// Support of x0^d + ... + xn^d.
MonomialSupport diagonal_support(int n, std::int64_t d);

nlohmann::json to_json(const NewtonDiagram& diagram);

/// Exact determinant of a square integer matrix (fraction-free elimination).
BigInt determinant(std::vector<std::vector<BigInt>> matrix);

}  // namespace specgenus
