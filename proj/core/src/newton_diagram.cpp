#include "specgenus/newton_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "specgenus/errors.hpp"

namespace specgenus {

namespace {

constexpr double kMaxFacetCandidates = 5.0e7;

using Matrix = std::vector<std::vector<BigInt>>;

// Rank by fraction-free Gaussian elimination.
int rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<BigInt> to_big(const LatticePoint& p) {
    std::vector<BigInt> out;
    out.reserve(p.size());
    for (auto c : p) out.emplace_back(static_cast<long>(c));
    return out;
}

// Solves V l = (1,...,1) for square V; nullopt when singular.
std::optional<std::vector<Rational>> solve_unit_rhs(const std::vector<const LatticePoint*>& rows) {
    const std::size_t n = rows.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational((*rows[i])[j]);
        a[i][n] = Rational(1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c].sign() == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[c]);
        const Rational inv = Rational(1) / a[c][c];
        for (std::size_t j = c; j <= n; ++j) a[c][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].sign() == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i][n];
    return out;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const LatticePoint& b) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
    if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("facet form evaluation overflow");
    return static_cast<std::int64_t>(s);
}

bool dominates(const LatticePoint& q, const LatticePoint& p) {
    // q <= p componentwise and q != p
    bool strict = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (q[i] > p[i]) return false;
        if (q[i] < p[i]) strict = true;
    }
    return strict;
}

// Visits every k-subset of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t m, std::size_t k, F&& visit) {
    if (k > m) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

double choose(std::size_t m, std::size_t k) {
    double out = 1;
    for (std::size_t i = 0; i < k; ++i) out = out * double(m - i) / double(i + 1);
    return out;
}

BigInt cone_det(const std::vector<const LatticePoint*>& cols) {
    Matrix m;
    m.reserve(cols.size());
    for (const auto* p : cols) m.push_back(to_big(*p));
    return determinant(std::move(m));
}

// Placing triangulation of points lying on one affine hyperplane that avoids the origin.
// Orientation tests in the hyperplane reduce to signs of cone determinants from the origin.
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<LatticePoint>& pts) {
    const std::size_t dim = pts.front().size();  // simplices have dim vertices
    std::vector<std::vector<std::size_t>> simplices;

    std::vector<std::size_t> initial;
    Matrix chosen;
    std::vector<bool> used(pts.size(), false);
    for (std::size_t i = 0; i < pts.size() && initial.size() < dim; ++i) {
        chosen.push_back(to_big(pts[i]));
        if (rank(chosen) == static_cast<int>(chosen.size())) {
            initial.push_back(i);
            used[i] = true;
        } else {
            chosen.pop_back();
        }
    }
    if (initial.size() < dim) return simplices;
    simplices.push_back(initial);

    for (std::size_t p = 0; p < pts.size(); ++p) {
        if (used[p]) continue;
        struct FaceInfo {
            int count = 0;
            std::size_t opposite = 0;
        };
        std::map<std::vector<std::size_t>, FaceInfo> faces;
        for (const auto& s : simplices) {
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<std::size_t> face;
                for (std::size_t j = 0; j < s.size(); ++j) {
                    if (j != drop) face.push_back(s[j]);
                }
                std::sort(face.begin(), face.end());
                auto& info = faces[face];
                ++info.count;
                info.opposite = s[drop];
            }
        }
        std::vector<std::vector<std::size_t>> added;
        for (const auto& [face, info] : faces) {
            if (info.count != 1) continue;
            std::vector<const LatticePoint*> cols;
            for (auto v : face) cols.push_back(&pts[v]);
            cols.push_back(&pts[p]);
            const int side_p = sgn(cone_det(cols));
            if (side_p == 0) continue;
            cols.back() = &pts[info.opposite];
            const int side_opp = sgn(cone_det(cols));
            if (side_p != side_opp) {
                auto s = face;
                s.push_back(p);
                added.push_back(std::move(s));
            }
        }
        for (auto& s : added) simplices.push_back(std::move(s));
    }
    return simplices;
}

NewtonDiagram restrict_to(const NewtonDiagram& diagram, const std::vector<std::size_t>& coords);

}  // namespace

BigInt determinant(Matrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        if (m[c][c] == 0) {
            std::size_t pivot = c + 1;
            while (pivot < n && m[pivot][c] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            }
        }
        prev = m[c][c];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<Rational> Facet::form() const {
    std::vector<Rational> out;
    for (auto c : normal) out.emplace_back(c, level);
    return out;
}

Rational Facet::evaluate(const std::vector<Rational>& x) const {
    Rational s;
    for (std::size_t i = 0; i < normal.size(); ++i) s += Rational(normal[i]) * x[i];
    return s / Rational(level);
}

void NewtonDiagram::require_convenient() const {
    if (!convenient_) {
        throw NotConvenientError("Newton polyhedron does not meet every coordinate axis (non-convenient germ)");
    }
}

NewtonDiagram build_diagram(const MonomialSupport& support) {
    NewtonDiagram d(support);
    const std::size_t vars = static_cast<std::size_t>(support.variables());

    for (const auto& p : support.points()) {
        bool dominated = false;
        for (const auto& q : support.points()) {
            if (dominates(q, p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) d.minimal_.push_back(p);
    }

    d.intercepts_.assign(vars, std::nullopt);
    for (const auto& p : d.minimal_) {
        std::size_t nonzero = 0, axis = 0;
        for (std::size_t i = 0; i < vars; ++i) {
            if (p[i] != 0) {
                ++nonzero;
                axis = i;
            }
        }
        if (nonzero == 1) d.intercepts_[axis] = p[axis];
    }
    d.convenient_ = std::all_of(d.intercepts_.begin(), d.intercepts_.end(), [](const auto& c) { return c.has_value(); });

    if (choose(d.minimal_.size(), vars) > kMaxFacetCandidates) {
        throw ValidationError("support has too many minimal points for exhaustive facet search");
    }

    std::map<std::vector<std::int64_t>, Facet> found;
    for_each_subset(d.minimal_.size(), vars, [&](const std::vector<std::size_t>& idx) {
        std::vector<const LatticePoint*> rows;
        for (auto i : idx) rows.push_back(&d.minimal_[i]);
        const auto form = solve_unit_rhs(rows);
        if (!form) return;
        if (std::any_of(form->begin(), form->end(), [](const Rational& c) { return c.sign() <= 0; })) return;

        BigInt den = 1;
        for (const auto& c : *form) den = lcm(den, c.denominator());
        std::vector<BigInt> scaled;
        BigInt g = 0;
        for (const auto& c : *form) {
            scaled.push_back(c.numerator() * (den / c.denominator()));
            g = gcd(g, scaled.back());
        }
        std::vector<std::int64_t> normal;
        for (auto& s : scaled) normal.push_back(to_int64(s / g));
        const std::int64_t level = to_int64(den / g);

        if (found.count(normal)) return;
        for (const auto& p : d.minimal_) {
            if (dot(normal, p) < level) return;
        }
        Facet f{normal, level, {}};
        for (const auto& p : d.minimal_) {
            if (dot(normal, p) == level) f.points.push_back(p);
        }
        found.emplace(normal, std::move(f));
    });
    for (auto& [key, f] : found) d.facets_.push_back(std::move(f));
    return d;
}

Rational phi(const NewtonDiagram& diagram, const std::vector<Rational>& point) {
    diagram.require_convenient();
    if (static_cast<int>(point.size()) != diagram.dimension() + 1) throw DimensionError("phi: point has wrong arity");
    std::optional<Rational> best;
    for (const auto& f : diagram.facets()) {
        Rational v = f.evaluate(point);
        if (!best || v < *best) best = std::move(v);
    }
    return *best;
}

Rational phi(const NewtonDiagram& diagram, const LatticePoint& point) {
    diagram.require_convenient();
    if (static_cast<int>(point.size()) != diagram.dimension() + 1) throw DimensionError("phi: point has wrong arity");
    // Smallest normal.x / level, compared by cross-multiplication.
    std::int64_t best_num = 0, best_den = 0;
    for (const auto& f : diagram.facets()) {
        const std::int64_t num = dot(f.normal, point);
        if (best_den == 0 || static_cast<__int128>(num) * best_den < static_cast<__int128>(best_num) * f.level) {
            best_num = num;
            best_den = f.level;
        }
    }
    return Rational(best_num, best_den);
}

namespace {

// Depth-first enumeration of interior lattice points with pruning on partial facet sums.
template <typename Visit>
void enumerate_interior(const NewtonDiagram& diagram, Visit&& visit) {
    diagram.require_convenient();
    const std::size_t vars = static_cast<std::size_t>(diagram.dimension() + 1);
    const auto& facets = diagram.facets();
    LatticePoint x(vars, 1);
    std::vector<std::int64_t> partial(facets.size(), 0);

    // remaining[f][i] = sum of normal[f][j] for j >= i (all later coordinates are at least 1)
    std::vector<std::vector<std::int64_t>> remaining(facets.size(), std::vector<std::int64_t>(vars + 1, 0));
    for (std::size_t f = 0; f < facets.size(); ++f) {
        for (std::size_t i = vars; i-- > 0;) remaining[f][i] = remaining[f][i + 1] + facets[f].normal[i];
    }

    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == vars) {
            visit(x);
            return;
        }
        const std::int64_t bound = *diagram.axis_intercepts()[i];
        for (std::int64_t v = 1; v < bound; ++v) {
            bool feasible = false;
            for (std::size_t f = 0; f < facets.size() && !feasible; ++f) {
                feasible = partial[f] + facets[f].normal[i] * v + remaining[f][i + 1] < facets[f].level;
            }
            if (!feasible) break;
            x[i] = v;
            for (std::size_t f = 0; f < facets.size(); ++f) partial[f] += facets[f].normal[i] * v;
            self(self, i + 1);
            for (std::size_t f = 0; f < facets.size(); ++f) partial[f] -= facets[f].normal[i] * v;
        }
    };
    recurse(recurse, 0);
}

}  // namespace

std::vector<LatticePoint> interior_lattice_points(const NewtonDiagram& diagram) {
    std::vector<LatticePoint> out;
    enumerate_interior(diagram, [&](const LatticePoint& x) {
        if (phi(diagram, x) < Rational(1)) out.push_back(x);
    });
    return out;
}

Rational interior_phi_deficit(const NewtonDiagram& diagram) {
    Rational sum;
    const Rational one(1);
    enumerate_interior(diagram, [&](const LatticePoint& x) {
        const Rational v = phi(diagram, x);
        if (v < one) sum += one - v;
    });
    return sum;
}

std::vector<LatticeCell> cone_cells(const NewtonDiagram& diagram, PlacingOrder order) {
    diagram.require_convenient();
    std::vector<LatticeCell> cells;
    const std::size_t vars = static_cast<std::size_t>(diagram.dimension() + 1);
    for (const auto& f : diagram.facets()) {
        auto pts = f.points;
        if (order == PlacingOrder::reverse_lexicographic) std::reverse(pts.begin(), pts.end());
        for (const auto& s : placing_triangulation(pts)) {
            LatticeCell cell;
            cell.vertices.push_back(LatticePoint(vars, 0));
            std::vector<const LatticePoint*> cols;
            for (auto v : s) {
                cell.vertices.push_back(pts[v]);
                cols.push_back(&pts[v]);
            }
            cell.abs_determinant = abs(cone_det(cols));
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

Rational lower_volume(const NewtonDiagram& diagram, PlacingOrder order) {
    BigInt total = 0;
    for (const auto& c : cone_cells(diagram, order)) total += c.abs_determinant;
    return Rational(total, factorial(static_cast<unsigned>(diagram.dimension() + 1)));
}

namespace {

NewtonDiagram restrict_to(const NewtonDiagram& diagram, const std::vector<std::size_t>& coords) {
    std::set<LatticePoint> pts;
    for (const auto& p : diagram.support().points()) {
        bool inside = true;
        for (std::size_t i = 0; i < p.size() && inside; ++i) {
            if (p[i] != 0 && std::find(coords.begin(), coords.end(), i) == coords.end()) inside = false;
        }
        if (!inside) continue;
        LatticePoint q;
        for (auto c : coords) q.push_back(p[c]);
        pts.insert(std::move(q));
    }
    return build_diagram(MonomialSupport(static_cast<int>(coords.size()) - 1, std::move(pts)));
}

}  // namespace

std::vector<Rational> volumes(const NewtonDiagram& diagram) {
    diagram.require_convenient();
    const std::size_t vars = static_cast<std::size_t>(diagram.dimension() + 1);
    std::vector<Rational> out(vars);
    for (std::size_t i = 0; i < vars; ++i) out[0] += Rational(*diagram.axis_intercepts()[i]);
    for (std::size_t k = 2; k < vars; ++k) {
        for_each_subset(vars, k, [&](const std::vector<std::size_t>& coords) {
            out[k - 1] += lower_volume(restrict_to(diagram, coords));
        });
    }
    if (vars >= 2) out[vars - 1] = lower_volume(diagram);
    return out;
}

MonomialSupport scale_support(const MonomialSupport& support, std::int64_t k) {
    if (k < 1) throw ValidationError("scale factor must be a positive integer");
    std::set<LatticePoint> pts;
    for (auto p : support.points()) {
        for (auto& c : p) c *= k;
        pts.insert(std::move(p));
    }
    return MonomialSupport(support.dimension(), std::move(pts));
}

MonomialSupport diagonal_support(int n, std::int64_t d) {
    std::set<LatticePoint> pts;
    for (int i = 0; i <= n; ++i) {
        LatticePoint p(static_cast<std::size_t>(n + 1), 0);
        p[static_cast<std::size_t>(i)] = d;
        pts.insert(std::move(p));
    }
    return MonomialSupport(n, std::move(pts));
}

nlohmann::json to_json(const NewtonDiagram& diagram) {
    nlohmann::json facets = nlohmann::json::array();
    for (const auto& f : diagram.facets()) {
        nlohmann::json form = nlohmann::json::array();
        for (const auto& c : f.form()) form.push_back(c.to_string());
        facets.push_back({{"form", form}, {"vertices", f.points}});
    }
    nlohmann::json intercepts = nlohmann::json::array();
    for (const auto& c : diagram.axis_intercepts()) {
        if (c) {
            intercepts.push_back(*c);
        } else {
            intercepts.push_back(nullptr);
        }
    }
    return {{"n", diagram.dimension()},
            {"convenient", diagram.convenient()},
            {"intercepts", intercepts},
            {"facets", facets}};
}

}  // namespace specgenus
