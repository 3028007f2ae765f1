#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "specgenus/rational.hpp"

namespace specgenus {

/// Maximum number of variables n+1 accepted anywhere in the library.
inline constexpr int kMaxVariables = 8;

using LatticePoint = std::vector<std::int64_t>;

/// Exponent vectors of the monomials of a germ in n+1 variables.
///
/// Nonempty, origin-free, with points stored sorted and distinct.
class MonomialSupport {
public:
    MonomialSupport(int dimension, std::set<LatticePoint> points);

    int dimension() const { return dimension_; }
    int variables() const { return dimension_ + 1; }
    const std::set<LatticePoint>& points() const { return points_; }

    friend bool operator==(const MonomialSupport&, const MonomialSupport&) = default;

private:
    int dimension_;
    std::set<LatticePoint> points_;
};

/// Parses a polynomial and returns the exponent vectors of its nonzero terms.
///
/// Variables default to x0..x7 or x,y,z,w; when `variable_names` is given only those names
/// are accepted and the dimension is fixed by their count. Otherwise the dimension is the
/// highest variable index used.
MonomialSupport parse_polynomial(std::string_view text,
                                 const std::optional<std::vector<std::string>>& variable_names = std::nullopt);

/// Reads a polynomial file: optional first line "vars: x,y,z", then the expression.
MonomialSupport parse_polynomial_file(std::string_view contents);

enum class Dim1Kind { plain, x_times, xy_times };

std::string to_string(Dim1Kind kind);
Dim1Kind parse_dim1_kind(std::string_view text);

struct PolynomialGerm {
    MonomialSupport support;
    std::string text;
};

struct QuasiHomogeneousGerm {
    std::vector<Rational> weights;
    int dimension() const { return static_cast<int>(weights.size()) - 1; }
};

struct HomogeneousGerm {
    int n = 1;
    int d = 2;
};

struct PuiseuxPair {
    std::int64_t k = 0;
    std::int64_t n = 0;
    friend bool operator==(const PuiseuxPair&, const PuiseuxPair&) = default;
};

struct PuiseuxGerm {
    std::vector<PuiseuxPair> pairs;
};

struct Dim1FamilyGerm {
    Dim1Kind kind = Dim1Kind::plain;
    std::int64_t a = 2;
    std::int64_t b = 2;
};

using GermSpec = std::variant<PolynomialGerm, QuasiHomogeneousGerm, HomogeneousGerm, PuiseuxGerm, Dim1FamilyGerm>;

/// Builds a validated GermSpec from flat key/value arguments.
///
/// Recognised keys (exactly one form must be present):
///   poly [+ vars], weights, homog_n + homog_d, puiseux, family_kind + family_a + family_b.
GermSpec parse_germ_spec(const std::map<std::string, std::string>& args);

/// Throws ValidationError naming the violated condition.
void validate_weights(const std::vector<Rational>& weights);
void validate_puiseux(const std::vector<PuiseuxPair>& pairs);
void validate_dim1_family(std::int64_t a, std::int64_t b);

std::vector<Rational> parse_weight_list(std::string_view text);
std::vector<PuiseuxPair> parse_puiseux_list(std::string_view text);

std::string describe(const GermSpec& spec);

}  // namespace specgenus
