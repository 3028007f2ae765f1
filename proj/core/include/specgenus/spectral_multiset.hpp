#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "specgenus/rational.hpp"

namespace specgenus {

/// One spectral exponent together with its multiplicity.
struct SpectralEntry {
    Rational exponent;
    std::int64_t multiplicity = 0;

    friend bool operator==(const SpectralEntry&, const SpectralEntry&) = default;
};

/// Multiset of rational spectral numbers in the shifted convention, i.e. the spectral
/// polynomial sum_j m_j T^{alpha'_j} of a germ in n+1 variables.
///
/// Entries are kept sorted by strictly increasing exponent and every multiplicity is
/// positive. The dimension may be -1 for the formal unit {0} used as the identity of
/// multiset_sum_product.
class SpectralMultiset {
public:
    SpectralMultiset() = default;

    /// Builds from arbitrary (exponent, multiplicity) pairs: merges duplicates and drops zero
    /// multiplicities. Throws ValidationError on negative totals.
    SpectralMultiset(int dimension, std::vector<SpectralEntry> entries);

    static SpectralMultiset unit() { return SpectralMultiset(-1, {{Rational(0), 1}}); }

    int dimension() const { return dimension_; }
    const std::vector<SpectralEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Sum of multiplicities, the Milnor number for a full spectrum.
    std::int64_t total_multiplicity() const;

    const Rational& min_exponent() const;
    const Rational& max_exponent() const;

    /// Sum over alpha' < 1 of (1 - alpha') times multiplicity.
    Rational spectral_genus() const;
    /// Number of exponents alpha' <= 1 counted with multiplicity.
    std::int64_t geometric_genus() const;

    /// True when the multiset is invariant under alpha' -> (n+1) - alpha'.
    bool is_symmetric() const;
    /// True when every exponent lies in the open interval (0, n+1).
    bool in_open_range() const;

    /// The multiset with exponents shifted by -1 (unshifted convention alpha = alpha' - 1).
    std::vector<SpectralEntry> unshifted() const;

    friend bool operator==(const SpectralMultiset&, const SpectralMultiset&) = default;

private:
    int dimension_ = 0;
    std::vector<SpectralEntry> entries_;
};

/// Thom-Sebastiani product: all pairwise exponent sums, multiplicities multiplied.
/// The result has dimension n_a + n_b + 1.
SpectralMultiset multiset_sum_product(const SpectralMultiset& a, const SpectralMultiset& b);

/// Finite sum of signed integer coefficients times T^{rational exponent}.
using ExponentPolynomial = std::map<Rational, std::int64_t>;

ExponentPolynomial exponent_poly_multiply(const ExponentPolynomial& a, const ExponentPolynomial& b);

/// Exact quotient numerator / denominator of fractional-exponent polynomials.
///
/// Exponents are rescaled by the lcm L of all exponent denominators, the division is done
/// on integer polynomials in U = T^{1/L}, and exponents are scaled back. Throws
/// NonExactDivision when a remainder appears or the quotient has a negative coefficient.
SpectralMultiset fractional_poly_divide(const ExponentPolynomial& numerator,
                                        const ExponentPolynomial& denominator, int dimension);

/// JSON array of {"exponent": "p/q", "multiplicity": m} sorted ascending.
nlohmann::json to_json(const SpectralMultiset& m);
SpectralMultiset spectral_multiset_from_json(const nlohmann::json& j, int dimension);

}  // namespace specgenus
