#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "specgenus/rational.hpp"
#include "specgenus/spectral_multiset.hpp"

namespace specgenus {

/// Probability measure putting mass m/mu on every spectral number of a full spectrum.
class EmpiricalMeasure {
public:
    explicit EmpiricalMeasure(SpectralMultiset spectrum);

    const SpectralMultiset& base() const { return base_; }
    std::int64_t total() const { return total_; }
    int dimension() const { return base_.dimension(); }

    /// Mass of {alpha' <= s}.
    Rational cdf(const Rational& s) const;

private:
    SpectralMultiset base_;
    std::int64_t total_;
};

/// Law of x_0 + ... + x_n for independent uniform x_i on [0,1], stored as exact
/// piecewise polynomials on the unit intervals [j, j+1].
class SaitoDensity {
public:
    explicit SaitoDensity(int n);

    int dimension() const { return n_; }
    /// CDF coefficients on [j, j+1], ascending powers of s.
    const std::vector<std::vector<Rational>>& pieces() const { return pieces_; }

    Rational cdf(const Rational& s) const;
    /// Exact integral of s^power against the density.
    Rational moment(unsigned power) const;
    Rational mean() const { return moment(1); }
    Rational variance() const;

private:
    int n_;
    std::vector<std::vector<Rational>> pieces_;
};

/// Inclusion-exclusion CDF (1/(n+1)!) sum_j (-1)^j C(n+1,j) max(s-j,0)^{n+1}.
Rational saito_cdf(int n, const Rational& s);

struct Moments {
    Rational mean;
    Rational variance;
};

/// Mean and variance of the unshifted exponents alpha = alpha' - 1.
Moments measure_moments(const EmpiricalMeasure& m);

/// (alpha_mu - alpha_1)/12 minus the variance about (n-1)/2.
Rational hertling_gap(const EmpiricalMeasure& m);

/// alpha_mu <= (2/3) sqrt(1 - 1/mu) for a curve spectrum, decided by squaring.
bool hertling_strong_criterion(const EmpiricalMeasure& m);

/// max over s = j(n+1)/grid, j = 0..grid, of |empirical CDF - Saito CDF|.
Rational sup_cdf_distance(const EmpiricalMeasure& m, const SaitoDensity& density, std::int64_t grid);

struct FamilyMember {
    std::string parameter;
    EmpiricalMeasure measure;
};

struct FamilyRow {
    std::string parameter;
    std::int64_t mu = 0;
    Rational min_alpha;  // minimal shifted spectral number
    Rational ratio_sg;   // p~_g / mu
    Rational ratio_pg;   // p_g / mu
    std::optional<Rational> sg_over_pg;
    Rational cdf_distance;
};

struct FamilyReport {
    int n = 0;
    std::int64_t grid = 0;
    std::vector<FamilyRow> rows;
    Rational genus_limit;      // 1/(n+2)!
    Rational geometric_limit;  // 1/(n+1)!
    /// Nullopt when the family has a single member.
    std::optional<bool> min_alpha_decreasing;
    std::optional<bool> ratio_sg_increasing_below_limit;
    Rational final_sg_gap;  // 1/(n+2)! - last p~_g/mu
    Rational final_pg_gap;  // |1/(n+1)! - last p_g/mu|
};

FamilyReport family_diagnostics(const std::vector<FamilyMember>& family, std::int64_t grid = 1000);

std::string family_csv(const FamilyReport& report);
nlohmann::json to_json(const FamilyReport& report);

}  // namespace specgenus
