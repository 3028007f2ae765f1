#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "specgenus/invariants.hpp"
#include "specgenus/polynomial_parser.hpp"
#include "specgenus/rational.hpp"

namespace specgenus {

/// Verdict on the weak form p~_g < mu/(n+2)! and the strong form p~_g <= (mu-1)/(n+2)!.
struct SingularityReport {
    std::string description;
    int n = 0;
    Rational mu;
    Rational spectral_genus;
    std::optional<std::int64_t> geometric_genus;
    Rational margin;  // mu/(n+2)! - p~_g
    bool weak_ok = false;
    bool strong_ok = false;
    bool equality_attained = false;
    /// Exponent of |t| in tau^{(-1)^n}: 2 (-1)^n margin. The log-log correction is not computed.
    Rational torsion_exponent;
    Method mu_method = Method::QuasiHomSpectralPoly;
    Method genus_method = Method::QuasiHomSpectralPoly;
    std::vector<std::string> warnings;
};

SingularityReport judge(const InvariantBundle& bundle, std::string description = {});

/// Sums mu and p~_g of several singular points of the same dimension.
InvariantBundle combine(const std::vector<InvariantBundle>& bundles);

nlohmann::json to_json(const SingularityReport& report);
SingularityReport singularity_report_from_json(const nlohmann::json& j);

/// Fixed CSV header shared by reports and sweeps.
inline constexpr const char* kReportCsvHeader =
    "param,n,mu,spectral_genus,margin,ratio,weak,strong,equality,torsion_exponent";
std::string csv_row(const std::string& param, const SingularityReport& report);

struct SweepRecord {
    std::int64_t parameter = 0;
    SingularityReport report;
    Rational ratio;                            // p~_g / mu
    std::optional<Rational> margin_over_k_n;   // scale sweeps only
};

struct ScaleSweep {
    std::vector<SweepRecord> records;
    Rational predicted_limit;  // n vol_n / (2 (n+1) (n+2))
    std::optional<std::int64_t> first_strong_k;
    bool strong_for_all_later = false;
};

/// Newton invariants of f(x_0^k, ..., x_n^k) for every k, computed in parallel.
ScaleSweep scale_sweep(const MonomialSupport& support, const std::vector<std::int64_t>& k_values);

struct HomogeneousSweep {
    std::vector<SweepRecord> records;
    Rational limit;  // 1/(n+2)!
    bool ratio_nondecreasing_below_limit = false;
};

HomogeneousSweep homogeneous_sweep(int n, const std::vector<std::int64_t>& d_values);

nlohmann::json to_json(const SweepRecord& record);

}  // namespace specgenus
