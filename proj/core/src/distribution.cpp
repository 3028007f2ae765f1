#include "specgenus/distribution.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "specgenus/errors.hpp"

namespace specgenus {

namespace {

Rational horner(const std::vector<Rational>& coeffs, const Rational& s) {
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
    return acc;
}

// Antiderivative evaluated between lo and hi of s^power * p'(s).
Rational integrate_against_derivative(const std::vector<Rational>& p, unsigned power, const Rational& lo,
                                      const Rational& hi) {
    Rational out;
    for (std::size_t i = 1; i < p.size(); ++i) {
        // d/ds (c s^i) = i c s^{i-1}; times s^power integrates to i c s^{i+power} / (i+power)
        const unsigned e = static_cast<unsigned>(i) + power;
        const Rational c = p[i] * Rational(static_cast<std::int64_t>(i)) / Rational(static_cast<std::int64_t>(e));
        out += c * (pow(hi, e) - pow(lo, e));
    }
    return out;
}

}  // namespace

EmpiricalMeasure::EmpiricalMeasure(SpectralMultiset spectrum) : base_(std::move(spectrum)) {
    total_ = base_.total_multiplicity();
    if (total_ <= 0) throw ValidationError("empirical measure needs a nonempty spectrum");
}

Rational EmpiricalMeasure::cdf(const Rational& s) const {
    std::int64_t below = 0;
    for (const auto& e : base_.entries()) {
        if (e.exponent > s) break;
        below += e.multiplicity;
    }
    return Rational(below, total_);
}

SaitoDensity::SaitoDensity(int n) : n_(n) {
    if (n < 0) throw DomainError("Saito density needs n >= 0");
    const unsigned m = static_cast<unsigned>(n + 1);
    const Rational scale = Rational(1) / Rational(factorial(m));
    std::vector<Rational> acc(m + 1);
    for (unsigned j = 0; j <= m; ++j) {
        if (j < m) {
            // add (-1)^j C(m,j) (s - j)^m, expanded in powers of s
            const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
            for (unsigned p = 0; p <= m; ++p) {
                const Rational shift = pow(Rational(-static_cast<std::int64_t>(j)), m - p);
                acc[p] += sign * Rational(binomial(m, j)) * Rational(binomial(m, p)) * shift * scale;
            }
            pieces_.push_back(acc);
        }
    }
}

Rational SaitoDensity::cdf(const Rational& s) const {
    if (s.sign() < 0 || s > Rational(n_ + 1)) throw DomainError("Saito CDF argument outside [0, n+1]");
    if (s == Rational(n_ + 1)) return Rational(1);
    const auto j = static_cast<std::size_t>(to_int64(s.floor()));
    return horner(pieces_[j], s);
}

Rational SaitoDensity::moment(unsigned power) const {
    Rational out;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        out += integrate_against_derivative(pieces_[j], power, Rational(static_cast<std::int64_t>(j)),
                                            Rational(static_cast<std::int64_t>(j + 1)));
    }
    return out;
}

Rational SaitoDensity::variance() const {
    const Rational mu = mean();
    return moment(2) - mu * mu;
}

Rational saito_cdf(int n, const Rational& s) {
    if (n < 0) throw DomainError("Saito density needs n >= 0");
    const unsigned m = static_cast<unsigned>(n + 1);
    if (s.sign() < 0 || s > Rational(n + 1)) throw DomainError("Saito CDF argument outside [0, n+1]");
    Rational sum;
    for (unsigned j = 0; j <= m; ++j) {
        const Rational shifted = s - Rational(static_cast<std::int64_t>(j));
        if (shifted.sign() <= 0) break;
        const Rational term = Rational(binomial(m, j)) * pow(shifted, m);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum / Rational(factorial(m));
}

Moments measure_moments(const EmpiricalMeasure& m) {
    const Rational total(m.total());
    Rational sum, sum_sq;
    for (const auto& e : m.base().unshifted()) {
        sum += Rational(e.multiplicity) * e.exponent;
        sum_sq += Rational(e.multiplicity) * e.exponent * e.exponent;
    }
    const Rational mean = sum / total;
    return {mean, sum_sq / total - mean * mean};
}

Rational hertling_gap(const EmpiricalMeasure& m) {
    const Rational center(m.dimension() - 1, 2);
    const auto entries = m.base().unshifted();
    Rational spread;
    for (const auto& e : entries) {
        const Rational d = e.exponent - center;
        spread += Rational(e.multiplicity) * d * d;
    }
    const Rational variance = spread / Rational(m.total());
    return (entries.back().exponent - entries.front().exponent) / Rational(12) - variance;
}

bool hertling_strong_criterion(const EmpiricalMeasure& m) {
    if (m.dimension() != 1) throw DimensionError("Hertling strong-form criterion applies to curves (n = 1) only");
    const auto entries = m.base().unshifted();
    const Rational top = entries.back().exponent;
    if (top != -entries.front().exponent) {
        throw ConsistencyError("curve spectrum is not symmetric: alpha_mu != -alpha_1");
    }
    const Rational bound_sq = Rational(4, 9) * (Rational(1) - Rational(1, m.total()));
    return top * top <= bound_sq;
}

Rational sup_cdf_distance(const EmpiricalMeasure& m, const SaitoDensity& density, std::int64_t grid) {
    if (grid <= 0) throw DomainError("grid must be positive");
    if (m.dimension() != density.dimension()) throw DimensionError("measure and density dimensions differ");
    const auto& entries = m.base().entries();
    const Rational total(m.total());
    const std::int64_t top = m.dimension() + 1;
    std::size_t next = 0;
    std::int64_t below = 0;
    Rational best;
    for (std::int64_t j = 0; j <= grid; ++j) {
        const Rational s(j * top, grid);
        while (next < entries.size() && entries[next].exponent <= s) below += entries[next++].multiplicity;
        const Rational diff = abs(Rational(below) / total - density.cdf(s));
        if (diff > best) best = diff;
    }
    return best;
}

FamilyReport family_diagnostics(const std::vector<FamilyMember>& family, std::int64_t grid) {
    if (family.empty()) throw ValidationError("family must have at least one member");
    FamilyReport r;
    r.n = family.front().measure.dimension();
    r.grid = grid;
    r.genus_limit = Rational(1) / Rational(factorial(static_cast<unsigned>(r.n + 2)));
    r.geometric_limit = Rational(1) / Rational(factorial(static_cast<unsigned>(r.n + 1)));
    const SaitoDensity density(r.n);

    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& m = family[i].measure;
        if (m.dimension() != r.n) throw ValidationError("family members have different dimensions");
        if (i > 0 && m.total() <= family[i - 1].measure.total()) {
            throw ValidationError("family Milnor numbers must be strictly increasing");
        }
        FamilyRow row;
        row.parameter = family[i].parameter;
        row.mu = m.total();
        row.min_alpha = m.base().min_exponent();
        row.ratio_sg = m.base().spectral_genus() / Rational(m.total());
        const std::int64_t pg = m.base().geometric_genus();
        row.ratio_pg = Rational(pg, m.total());
        if (pg > 0) row.sg_over_pg = m.base().spectral_genus() / Rational(pg);
        row.cdf_distance = sup_cdf_distance(m, density, grid);
        r.rows.push_back(std::move(row));
    }

    if (r.rows.size() > 1) {
        bool decreasing = true, increasing = true;
        for (std::size_t i = 1; i < r.rows.size(); ++i) {
            decreasing = decreasing && r.rows[i].min_alpha < r.rows[i - 1].min_alpha;
            increasing = increasing && r.rows[i].ratio_sg >= r.rows[i - 1].ratio_sg;
        }
        for (const auto& row : r.rows) increasing = increasing && row.ratio_sg < r.genus_limit;
        r.min_alpha_decreasing = decreasing;
        r.ratio_sg_increasing_below_limit = increasing;
    }
    r.final_sg_gap = r.genus_limit - r.rows.back().ratio_sg;
    r.final_pg_gap = abs(r.geometric_limit - r.rows.back().ratio_pg);
    return r;
}

std::string family_csv(const FamilyReport& report) {
    std::ostringstream os;
    os << "parameter,mu,min_alpha,ratio_pg,ratio_sg,cdf_distance\n";
    for (const auto& row : report.rows) {
        os << row.parameter << ',' << row.mu << ',' << row.min_alpha << ',' << row.ratio_pg << ',' << row.ratio_sg
           << ',' << row.cdf_distance << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const FamilyReport& report) {
    auto flag = [](const std::optional<bool>& f) { return f ? nlohmann::json(*f) : nlohmann::json(nullptr); };
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"parameter", row.parameter},
                        {"mu", row.mu},
                        {"min_alpha", row.min_alpha.to_string()},
                        {"ratio_pg", row.ratio_pg.to_string()},
                        {"ratio_sg", row.ratio_sg.to_string()},
                        {"sg_over_pg", row.sg_over_pg ? nlohmann::json(row.sg_over_pg->to_string()) : nlohmann::json(nullptr)},
                        {"cdf_distance", row.cdf_distance.to_string()}});
    }
    return {{"schema", 1},
            {"n", report.n},
            {"grid", report.grid},
            {"genus_limit", report.genus_limit.to_string()},
            {"geometric_limit", report.geometric_limit.to_string()},
            {"min_alpha_decreasing", flag(report.min_alpha_decreasing)},
            {"ratio_sg_increasing_below_limit", flag(report.ratio_sg_increasing_below_limit)},
            {"final_sg_gap", report.final_sg_gap.to_string()},
            {"final_pg_gap", report.final_pg_gap.to_string()},
            {"members", rows}};
}

}  // namespace specgenus
