#include "specgenus/spectral_multiset.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "specgenus/errors.hpp"

namespace specgenus {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("multiplicity overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("multiplicity overflow");
    return out;
}

// Dense integer polynomial, index = exponent.
using IntPoly = std::vector<std::int64_t>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly to_dense(const ExponentPolynomial& p, const BigInt& scale) {
    IntPoly out;
    for (const auto& [exponent, coeff] : p) {
        if (coeff == 0) continue;
        const Rational scaled = exponent * Rational(scale);
        if (!scaled.is_integer() || scaled.sign() < 0) {
            throw NonExactDivision("exponent " + exponent.to_string() + " is not a nonnegative multiple of 1/" +
                                   scale.get_str());
        }
        const auto index = static_cast<std::size_t>(scaled.to_int64());
        if (out.size() <= index) out.resize(index + 1, 0);
        out[index] = checked_add(out[index], coeff);
    }
    trim(out);
    return out;
}

}  // namespace

SpectralMultiset::SpectralMultiset(int dimension, std::vector<SpectralEntry> entries) : dimension_(dimension) {
    std::map<Rational, std::int64_t> merged;
    for (auto& e : entries) merged[e.exponent] = checked_add(merged[e.exponent], e.multiplicity);
    entries_.reserve(merged.size());
    for (auto& [exponent, mult] : merged) {
        if (mult < 0) throw ValidationError("negative multiplicity at exponent " + exponent.to_string());
        if (mult > 0) entries_.push_back({exponent, mult});
    }
}

std::int64_t SpectralMultiset::total_multiplicity() const {
    std::int64_t total = 0;
    for (const auto& e : entries_) total = checked_add(total, e.multiplicity);
    return total;
}

const Rational& SpectralMultiset::min_exponent() const {
    if (entries_.empty()) throw DomainError("empty spectral multiset");
    return entries_.front().exponent;
}

const Rational& SpectralMultiset::max_exponent() const {
    if (entries_.empty()) throw DomainError("empty spectral multiset");
    return entries_.back().exponent;
}

Rational SpectralMultiset::spectral_genus() const {
    Rational sum;
    const Rational one(1);
    for (const auto& e : entries_) {
        if (e.exponent >= one) break;
        sum += (one - e.exponent) * Rational(e.multiplicity);
    }
    return sum;
}

std::int64_t SpectralMultiset::geometric_genus() const {
    std::int64_t count = 0;
    const Rational one(1);
    for (const auto& e : entries_) {
        if (e.exponent > one) break;
        count += e.multiplicity;
    }
    return count;
}

bool SpectralMultiset::is_symmetric() const {
    const Rational top(dimension_ + 1);
    const std::size_t count = entries_.size();
    for (std::size_t i = 0; i < count; ++i) {
        const auto& lo = entries_[i];
        const auto& hi = entries_[count - 1 - i];
        if (lo.multiplicity != hi.multiplicity || lo.exponent + hi.exponent != top) return false;
    }
    return true;
}

bool SpectralMultiset::in_open_range() const {
    const Rational top(dimension_ + 1);
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const SpectralEntry& e) { return e.exponent.sign() > 0 && e.exponent < top; });
}

std::vector<SpectralEntry> SpectralMultiset::unshifted() const {
    std::vector<SpectralEntry> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back({e.exponent - Rational(1), e.multiplicity});
    return out;
}

SpectralMultiset multiset_sum_product(const SpectralMultiset& a, const SpectralMultiset& b) {
    std::vector<SpectralEntry> sums;
    sums.reserve(a.entries().size() * b.entries().size());
    for (const auto& x : a.entries()) {
        for (const auto& y : b.entries()) {
            sums.push_back({x.exponent + y.exponent, checked_mul(x.multiplicity, y.multiplicity)});
        }
    }
    return SpectralMultiset(a.dimension() + b.dimension() + 1, std::move(sums));
}

ExponentPolynomial exponent_poly_multiply(const ExponentPolynomial& a, const ExponentPolynomial& b) {
    ExponentPolynomial out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            auto& slot = out[ea + eb];
            slot = checked_add(slot, checked_mul(ca, cb));
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

SpectralMultiset fractional_poly_divide(const ExponentPolynomial& numerator, const ExponentPolynomial& denominator,
                                        int dimension) {
    BigInt scale = 1;
    for (const auto* poly : {&numerator, &denominator}) {
        for (const auto& [exponent, coeff] : *poly) {
            if (coeff != 0) scale = lcm(scale, exponent.denominator());
        }
    }

    IntPoly rem = to_dense(numerator, scale);
    const IntPoly den = to_dense(denominator, scale);
    if (den.empty()) throw NonExactDivision("division by the zero polynomial");

    IntPoly quotient;
    const std::int64_t lead = den.back();
    const std::size_t den_deg = den.size() - 1;
    if (rem.size() >= den.size()) {
        quotient.assign(rem.size() - den_deg, 0);
        for (std::size_t top = rem.size(); top-- > den_deg;) {
            const std::int64_t c = rem[top];
            if (c == 0) continue;
            if (c % lead != 0) throw NonExactDivision("quotient has non-integer coefficients");
            const std::int64_t q = c / lead;
            const std::size_t shift = top - den_deg;
            quotient[shift] = q;
            for (std::size_t i = 0; i <= den_deg; ++i) {
                rem[shift + i] = checked_add(rem[shift + i], -checked_mul(q, den[i]));
            }
        }
    }
    trim(rem);
    if (!rem.empty()) throw NonExactDivision("nonzero remainder in spectral polynomial quotient");

    std::vector<SpectralEntry> entries;
    for (std::size_t i = 0; i < quotient.size(); ++i) {
        if (quotient[i] < 0) {
            throw NonExactDivision("negative coefficient in spectral polynomial quotient");
        }
        if (quotient[i] > 0) {
            entries.push_back({Rational(BigInt(static_cast<unsigned long>(i)), scale), quotient[i]});
        }
    }
    return SpectralMultiset(dimension, std::move(entries));
}

nlohmann::json to_json(const SpectralMultiset& m) {
    auto out = nlohmann::json::array();
    for (const auto& e : m.entries()) {
        out.push_back({{"exponent", e.exponent.to_string()}, {"multiplicity", e.multiplicity}});
    }
    return out;
}

SpectralMultiset spectral_multiset_from_json(const nlohmann::json& j, int dimension) {
    std::vector<SpectralEntry> entries;
    for (const auto& item : j) {
        entries.push_back({Rational::parse(item.at("exponent").get<std::string>()),
                           item.at("multiplicity").get<std::int64_t>()});
    }
    return SpectralMultiset(dimension, std::move(entries));
}

}  // namespace specgenus
