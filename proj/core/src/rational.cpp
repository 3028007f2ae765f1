#include "specgenus/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "specgenus/errors.hpp"

namespace specgenus {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

BigInt parse_integer(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) throw ValidationError("invalid rational literal '" + std::string(s) + "'");
    BigInt out;
    out.set_str(std::string(s.front() == '+' ? s.substr(1) : s), 10);
    return out;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ValidationError("invalid rational literal '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.sign() == 0) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

BigInt Rational::ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw std::overflow_error("rational " + to_string() + " is not an integer");
    return specgenus::to_int64(value_.get_num());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned e) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), r.raw().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), r.raw().get_den_mpz_t(), e);
    return Rational(num, den);
}

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer " + v.get_str() + " exceeds 64 bits");
    return v.get_si();
}

}  // namespace specgenus

std::size_t std::hash<specgenus::Rational>::operator()(const specgenus::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
}
