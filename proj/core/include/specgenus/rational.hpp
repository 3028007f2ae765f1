#pragma once

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace specgenus {

using BigInt = mpz_class;

/// Arbitrary-precision rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class. Every invariant the library computes is a
/// rational number, so this is the only scalar type on the verdict path.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T value) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<T>) {
            value_ = static_cast<long>(value);
        } else {
            value_ = static_cast<unsigned long>(value);
        }
    }
    Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "p", "-p", "p/q" (whitespace around the slash is not accepted).
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Floor as a BigInt.
    BigInt floor() const;
    /// Ceiling as a BigInt.
    BigInt ceil() const;

    /// "p/q" in lowest terms, or "p" when q = 1.
    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    /// Throws std::overflow_error if the value is not an integer fitting in int64.
    std::int64_t to_int64() const;

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
/// r^e for e >= 0.
Rational pow(const Rational& r, unsigned e);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);
std::int64_t to_int64(const BigInt& v);

}  // namespace specgenus

template <>
struct std::hash<specgenus::Rational> {
    std::size_t operator()(const specgenus::Rational& r) const noexcept;
};
