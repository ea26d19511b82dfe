#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace qdice {

/// Arbitrary-precision rational, always kept in canonical form:
/// numerator and denominator coprime, denominator positive.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit, integers embed in Q
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Accepts an optional sign followed by digits, optionally "/digits".
    /// Returns nullopt on malformed text or a zero denominator.
    static std::optional<Rational> parse(std::string_view text);
    /// Like parse, but throws std::invalid_argument instead.
    static Rational from_string(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    Rational abs() const;
    double to_double() const { return q_.get_d(); }

    /// "p/q", or plain "p" when the denominator is 1.
    std::string str() const;
    /// Decimal expansion with the given number of significant digits,
    /// rounded half away from zero. Trailing zeros are kept, so the
    /// digit count is part of the output contract.
    std::string decimal(int significant_digits = 9) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

}  // namespace qdice
