#include "qdice/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qdice {

namespace {

mpz_class pow10z(unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    mpq_set_num(q_.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q_.get_mpq_t(), den.get_mpz_t());
    q_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    auto scan_digits = [&](std::string& out) {
        const std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) return false;
        out.assign(text.substr(start, i - start));
        return true;
    };
    std::string num_digits, den_digits = "1";
    if (!scan_digits(num_digits)) return std::nullopt;
    if (i < n && text[i] == '/') {
        ++i;
        if (!scan_digits(den_digits)) return std::nullopt;
    }
    if (i != n) return std::nullopt;
    mpz_class num(num_digits), den(den_digits);
    if (sgn(den) == 0) return std::nullopt;
    if (neg) num = -num;
    return Rational(num, den);
}

Rational Rational::from_string(std::string_view text) {
    auto r = parse(text);
    if (!r) throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
    return *r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.sign() < 0) r = -r;
    return r;
}

std::string Rational::str() const { return q_.get_str(); }

std::string Rational::decimal(int significant_digits) const {
    if (significant_digits < 1) throw std::invalid_argument("Rational::decimal: need at least 1 digit");
    if (is_zero()) return "0";
    const bool neg = sign() < 0;
    const mpz_class p = ::abs(q_.get_num());
    const mpz_class q = q_.get_den();

    // Exponent e with 10^e <= p/q < 10^(e+1); size estimate then exact correction.
    auto cmp_pow = [&](long k) {
        return k >= 0 ? cmp(p, q * pow10z(static_cast<unsigned long>(k)))
                      : cmp(p * pow10z(static_cast<unsigned long>(-k)), q);
    };
    long e = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10));
    while (cmp_pow(e) < 0) --e;
    while (cmp_pow(e + 1) >= 0) ++e;

    // n = (p/q) * 10^(sig-1-e), rounded half away from zero; n has sig digits.
    const long k = significant_digits - 1 - e;
    mpz_class num = p, den = q;
    if (k >= 0) {
        num *= pow10z(static_cast<unsigned long>(k));
    } else {
        den *= pow10z(static_cast<unsigned long>(-k));
    }
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), mpz_class(2 * num + den).get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    if (n == pow10z(static_cast<unsigned long>(significant_digits))) {
        n = pow10z(static_cast<unsigned long>(significant_digits - 1));
        ++e;
    }

    std::string digits = n.get_str();
    std::string out;
    if (e >= significant_digits) {
        out = digits + std::string(static_cast<std::size_t>(e - significant_digits + 1), '0');
    } else if (e == significant_digits - 1) {
        out = digits;
    } else if (e >= 0) {
        out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
              digits.substr(static_cast<std::size_t>(e + 1));
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
    return neg ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qdice
