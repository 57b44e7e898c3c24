#include "odelab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace odelab {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
    if (q_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    // strict shape check before handing off to GMP: [+-]digits[/digits]
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    if (i < text.size()) {
        if (text[i] != '/') throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
        ++i;
        std::size_t den_digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++den_digits;
        }
        if (den_digits == 0 || i != text.size())
            throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    }
    std::string s(text);
    if (!s.empty() && s[0] == '+') s.erase(s.begin());
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    Rational r;
    r.q_ = q;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::pow(unsigned long e) const {
    Rational result(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1UL;
    }
    return result;
}

std::string Rational::to_string() const { return q_.get_str(); }

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r.q_ = a.q_ + b.q_;
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    r.q_ = a.q_ - b.q_;
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    r.q_ = a.q_ * b.q_;
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    r.q_ = a.q_ / b.q_;
    return r;
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational falling_factorial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class f(1);
    for (unsigned long i = 0; i < k; ++i) f *= mpz_class(n - i);
    return Rational(f);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace odelab
