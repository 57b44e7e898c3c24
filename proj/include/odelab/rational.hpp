#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace odelab {

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator. Every operation is exact; nothing here ever rounds.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, integers embed
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : q_(n) {}
    explicit Rational(const mpq_class& q);

    /// Parses "p" or "p/q" (optional leading sign, base 10). Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rational from_string(std::string_view text);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const;
    Rational pow(unsigned long e) const;
    double to_double() const { return q_.get_d(); }

    /// Serializes as "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);  // throws on division by zero

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;  // invariant: canonical (lowest terms, positive denominator)
};

/// n! as an exact Rational.
Rational factorial(unsigned long n);

/// n! / (n-k)! = n (n-1) ... (n-k+1); 1 for k = 0.
Rational falling_factorial(unsigned long n, unsigned long k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace odelab
