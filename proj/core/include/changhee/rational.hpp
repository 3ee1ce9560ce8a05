#ifndef CHANGHEE_RATIONAL_HPP
#define CHANGHEE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "changhee/errors.hpp"

namespace changhee {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// n! as an Integer; n must be nonnegative.
Integer factorial(int n);

/// Arbitrary-precision rational scalar, always in canonical form:
/// denominator > 0, gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(long n, long d);
    Rational(const Integer& n, const Integer& d);

    /// Parses "p" or "p/q" (decimal). Throws ParseError on malformed input
    /// and OutOfDomain on a zero denominator.
    static Rational from_string(std::string_view s);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// Multiplicative inverse; throws OutOfDomain for zero.
    Rational inverse() const;

    /// Integer power; negative exponents invert (throws OutOfDomain on zero
    /// base), and 0^0 = 1 by the empty-product convention.
    Rational pow(int e) const;

    /// "p" or "p/q"; the bare numerator when the denominator is 1.
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;  // invariant: canonical
};

}  // namespace changhee

#endif
