#include "changhee/rational.hpp"

#include <cctype>

namespace changhee {

Integer factorial(int n) {
    if (n < 0) throw OutOfDomain("factorial of negative argument " + std::to_string(n));
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational::Rational(long n, long d) {
    if (d == 0) throw OutOfDomain("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const Integer& n, const Integer& d) {
    if (sgn(d) == 0) throw OutOfDomain("rational with zero denominator");
    q_.get_num() = n;
    q_.get_den() = d;
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    // mpq_set_str tolerates embedded whitespace; reject it up front so
    // "1 / 2" and "" are errors rather than surprises.
    if (s.empty()) throw ParseError("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
            throw ParseError("bad character in rational literal: '" + std::string(s) + "'");
        }
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0) {
        throw ParseError("unparsable rational literal: '" + std::string(s) + "'");
    }
    if (sgn(mpq_class(q.get_den())) == 0) throw OutOfDomain("rational with zero denominator");
    Rational r;
    r.q_ = q;
    r.q_.canonicalize();
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw OutOfDomain("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw OutOfDomain("inverse of zero rational");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational Rational::pow(int e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    Rational acc(1);
    for (int i = 0; i < n; ++i) acc *= base;
    return acc;
}

}  // namespace changhee
