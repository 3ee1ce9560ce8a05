#ifndef CHANGHEE_XLPOLY_HPP
#define CHANGHEE_XLPOLY_HPP

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "changhee/rational.hpp"

namespace changhee {

/// Exponent pair of a term c * x^x * lambda^l. x is never negative;
/// l may be (the ring is Laurent in lambda).
struct XLMonomial {
    int x = 0;
    int l = 0;
    friend auto operator<=>(const XLMonomial&, const XLMonomial&) = default;
};

/// Element of Q[x][lambda, lambda^-1] as a sparse term map. Zero
/// coefficients are never stored, so the representation is canonical and
/// operator== is semantic equality.
class XLPoly {
public:
    using TermMap = std::map<XLMonomial, Rational>;

    XLPoly() = default;
    XLPoly(const Rational& c) { add_term({0, 0}, c); }
    XLPoly(long c) : XLPoly(Rational(c)) {}

    static XLPoly variable_x() { return monomial(1, 0, Rational(1)); }
    static XLPoly variable_lambda() { return monomial(0, 1, Rational(1)); }
    static XLPoly monomial(int xdeg, int ldeg, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// True when the polynomial is a single c*lambda^b term (or zero-free
    /// of variables entirely); these are exactly the units of the ring.
    bool is_constant() const;

    const TermMap& terms() const { return terms_; }
    Rational coeff(int xdeg, int ldeg) const;
    /// Constant term as a scalar; throws OutOfDomain unless the polynomial
    /// is free of both variables.
    Rational constant_value() const;

    /// Largest x power, or -1 for the zero polynomial.
    int x_degree() const;
    /// Smallest / largest lambda power over all terms; 0 for zero.
    int lambda_degree_min() const;
    int lambda_degree_max() const;

    XLPoly operator-() const;
    XLPoly& operator+=(const XLPoly& o);
    XLPoly& operator-=(const XLPoly& o);
    XLPoly& operator*=(const XLPoly& o);
    XLPoly& operator*=(const Rational& c);

    friend XLPoly operator+(XLPoly a, const XLPoly& b) { a += b; return a; }
    friend XLPoly operator-(XLPoly a, const XLPoly& b) { a -= b; return a; }
    friend XLPoly operator*(XLPoly a, const XLPoly& b) { a *= b; return a; }
    friend XLPoly operator*(XLPoly a, const Rational& c) { a *= c; return a; }
    friend XLPoly operator*(const Rational& c, XLPoly a) { a *= c; return a; }

    friend bool operator==(const XLPoly&, const XLPoly&) = default;

    /// Inverse of a single-term c*lambda^b polynomial; throws NotAUnit for
    /// anything else (x is not invertible here).
    XLPoly invert_monomial() const;

    /// Integer power. Negative exponents require an invertible monomial.
    XLPoly pow(int e) const;

    /// Evaluates x and/or lambda, keeping unset variables symbolic.
    /// Substituting lambda = 0 into a term with a negative lambda power
    /// throws NegativeLaurentAtZero.
    XLPoly substitute(const std::optional<Rational>& xval,
                      const std::optional<Rational>& lval) const;

    /// {"terms":[{"x":..,"l":..,"n":"..","d":".."}]}, terms ascending by
    /// (x, l), numerator carrying the sign, d > 0. Round-trips bit-exactly.
    nlohmann::ordered_json to_json() const;
    static XLPoly from_json(const nlohmann::json& j);

    /// Plain-text rendering, terms in descending (x, lambda) order, with
    /// lambda spelled "l" (e.g. "x^2 - l*x - 2*x + 1/2*l + 1/2").
    std::string str() const;

private:
    TermMap terms_;
    void add_term(const XLMonomial& m, const Rational& c);
};

}  // namespace changhee

#endif
