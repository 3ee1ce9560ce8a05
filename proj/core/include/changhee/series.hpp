#ifndef CHANGHEE_SERIES_HPP
#define CHANGHEE_SERIES_HPP

#include <vector>

#include <nlohmann/json.hpp>

#include "changhee/xlpoly.hpp"

namespace changhee {

/// Formal power series in t over XLPoly, truncated at a fixed order T:
/// coefficients of t^0 .. t^T are stored, everything above is unknown.
/// Binary operations truncate to the smaller operand order.
class TruncatedSeries {
public:
    /// Zero series of the given order (order >= 0).
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<XLPoly> coeffs);

    static TruncatedSeries constant(const XLPoly& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const XLPoly& coeff(int n) const;
    void set_coeff(int n, XLPoly c);
    bool is_zero() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    /// Cauchy product through min(order a, order b).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    /// Every coefficient multiplied by c.
    TruncatedSeries scaled(const XLPoly& c) const;

    /// Termwise d/dt; the order drops by one. Throws OrderExhausted at
    /// order 0.
    TruncatedSeries derivative() const;

    /// Multiplicative inverse through the same order; the constant term
    /// must be an invertible monomial (NotAUnit otherwise).
    TruncatedSeries reciprocal() const;

    /// Integer power; negative exponents go through reciprocal().
    TruncatedSeries pow(int e) const;

    /// Copy with the order lowered to new_order (<= order).
    TruncatedSeries truncated(int new_order) const;

    /// JSON array of XLPoly objects, index = power of t.
    nlohmann::ordered_json to_json() const;
    static TruncatedSeries from_json(const nlohmann::json& j);

private:
    std::vector<XLPoly> coeffs_;  // size order + 1
};

/// log(1 + u*t) = sum_{m>=1} (-1)^{m+1} u^m t^m / m through the given
/// order; u defaults to the symbolic lambda.
TruncatedSeries log1p_scaled(int order, const XLPoly& u);
TruncatedSeries log1p_lambda_t(int order);

/// exp(t) and exp(x*t).
TruncatedSeries exp_t(int order);
TruncatedSeries exp_xt(int order);

/// (1 + u)^x with x symbolic: sum_m (x)_m/m! u^m. u must have zero
/// constant term (NonzeroConstant otherwise); the result order is
/// min(order of u, order).
TruncatedSeries binom_power(const TruncatedSeries& u, int order);

}  // namespace changhee

#endif
