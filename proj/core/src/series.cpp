#include "changhee/series.hpp"

#include <algorithm>

#include "changhee/combinatorics.hpp"

namespace changhee {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw OutOfDomain("series with negative truncation order");
    coeffs_.resize(order + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<XLPoly> coeffs) {
    if (order < 0) throw OutOfDomain("series with negative truncation order");
    if (static_cast<int>(coeffs.size()) != order + 1) {
        throw OutOfDomain("series coefficient count does not match order");
    }
    coeffs_ = std::move(coeffs);
}

TruncatedSeries TruncatedSeries::constant(const XLPoly& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

const XLPoly& TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > order()) {
        throw OutOfDomain("series coefficient index " + std::to_string(n) +
                          " outside order " + std::to_string(order()));
    }
    return coeffs_[n];
}

void TruncatedSeries::set_coeff(int n, XLPoly c) {
    if (n < 0 || n > order()) {
        throw OutOfDomain("series coefficient index " + std::to_string(n) +
                          " outside order " + std::to_string(order()));
    }
    coeffs_[n] = std::move(c);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const XLPoly& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(order());
    for (int n = 0; n <= order(); ++n) r.coeffs_[n] = -coeffs_[n];
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int T = std::min(a.order(), b.order());
    TruncatedSeries r(T);
    for (int n = 0; n <= T; ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    int T = std::min(a.order(), b.order());
    TruncatedSeries r(T);
    for (int n = 0; n <= T; ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int T = std::min(a.order(), b.order());
    TruncatedSeries r(T);
    for (int p = 0; p <= T; ++p) {
        if (a.coeffs_[p].is_zero()) continue;
        for (int q = 0; p + q <= T; ++q) {
            if (b.coeffs_[q].is_zero()) continue;
            r.coeffs_[p + q] += a.coeffs_[p] * b.coeffs_[q];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const XLPoly& c) const {
    TruncatedSeries r(order());
    for (int n = 0; n <= order(); ++n) r.coeffs_[n] = coeffs_[n] * c;
    return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() == 0) throw OrderExhausted("cannot differentiate an order-0 series");
    TruncatedSeries r(order() - 1);
    for (int n = 0; n < order(); ++n) r.coeffs_[n] = coeffs_[n + 1] * Rational(n + 1);
    return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    // b_0 = a_0^{-1}, b_n = -a_0^{-1} sum_{p=1}^{n} a_p b_{n-p}.
    XLPoly b0 = coeffs_[0].invert_monomial();
    TruncatedSeries r(order());
    r.coeffs_[0] = b0;
    for (int n = 1; n <= order(); ++n) {
        XLPoly acc;
        for (int p = 1; p <= n; ++p) acc += coeffs_[p] * r.coeffs_[n - p];
        r.coeffs_[n] = -(b0 * acc);
    }
    return r;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    if (e == 0) return constant(XLPoly(1), order());
    TruncatedSeries base = e < 0 ? reciprocal() : *this;
    int n = e < 0 ? -e : e;
    TruncatedSeries acc = constant(XLPoly(1), order());
    for (int i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order()) {
        throw OutOfDomain("cannot truncate order " + std::to_string(order()) + " series to " +
                          std::to_string(new_order));
    }
    TruncatedSeries r(new_order);
    for (int n = 0; n <= new_order; ++n) r.coeffs_[n] = coeffs_[n];
    return r;
}

nlohmann::ordered_json TruncatedSeries::to_json() const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : coeffs_) arr.push_back(c.to_json());
    return arr;
}

TruncatedSeries TruncatedSeries::from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("series JSON must be a nonempty array of polynomials");
    }
    std::vector<XLPoly> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(XLPoly::from_json(c));
    return TruncatedSeries(static_cast<int>(j.size()) - 1, std::move(coeffs));
}

TruncatedSeries log1p_scaled(int order, const XLPoly& u) {
    TruncatedSeries s(order);
    for (int m = 1; m <= order; ++m) {
        Rational c = Rational(m % 2 == 1 ? 1 : -1, m);
        s.set_coeff(m, u.pow(m) * c);
    }
    return s;
}

TruncatedSeries log1p_lambda_t(int order) {
    return log1p_scaled(order, XLPoly::variable_lambda());
}

TruncatedSeries exp_t(int order) {
    TruncatedSeries s(order);
    for (int m = 0; m <= order; ++m) s.set_coeff(m, XLPoly(Rational(Integer(1), factorial(m))));
    return s;
}

TruncatedSeries exp_xt(int order) {
    TruncatedSeries s(order);
    for (int m = 0; m <= order; ++m) {
        s.set_coeff(m, XLPoly::monomial(m, 0, Rational(Integer(1), factorial(m))));
    }
    return s;
}

TruncatedSeries binom_power(const TruncatedSeries& u, int order) {
    if (!u.coeff(0).is_zero()) {
        throw NonzeroConstant("binomial power base must have zero constant term, got " +
                              u.coeff(0).str());
    }
    int T = std::min(u.order(), order);
    TruncatedSeries base = u.truncated(T);
    TruncatedSeries result(T);
    TruncatedSeries upow = TruncatedSeries::constant(XLPoly(1), T);
    for (int m = 0; m <= T; ++m) {
        // (x)_m / m! * u^m; u^m has valuation m, so the loop covers order T.
        XLPoly c = falling_factorial(m) * Rational(Integer(1), factorial(m));
        result = result + upow.scaled(c);
        if (m < T) upow = upow * base;
    }
    return result;
}

}  // namespace changhee
