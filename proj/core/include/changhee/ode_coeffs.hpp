#ifndef CHANGHEE_ODE_COEFFS_HPP
#define CHANGHEE_ODE_COEFFS_HPP

#include <map>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "changhee/series.hpp"
#include "changhee/xlpoly.hpp"

namespace changhee {

enum class CoeffSource { Recurrence, ClosedForm };

std::string coeff_source_name(CoeffSource s);

/// The coefficient family a_{i,j}(N, x) attached to the N-th derivative of
/// the degenerate Changhee generating function: F^(N) equals
///   lam^N (1+lam t)^{-N} * sum_{1<=i+j<=N} a_{i,j} A^{-i} B^{-j} * F
/// with A = 2*lam + log(1+lam t) and B = lam + log(1+lam t).
///
/// Entries are plain polynomials in x (no lambda); indices outside
/// 1 <= i+j <= N are absent and read as zero.
class CoeffTable {
public:
    CoeffTable(int n, CoeffSource source);

    int N() const { return n_; }
    CoeffSource source() const { return source_; }

    const XLPoly& at(int i, int j) const;
    /// Stores a value (erases on zero). Rejects lambda-carrying polynomials.
    void set(int i, int j, XLPoly v);

    const std::map<std::pair<int, int>, XLPoly>& entries() const { return values_; }

    /// {"N":N,"entries":[{"i":..,"j":..,"poly":..}]} sorted by (i+j, i).
    nlohmann::ordered_json to_json() const;

private:
    int n_;
    CoeffSource source_;
    std::map<std::pair<int, int>, XLPoly> values_;
};

/// The argument-1 table: a_{1,0} = -1, a_{0,1} = x.
CoeffTable coeff_base();

/// One step of the zero-padded recurrence, advancing the argument from M
/// to M+1:
///   a_{i,j}(M+1) = -M a_{i,j}(M) - i a_{i-1,j}(M) + (x-j+1) a_{i,j-1}(M)
/// where out-of-range entries (negative index or i+j > M) read as zero.
CoeffTable coeff_step(const CoeffTable& prev);

/// Iterates coeff_step from coeff_base up to argument N.
CoeffTable coeffs_by_recurrence(int N);

/// Direct closed form, for 1 <= r <= N and 0 <= i <= r:
///   a_{i,r-i}(N) = (-1)^{N+i-r} i! S_{1,i-1}(r-i) (N-1)! H_{N-1,r-1} (x)_{r-i}
/// with S_{1,-1}(.) = 1 covering the i = 0 column.
CoeffTable coeffs_by_closed_form(int N);

/// The generating function F at the given order (delegates to
/// lambda_changhee_gf); lam is the symbolic lambda or a nonzero rational.
TruncatedSeries f_series(int order, const XLPoly& lam);
TruncatedSeries f_series(int order);

/// (d/dt)^N F computed term-by-term; the reference side of the residual.
TruncatedSeries f_derivative_oracle(int N, int order, const XLPoly& lam);
TruncatedSeries f_derivative_oracle(int N, int order);

/// Assembles lam^N (1+lam t)^{-N} (sum a_{i,j} A^{-i} B^{-j}) F at order
/// (order - table.N()).
TruncatedSeries ode_rhs(const CoeffTable& table, int order, const XLPoly& lam);
TruncatedSeries ode_rhs(const CoeffTable& table, int order);

/// f_derivative_oracle minus ode_rhs; the zero series certifies that the
/// table solves the differential equation through the truncation order.
TruncatedSeries ode_residual(int N, int order, CoeffSource source, const XLPoly& lam);
TruncatedSeries ode_residual(int N, int order, CoeffSource source);

}  // namespace changhee

#endif
