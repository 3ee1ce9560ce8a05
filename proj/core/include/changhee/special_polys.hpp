#ifndef CHANGHEE_SPECIAL_POLYS_HPP
#define CHANGHEE_SPECIAL_POLYS_HPP

#include <string>
#include <vector>

#include "changhee/series.hpp"
#include "changhee/xlpoly.hpp"

namespace changhee {

enum class PolyFamily { Euler, Changhee, LambdaChanghee };

std::string family_name(PolyFamily f);

/// Entries 0..nmax of one polynomial family; entry n is monic of degree n
/// in x, and lambda-Changhee entries carry no negative lambda powers.
struct PolySequence {
    PolyFamily family;
    std::vector<XLPoly> entries;

    int nmax() const { return static_cast<int>(entries.size()) - 1; }
    const XLPoly& entry(int n) const;
};

/// 2/(e^t+1) e^{xt} = sum E_n(x) t^n/n!.
PolySequence euler_polys(int nmax);

/// 2/(t+2) (1+t)^x = sum Ch_n(x) t^n/n!.
PolySequence changhee_polys(int nmax);

/// The degenerate Changhee generating function
///   2*lam / (2*lam + log(1+lam*t)) * (1 + log(1+lam*t)/lam)^x
/// through the given order. lam must be an invertible monomial (the
/// symbolic lambda or a nonzero rational).
TruncatedSeries lambda_changhee_gf(int order, const XLPoly& lam);
TruncatedSeries lambda_changhee_gf(int order);

/// Entries n = n! [t^n] of the generating function above with symbolic
/// lambda. Each entry is checked to be free of negative lambda powers;
/// a violation throws PoleNotCancelled. order defaults to nmax, the
/// smallest order that determines entries 0..nmax.
PolySequence lambda_changhee_polys(int nmax, int order = -1);

/// lambda-Changhee numbers: the polynomials above at x = 0.
std::vector<XLPoly> lambda_changhee_numbers(int nmax);

/// E_n(x) = sum_m Ch_m(x) S2(n,m), built from changhee_polys.
PolySequence convert_euler_from_changhee(int nmax);

/// Ch_n(x) = sum_m S1(n,m) E_m(x), built from euler_polys.
PolySequence convert_changhee_from_euler(int nmax);

}  // namespace changhee

#endif
