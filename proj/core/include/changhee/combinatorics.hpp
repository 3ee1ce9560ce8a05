#ifndef CHANGHEE_COMBINATORICS_HPP
#define CHANGHEE_COMBINATORICS_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "changhee/rational.hpp"
#include "changhee/xlpoly.hpp"

namespace changhee {

enum class StirlingKind { FirstSigned, Second };

/// Triangle of Stirling numbers up to row nmax, filled eagerly by the
/// two-term recurrences. First-kind values are signed: (x)_n expands to
/// sum_k S1(n,k) x^k. Out-of-triangle lookups (k < 0 or k > n) read 0.
class StirlingTable {
public:
    StirlingTable(StirlingKind kind, int nmax);

    StirlingKind kind() const { return kind_; }
    int nmax() const { return nmax_; }

    const Integer& at(int n, int k) const;

    /// Overwrites one triangle entry. Exists for fault injection in the
    /// verification harness; the table makes no consistency promise after.
    void set(int n, int k, Integer v);

private:
    StirlingKind kind_;
    int nmax_;
    std::vector<std::vector<Integer>> rows_;
    Integer zero_;
};

/// Generalized harmonic numbers H_{N,j} for 0 <= j <= N <= nmax.
/// H_{N,0} = 1; H_{N,j} = sum_{m=j}^{N} H_{m-1,j-1}/m for j >= 1.
/// Lookups with j > N throw OutOfDomain.
class HarmonicTable {
public:
    explicit HarmonicTable(int nmax);

    int nmax() const { return nmax_; }
    const Rational& at(int N, int j) const;

private:
    int nmax_;
    std::vector<std::vector<Rational>> rows_;
};

/// Iterated power sums S_{k,j}(N) for one fixed k: S_{k,0}(N) = (N+1)^k
/// and S_{k,j}(N) = sum_{l=0}^{N} S_{k,j-1}(l). For k = 1 the table also
/// carries the conventional row S_{1,-1}(N) = 1.
class PowerSumTable {
public:
    PowerSumTable(int k, int jmax, int nmax);

    int k() const { return k_; }
    int jmax() const { return jmax_; }
    int nmax() const { return nmax_; }
    const Integer& at(int j, int N) const;

private:
    int k_;
    int jmax_;
    int nmax_;
    int jmin_;
    std::vector<std::vector<Integer>> rows_;  // rows_[j - jmin_][N]
};

// Memoized lookups backed by shared tables that grow on demand; safe to
// call from several threads.

/// S1(n,k) signed or S2(n,k); arguments outside the triangle return 0.
Integer stirling(StirlingKind kind, int n, int k);

/// H_{N,j}; throws OutOfDomain unless 0 <= j <= N.
Rational harmonic(int N, int j);

/// S_{k,j}(N) with the k = 1, j = -1 convention valued 1. Throws
/// OutOfDomain for k < 1, N < 0, j < -1, or j = -1 with k != 1.
Integer power_sum(int k, int j, int N);

/// (x)_n = x(x-1)...(x-n+1) as a polynomial in x; (x)_0 = 1.
XLPoly falling_factorial(int n);

/// (c)_m = c(c-1)...(c-m+1) over the integers; (c)_0 = 1 for any c.
Integer falling_factorial_int(long c, int m);

/// top! / prod(parts!); throws PartsMismatch unless the parts sum to top.
Integer multinomial(int top, std::span<const int> parts);
Integer multinomial(int top, std::initializer_list<int> parts);

/// C(n,k); 0 outside 0 <= k <= n.
Integer binomial(int n, int k);

}  // namespace changhee

#endif
