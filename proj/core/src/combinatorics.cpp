#include "changhee/combinatorics.hpp"

#include <map>
#include <mutex>

namespace changhee {

StirlingTable::StirlingTable(StirlingKind kind, int nmax) : kind_(kind), nmax_(nmax), zero_(0) {
    if (nmax < 0) throw OutOfDomain("Stirling table with negative size");
    rows_.resize(nmax + 1);
    rows_[0] = {Integer(1)};
    for (int n = 1; n <= nmax; ++n) {
        rows_[n].assign(n + 1, Integer(0));
        for (int k = 0; k <= n; ++k) {
            Integer up_left = k > 0 ? rows_[n - 1][k - 1] : Integer(0);
            Integer up = k <= n - 1 ? rows_[n - 1][k] : Integer(0);
            if (kind == StirlingKind::FirstSigned) {
                rows_[n][k] = up_left - Integer(n - 1) * up;
            } else {
                rows_[n][k] = up_left + Integer(k) * up;
            }
        }
    }
}

const Integer& StirlingTable::at(int n, int k) const {
    if (n < 0 || n > nmax_) {
        throw OutOfDomain("Stirling row " + std::to_string(n) + " outside table of size " +
                          std::to_string(nmax_));
    }
    if (k < 0 || k > n) return zero_;
    return rows_[n][k];
}

void StirlingTable::set(int n, int k, Integer v) {
    if (n < 0 || n > nmax_ || k < 0 || k > n) {
        throw OutOfDomain("Stirling entry (" + std::to_string(n) + "," + std::to_string(k) +
                          ") outside table");
    }
    rows_[n][k] = std::move(v);
}

HarmonicTable::HarmonicTable(int nmax) : nmax_(nmax) {
    if (nmax < 0) throw OutOfDomain("harmonic table with negative size");
    rows_.resize(nmax + 1);
    for (int N = 0; N <= nmax; ++N) {
        rows_[N].assign(N + 1, Rational(0));
        rows_[N][0] = Rational(1);
    }
    for (int j = 1; j <= nmax; ++j) {
        Rational acc(0);
        for (int N = j; N <= nmax; ++N) {
            acc += rows_[N - 1][j - 1] * Rational(1, N);
            rows_[N][j] = acc;
        }
    }
}

const Rational& HarmonicTable::at(int N, int j) const {
    if (N < 0 || N > nmax_) {
        throw OutOfDomain("harmonic index N=" + std::to_string(N) + " outside table");
    }
    if (j < 0 || j > N) {
        throw OutOfDomain("harmonic H_{" + std::to_string(N) + "," + std::to_string(j) +
                          "} undefined (need 0 <= j <= N)");
    }
    return rows_[N][j];
}

PowerSumTable::PowerSumTable(int k, int jmax, int nmax)
    : k_(k), jmax_(jmax), nmax_(nmax), jmin_(k == 1 ? -1 : 0) {
    if (k < 1) throw OutOfDomain("power sum requires k >= 1");
    if (nmax < 0 || jmax < jmin_) throw OutOfDomain("power sum table with empty range");
    rows_.resize(jmax - jmin_ + 1);
    if (k == 1) {
        rows_[0].assign(nmax + 1, Integer(1));  // S_{1,-1}(N) = 1
    }
    if (jmax >= 0) {
        auto& base = rows_[0 - jmin_];
        base.resize(nmax + 1);
        for (int N = 0; N <= nmax; ++N) {
            Integer v;
            mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(N + 1),
                          static_cast<unsigned long>(k));
            base[N] = v;
        }
    }
    for (int j = 1; j <= jmax; ++j) {
        auto& row = rows_[j - jmin_];
        row.resize(nmax + 1);
        Integer acc(0);
        for (int N = 0; N <= nmax; ++N) {
            acc += rows_[j - 1 - jmin_][N];
            row[N] = acc;
        }
    }
}

const Integer& PowerSumTable::at(int j, int N) const {
    if (j < jmin_ || j > jmax_ || N < 0 || N > nmax_) {
        throw OutOfDomain("power sum S_{" + std::to_string(k_) + "," + std::to_string(j) + "}(" +
                          std::to_string(N) + ") outside table");
    }
    return rows_[j - jmin_][N];
}

Integer stirling(StirlingKind kind, int n, int k) {
    if (n < 0 || k < 0 || k > n) return Integer(0);
    static std::mutex mu;
    std::scoped_lock lock(mu);
    static StirlingTable first(StirlingKind::FirstSigned, 8);
    static StirlingTable second(StirlingKind::Second, 8);
    StirlingTable& t = kind == StirlingKind::FirstSigned ? first : second;
    if (n > t.nmax()) t = StirlingTable(kind, std::max(n, 2 * t.nmax()));
    return t.at(n, k);
}

Rational harmonic(int N, int j) {
    if (N < 0 || j < 0 || j > N) {
        throw OutOfDomain("harmonic H_{" + std::to_string(N) + "," + std::to_string(j) +
                          "} undefined (need 0 <= j <= N)");
    }
    static std::mutex mu;
    std::scoped_lock lock(mu);
    static HarmonicTable table(8);
    if (N > table.nmax()) table = HarmonicTable(std::max(N, 2 * table.nmax()));
    return table.at(N, j);
}

Integer power_sum(int k, int j, int N) {
    if (k < 1) throw OutOfDomain("power sum requires k >= 1, got k=" + std::to_string(k));
    if (N < 0) throw OutOfDomain("power sum at negative N");
    if (j < -1 || (j == -1 && k != 1)) {
        throw OutOfDomain("power sum S_{" + std::to_string(k) + "," + std::to_string(j) +
                          "} undefined");
    }
    static std::mutex mu;
    std::scoped_lock lock(mu);
    static std::map<int, PowerSumTable> tables;
    auto it = tables.find(k);
    if (it == tables.end()) {
        it = tables.emplace(k, PowerSumTable(k, std::max(j, 8), std::max(N, 8))).first;
    } else if (j > it->second.jmax() || N > it->second.nmax()) {
        it->second = PowerSumTable(k, std::max(j, 2 * it->second.jmax()),
                                   std::max(N, 2 * it->second.nmax()));
    }
    return it->second.at(j, N);
}

XLPoly falling_factorial(int n) {
    if (n < 0) throw OutOfDomain("falling factorial of negative order");
    XLPoly p(1);
    XLPoly x = XLPoly::variable_x();
    for (int i = 0; i < n; ++i) p *= x - XLPoly(i);
    return p;
}

Integer falling_factorial_int(long c, int m) {
    if (m < 0) throw OutOfDomain("falling factorial with negative length");
    Integer p(1);
    for (int s = 0; s < m; ++s) p *= Integer(c - s);
    return p;
}

Integer multinomial(int top, std::span<const int> parts) {
    if (top < 0) throw OutOfDomain("multinomial with negative top index");
    long sum = 0;
    for (int p : parts) {
        if (p < 0) throw OutOfDomain("negative multinomial part");
        sum += p;
    }
    if (sum != top) {
        throw PartsMismatch("multinomial parts sum to " + std::to_string(sum) + ", expected " +
                            std::to_string(top));
    }
    Integer r = factorial(top);
    for (int p : parts) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), factorial(p).get_mpz_t());
        r = q;
    }
    return r;
}

Integer multinomial(int top, std::initializer_list<int> parts) {
    return multinomial(top, std::span<const int>(parts.begin(), parts.size()));
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace changhee
