#include "changhee/ode_coeffs.hpp"

#include <vector>

#include "changhee/combinatorics.hpp"
#include "changhee/special_polys.hpp"

namespace changhee {

std::string coeff_source_name(CoeffSource s) {
    return s == CoeffSource::Recurrence ? "recurrence" : "closed";
}

CoeffTable::CoeffTable(int n, CoeffSource source) : n_(n), source_(source) {
    if (n < 1) throw OutOfDomain("coefficient table needs argument N >= 1");
}

const XLPoly& CoeffTable::at(int i, int j) const {
    static const XLPoly zero;
    auto it = values_.find({i, j});
    return it == values_.end() ? zero : it->second;
}

void CoeffTable::set(int i, int j, XLPoly v) {
    if (i < 0 || j < 0 || i + j < 1 || i + j > n_) {
        throw OutOfDomain("coefficient index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside 1 <= i+j <= " + std::to_string(n_));
    }
    if (v.lambda_degree_min() != 0 || v.lambda_degree_max() != 0) {
        throw OutOfDomain("coefficient entries are polynomials in x only, got " + v.str());
    }
    if (v.is_zero()) {
        values_.erase({i, j});
    } else {
        values_.insert_or_assign({i, j}, std::move(v));
    }
}

nlohmann::ordered_json CoeffTable::to_json() const {
    nlohmann::ordered_json j;
    j["N"] = n_;
    auto entries = nlohmann::ordered_json::array();
    for (int r = 1; r <= n_; ++r) {
        for (int i = 0; i <= r; ++i) {
            auto it = values_.find({i, r - i});
            if (it == values_.end()) continue;
            nlohmann::ordered_json e;
            e["i"] = i;
            e["j"] = r - i;
            e["poly"] = it->second.to_json();
            entries.push_back(std::move(e));
        }
    }
    j["entries"] = std::move(entries);
    return j;
}

CoeffTable coeff_base() {
    CoeffTable t(1, CoeffSource::Recurrence);
    t.set(1, 0, XLPoly(-1));
    t.set(0, 1, XLPoly::variable_x());
    return t;
}

CoeffTable coeff_step(const CoeffTable& prev) {
    int M = prev.N();
    CoeffTable next(M + 1, prev.source());
    XLPoly x = XLPoly::variable_x();
    for (int r = 1; r <= M + 1; ++r) {
        for (int i = 0; i <= r; ++i) {
            int j = r - i;
            XLPoly v = prev.at(i, j) * Rational(-M);
            v -= prev.at(i - 1, j) * Rational(i);
            v += (x - XLPoly(j - 1)) * prev.at(i, j - 1);
            if (!v.is_zero()) next.set(i, j, std::move(v));
        }
    }
    return next;
}

CoeffTable coeffs_by_recurrence(int N) {
    if (N < 1) throw OutOfDomain("coefficient table needs argument N >= 1");
    CoeffTable t = coeff_base();
    while (t.N() < N) t = coeff_step(t);
    return t;
}

CoeffTable coeffs_by_closed_form(int N) {
    if (N < 1) throw OutOfDomain("coefficient table needs argument N >= 1");
    CoeffTable t(N, CoeffSource::ClosedForm);
    Rational nfact(factorial(N - 1));
    for (int r = 1; r <= N; ++r) {
        Rational h = harmonic(N - 1, r - 1);
        for (int i = 0; i <= r; ++i) {
            // S_{1,i-1}(r-i); at i = 0 this is the conventional S_{1,-1} = 1.
            Rational s(power_sum(1, i - 1, r - i));
            int sign = (N + i - r) % 2 == 0 ? 1 : -1;
            Rational c = Rational(sign) * Rational(factorial(i)) * s * nfact * h;
            t.set(i, r - i, falling_factorial(r - i) * c);
        }
    }
    return t;
}

TruncatedSeries f_series(int order, const XLPoly& lam) {
    return lambda_changhee_gf(order, lam);
}

TruncatedSeries f_series(int order) {
    return f_series(order, XLPoly::variable_lambda());
}

TruncatedSeries f_derivative_oracle(int N, int order, const XLPoly& lam) {
    if (N < 0) throw OutOfDomain("negative derivative order");
    TruncatedSeries s = f_series(order, lam);
    for (int i = 0; i < N; ++i) s = s.derivative();
    return s;
}

TruncatedSeries f_derivative_oracle(int N, int order) {
    return f_derivative_oracle(N, order, XLPoly::variable_lambda());
}

TruncatedSeries ode_rhs(const CoeffTable& table, int order, const XLPoly& lam) {
    int N = table.N();
    if (order < N) {
        throw OrderExhausted("order " + std::to_string(order) + " below table argument " +
                             std::to_string(N));
    }
    TruncatedSeries F = f_series(order, lam);
    TruncatedSeries log_term = log1p_scaled(order, lam);
    TruncatedSeries a_series = TruncatedSeries::constant(lam * Rational(2), order) + log_term;
    TruncatedSeries b_series = TruncatedSeries::constant(lam, order) + log_term;

    std::vector<TruncatedSeries> a_inv(N + 1, TruncatedSeries::constant(XLPoly(1), order));
    a_inv[1] = a_series.reciprocal();
    for (int i = 2; i <= N; ++i) a_inv[i] = a_inv[i - 1] * a_inv[1];
    TruncatedSeries b_inv = b_series.reciprocal();

    // Grouped as sum_j B^{-j} (sum_i a_{i,j} A^{-i}) to keep the number of
    // series products linear in N.
    TruncatedSeries total(order);
    for (int j = N; j >= 0; --j) {
        TruncatedSeries inner(order);
        for (int i = (j == 0 ? 1 : 0); i + j <= N; ++i) {
            const XLPoly& a = table.at(i, j);
            if (a.is_zero()) continue;
            inner = inner + a_inv[i].scaled(a);
        }
        if (j == N) {
            total = inner;
        } else {
            total = total * b_inv + inner;
        }
    }

    TruncatedSeries one_plus_lam_t = TruncatedSeries::constant(XLPoly(1), order);
    if (order >= 1) one_plus_lam_t.set_coeff(1, lam);
    TruncatedSeries rhs = (one_plus_lam_t.pow(-N) * total * F).scaled(lam.pow(N));
    return rhs.truncated(order - N);
}

TruncatedSeries ode_rhs(const CoeffTable& table, int order) {
    return ode_rhs(table, order, XLPoly::variable_lambda());
}

TruncatedSeries ode_residual(int N, int order, CoeffSource source, const XLPoly& lam) {
    CoeffTable table =
        source == CoeffSource::Recurrence ? coeffs_by_recurrence(N) : coeffs_by_closed_form(N);
    return f_derivative_oracle(N, order, lam) - ode_rhs(table, order, lam);
}

TruncatedSeries ode_residual(int N, int order, CoeffSource source) {
    return ode_residual(N, order, source, XLPoly::variable_lambda());
}

}  // namespace changhee
