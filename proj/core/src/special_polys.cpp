#include "changhee/special_polys.hpp"

#include "changhee/combinatorics.hpp"

namespace changhee {

std::string family_name(PolyFamily f) {
    switch (f) {
        case PolyFamily::Euler: return "euler";
        case PolyFamily::Changhee: return "changhee";
        case PolyFamily::LambdaChanghee: return "lambda-changhee";
    }
    throw OutOfDomain("unknown polynomial family");
}

const XLPoly& PolySequence::entry(int n) const {
    if (n < 0 || n > nmax()) {
        throw OutOfDomain(family_name(family) + " entry " + std::to_string(n) +
                          " outside computed range 0.." + std::to_string(nmax()));
    }
    return entries[n];
}

namespace {

std::vector<XLPoly> entries_from_series(const TruncatedSeries& s, int nmax) {
    std::vector<XLPoly> entries;
    entries.reserve(nmax + 1);
    for (int n = 0; n <= nmax; ++n) entries.push_back(s.coeff(n) * Rational(factorial(n)));
    return entries;
}

}  // namespace

PolySequence euler_polys(int nmax) {
    int T = nmax;
    TruncatedSeries denom = TruncatedSeries::constant(XLPoly(1), T) + exp_t(T);
    TruncatedSeries gf =
        TruncatedSeries::constant(XLPoly(2), T) * denom.reciprocal() * exp_xt(T);
    return {PolyFamily::Euler, entries_from_series(gf, nmax)};
}

PolySequence changhee_polys(int nmax) {
    int T = nmax;
    TruncatedSeries two_plus_t = TruncatedSeries::constant(XLPoly(2), T);
    if (T >= 1) two_plus_t.set_coeff(1, XLPoly(1));
    TruncatedSeries t_series(T);
    if (T >= 1) t_series.set_coeff(1, XLPoly(1));
    TruncatedSeries gf = TruncatedSeries::constant(XLPoly(2), T) * two_plus_t.reciprocal() *
                         binom_power(t_series, T);
    return {PolyFamily::Changhee, entries_from_series(gf, nmax)};
}

TruncatedSeries lambda_changhee_gf(int order, const XLPoly& lam) {
    XLPoly lam_inv = lam.invert_monomial();
    TruncatedSeries log_term = log1p_scaled(order, lam);
    TruncatedSeries denom = TruncatedSeries::constant(lam * Rational(2), order) + log_term;
    TruncatedSeries front = denom.reciprocal().scaled(lam * Rational(2));
    TruncatedSeries power = binom_power(log_term.scaled(lam_inv), order);
    return front * power;
}

TruncatedSeries lambda_changhee_gf(int order) {
    return lambda_changhee_gf(order, XLPoly::variable_lambda());
}

PolySequence lambda_changhee_polys(int nmax, int order) {
    int T = order < 0 ? nmax : order;
    if (T < nmax) throw OutOfDomain("series order below requested entry count");
    TruncatedSeries gf = lambda_changhee_gf(T);
    PolySequence seq{PolyFamily::LambdaChanghee, entries_from_series(gf, nmax)};
    for (int n = 0; n <= nmax; ++n) {
        if (seq.entries[n].lambda_degree_min() < 0) {
            throw PoleNotCancelled("entry " + std::to_string(n) +
                                   " kept a negative lambda power: " + seq.entries[n].str());
        }
    }
    return seq;
}

std::vector<XLPoly> lambda_changhee_numbers(int nmax) {
    PolySequence polys = lambda_changhee_polys(nmax);
    std::vector<XLPoly> numbers;
    numbers.reserve(nmax + 1);
    for (const auto& p : polys.entries) numbers.push_back(p.substitute(Rational(0), std::nullopt));
    return numbers;
}

PolySequence convert_euler_from_changhee(int nmax) {
    PolySequence ch = changhee_polys(nmax);
    std::vector<XLPoly> entries(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        XLPoly acc;
        for (int m = 0; m <= n; ++m) {
            acc += ch.entries[m] * Rational(stirling(StirlingKind::Second, n, m));
        }
        entries[n] = std::move(acc);
    }
    return {PolyFamily::Euler, std::move(entries)};
}

PolySequence convert_changhee_from_euler(int nmax) {
    PolySequence eu = euler_polys(nmax);
    std::vector<XLPoly> entries(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        XLPoly acc;
        for (int m = 0; m <= n; ++m) {
            acc += eu.entries[m] * Rational(stirling(StirlingKind::FirstSigned, n, m));
        }
        entries[n] = std::move(acc);
    }
    return {PolyFamily::Changhee, std::move(entries)};
}

}  // namespace changhee
