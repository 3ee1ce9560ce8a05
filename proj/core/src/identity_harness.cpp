#include "changhee/identity_harness.hpp"

#include <sstream>

namespace changhee {

PointResult pass_point(nlohmann::ordered_json params) {
    PointResult p;
    p.params = std::move(params);
    p.pass = true;
    return p;
}

PointResult fail_point(nlohmann::ordered_json params, nlohmann::ordered_json lhs,
                       nlohmann::ordered_json rhs, nlohmann::ordered_json diff) {
    PointResult p;
    p.params = std::move(params);
    p.pass = false;
    p.lhs = std::move(lhs);
    p.rhs = std::move(rhs);
    p.diff = std::move(diff);
    return p;
}

namespace {

/// Exact comparison of two ring elements, recorded as one point.
PointResult compare_polys(nlohmann::ordered_json params, const XLPoly& lhs, const XLPoly& rhs) {
    if (lhs == rhs) return pass_point(std::move(params));
    return fail_point(std::move(params), lhs.to_json(), rhs.to_json(), (lhs - rhs).to_json());
}

PointResult compare_rationals(nlohmann::ordered_json params, const Rational& lhs,
                              const Rational& rhs) {
    return compare_polys(std::move(params), XLPoly(lhs), XLPoly(rhs));
}

}  // namespace

int IdentityReport::pass_count() const {
    int n = 0;
    for (const auto& p : points) n += p.pass ? 1 : 0;
    return n;
}

int IdentityReport::fail_count() const { return static_cast<int>(points.size()) - pass_count(); }

nlohmann::ordered_json IdentityReport::to_json() const {
    nlohmann::ordered_json j;
    j["id"] = id;
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : points) {
        nlohmann::ordered_json pj;
        pj["params"] = p.params;
        pj["status"] = p.pass ? "PASS" : "FAIL";
        if (!p.pass) {
            pj["lhs"] = p.lhs;
            pj["rhs"] = p.rhs;
            pj["diff"] = p.diff;
        }
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    j["summary"] = nlohmann::ordered_json{{"pass", pass_count()}, {"fail", fail_count()}};
    return j;
}

int VerificationReport::pass_count() const {
    int n = 0;
    for (const auto& r : identities) n += r.pass_count();
    return n;
}

int VerificationReport::fail_count() const {
    int n = 0;
    for (const auto& r : identities) n += r.fail_count();
    return n;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    auto ids = nlohmann::ordered_json::array();
    for (const auto& r : identities) ids.push_back(r.to_json());
    j["identities"] = std::move(ids);
    j["summary"] = nlohmann::ordered_json{
        {"pass", pass_count()}, {"fail", fail_count()}, {"all_pass", all_pass()}};
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "suite: " << suite << "\n";
    for (const auto& r : identities) {
        out << (r.all_pass() ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.pass_count() << "/"
            << r.points.size() << " points\n";
        for (const auto& p : r.points) {
            if (p.pass) continue;
            out << "  FAIL at " << p.params.dump() << "\n";
            out << "    lhs:  " << p.lhs.dump() << "\n";
            out << "    rhs:  " << p.rhs.dump() << "\n";
            out << "    diff: " << p.diff.dump() << "\n";
        }
    }
    out << "summary: " << pass_count() << " pass, " << fail_count() << " fail\n";
    return out.str();
}

std::string lambda_setting_name(const LambdaSetting& l) {
    return l ? l->str() : "symbolic";
}

IdentityReport check_euler_from_changhee(int nmax) {
    IdentityReport r{"euler_from_changhee", {}};
    PolySequence direct = euler_polys(nmax);
    PolySequence converted = convert_euler_from_changhee(nmax);
    for (int n = 0; n <= nmax; ++n) {
        r.points.push_back(compare_polys({{"n", n}}, converted.entries[n], direct.entries[n]));
    }
    return r;
}

IdentityReport check_changhee_from_euler(int nmax) {
    IdentityReport r{"changhee_from_euler", {}};
    PolySequence direct = changhee_polys(nmax);
    PolySequence converted = convert_changhee_from_euler(nmax);
    for (int n = 0; n <= nmax; ++n) {
        r.points.push_back(compare_polys({{"n", n}}, converted.entries[n], direct.entries[n]));
    }
    return r;
}

IdentityReport check_stirling_gf(int nmax, int mmax) {
    IdentityReport r{"stirling1_generating_function", {}};
    TruncatedSeries log1 = log1p_scaled(mmax, XLPoly(1));
    for (int n = 0; n <= nmax; ++n) {
        TruncatedSeries p = log1.pow(n);
        Rational nfact_inv = Rational(Integer(1), factorial(n));
        for (int m = 0; m <= mmax; ++m) {
            Rational lhs = p.coeff(m).constant_value() * Rational(factorial(m)) * nfact_inv;
            Rational rhs(stirling(StirlingKind::FirstSigned, m, n));
            r.points.push_back(compare_rationals({{"n", n}, {"m", m}}, lhs, rhs));
        }
    }
    return r;
}

IdentityReport check_stirling_orthogonality(int nmax, const StirlingTable& s1,
                                            const StirlingTable& s2) {
    IdentityReport r{"stirling_orthogonality", {}};
    for (int n = 0; n <= nmax; ++n) {
        for (int k = 0; k <= n; ++k) {
            Integer acc(0);
            for (int m = k; m <= n; ++m) acc += s1.at(n, m) * s2.at(m, k);
            Rational lhs(acc);
            Rational rhs(n == k ? 1 : 0);
            r.points.push_back(compare_rationals({{"n", n}, {"k", k}}, lhs, rhs));
        }
    }
    return r;
}

IdentityReport check_stirling_orthogonality(int nmax) {
    StirlingTable s1(StirlingKind::FirstSigned, nmax);
    StirlingTable s2(StirlingKind::Second, nmax);
    return check_stirling_orthogonality(nmax, s1, s2);
}

IdentityReport check_power_sum_recursion(int rmax) {
    IdentityReport r{"power_sum_recursion", {}};
    for (int rr = 2; rr <= rmax; ++rr) {
        for (int i = 1; i <= rr - 1; ++i) {
            Rational lhs(power_sum(1, i - 1, rr - 1 - i) + power_sum(1, i - 2, rr - i));
            Rational rhs(power_sum(1, i - 1, rr - i));
            r.points.push_back(compare_rationals({{"r", rr}, {"i", i}}, lhs, rhs));
        }
    }
    return r;
}

IdentityReport check_harmonic_diagonal(int nmax) {
    IdentityReport r{"harmonic_diagonal_factorial", {}};
    for (int n = 0; n <= nmax; ++n) {
        r.points.push_back(
            compare_rationals({{"N", n}}, harmonic(n, n), Rational(Integer(1), factorial(n))));
    }
    return r;
}

IdentityReport check_degeneration(int nmax) {
    IdentityReport r{"lambda_to_zero_degeneration", {}};
    PolySequence lam = lambda_changhee_polys(nmax);
    PolySequence ch = changhee_polys(nmax);
    for (int n = 0; n <= nmax; ++n) {
        XLPoly at_zero = lam.entries[n].substitute(std::nullopt, Rational(0));
        r.points.push_back(compare_polys({{"n", n}}, at_zero, ch.entries[n]));
    }
    return r;
}

VerificationReport background_checks(int conv_nmax) {
    VerificationReport rep{"background", {}};
    rep.identities.push_back(check_euler_from_changhee(conv_nmax));
    rep.identities.push_back(check_changhee_from_euler(conv_nmax));
    rep.identities.push_back(check_stirling_gf(8, 12));
    rep.identities.push_back(check_stirling_orthogonality(12));
    rep.identities.push_back(check_power_sum_recursion(30));
    rep.identities.push_back(check_harmonic_diagonal(20));
    rep.identities.push_back(check_degeneration(20));
    return rep;
}

VerificationReport thm2_check(int nmax) {
    VerificationReport rep{"thm2", {}};
    IdentityReport r{"coeff_dual_construction", {}};
    CoeffTable rec = coeff_base();
    for (int N = 1; N <= nmax; ++N) {
        if (N > 1) rec = coeff_step(rec);
        CoeffTable closed = coeffs_by_closed_form(N);
        for (int s = 1; s <= N; ++s) {
            for (int i = 0; i <= s; ++i) {
                r.points.push_back(compare_polys({{"N", N}, {"i", i}, {"j", s - i}},
                                                 rec.at(i, s - i), closed.at(i, s - i)));
            }
        }
    }
    rep.identities.push_back(std::move(r));
    return rep;
}

std::vector<LambdaSetting> default_thm3_lambdas() {
    return {std::nullopt, Rational(1, 2), Rational(1), Rational(3)};
}

VerificationReport thm3_check(int nmax, int order, std::vector<LambdaSetting> lambdas) {
    VerificationReport rep{"thm3", {}};
    IdentityReport r{"ode_residual", {}};
    for (int N = 1; N <= nmax; ++N) {
        for (const auto& lset : lambdas) {
            XLPoly lam = lset ? XLPoly(*lset) : XLPoly::variable_lambda();
            for (CoeffSource src : {CoeffSource::Recurrence, CoeffSource::ClosedForm}) {
                nlohmann::ordered_json params{{"N", N},
                                              {"lambda", lambda_setting_name(lset)},
                                              {"source", coeff_source_name(src)}};
                TruncatedSeries lhs = f_derivative_oracle(N, order, lam);
                CoeffTable table = src == CoeffSource::Recurrence ? coeffs_by_recurrence(N)
                                                                  : coeffs_by_closed_form(N);
                TruncatedSeries rhs = ode_rhs(table, order, lam);
                TruncatedSeries diff = lhs - rhs;
                if (diff.is_zero()) {
                    r.points.push_back(pass_point(std::move(params)));
                } else {
                    r.points.push_back(fail_point(std::move(params), lhs.to_json(), rhs.to_json(),
                                                  diff.to_json()));
                }
            }
        }
    }
    rep.identities.push_back(std::move(r));
    return rep;
}

XLPoly thm4_rhs(int N, int k, const PolySequence& polys, const CoeffTable& table,
                const StirlingTable& s1) {
    if (N < 1 || k < 0) throw OutOfDomain("explicit identity needs N >= 1, k >= 0");
    if (polys.nmax() < k) throw OutOfDomain("polynomial sequence does not cover entries 0..k");
    if (table.N() != N) throw OutOfDomain("coefficient table argument does not match N");
    XLPoly total;
    for (int r = 1; r <= N; ++r) {
        for (int i = 0; i <= r; ++i) {
            const XLPoly& a = table.at(i, r - i);
            if (a.is_zero()) continue;
            // lambda^{N-r} 2^{-i}; the lambda exponent is nonnegative here.
            XLPoly prefactor = XLPoly::monomial(0, N - r, Rational(1, 2).pow(i));
            XLPoly middle;
            for (int m = 0; m <= k; ++m) {
                Integer im = falling_factorial_int(i + m - 1, m);
                if (sgn(im) == 0) continue;
                for (int n = 0; m + n <= k; ++n) {
                    Integer rn = falling_factorial_int(r + n - i - 1, n);
                    if (sgn(rn) == 0) continue;
                    int a_idx = k - m - n;
                    Rational outer = Rational(multinomial(k, {m, n, a_idx})) *
                                     Rational(-1, 2).pow(m) * Rational(n % 2 == 0 ? 1 : -1) *
                                     Rational(im) * Rational(rn);
                    XLPoly inner;
                    for (int l = 0; l <= a_idx; ++l) {
                        Integer nl = falling_factorial_int(N + l - 1, l);
                        if (sgn(nl) == 0) continue;
                        for (int e = 0; l + e <= a_idx; ++e) {
                            Integer s1em = s1.at(e + m, m);
                            if (sgn(s1em) == 0) continue;
                            for (int f = 0; l + e + f <= a_idx; ++f) {
                                Integer s1fn = s1.at(f + n, n);
                                if (sgn(s1fn) == 0) continue;
                                int s = a_idx - l - e - f;
                                Rational c =
                                    Rational(multinomial(a_idx, {l, e, f, s})) /
                                    Rational(binomial(e + m, m) * binomial(f + n, n));
                                c *= Rational(nl) * Rational(s1em) * Rational(s1fn);
                                if (l % 2 == 1) c = -c;
                                // lambda^{a-s} with a >= s always.
                                inner += polys.entries[s] * XLPoly::monomial(0, a_idx - s, c);
                            }
                        }
                    }
                    middle += inner * outer;
                }
            }
            total += a * prefactor * middle;
        }
    }
    return total;
}

VerificationReport thm4_check(int nmax, int kmax, int order, const LambdaSetting& lambda,
                              const StirlingTable& s1) {
    VerificationReport rep{"thm4", {}};
    IdentityReport r{"explicit_identity", {}};
    int T = order < 0 ? nmax + kmax + 2 : order;
    PolySequence polys = lambda_changhee_polys(nmax + kmax, T);
    for (int N = 1; N <= nmax; ++N) {
        CoeffTable table = coeffs_by_closed_form(N);
        for (int k = 0; k <= kmax; ++k) {
            nlohmann::ordered_json params{
                {"N", N}, {"k", k}, {"lambda", lambda_setting_name(lambda)}};
            XLPoly lhs = polys.entries[k + N];
            XLPoly rhs = thm4_rhs(N, k, polys, table, s1);
            if (lambda) {
                lhs = lhs.substitute(std::nullopt, *lambda);
                rhs = rhs.substitute(std::nullopt, *lambda);
            }
            r.points.push_back(compare_polys(std::move(params), lhs, rhs));
        }
    }
    rep.identities.push_back(std::move(r));
    return rep;
}

VerificationReport thm4_check(int nmax, int kmax, int order, const LambdaSetting& lambda) {
    StirlingTable s1(StirlingKind::FirstSigned, kmax);
    return thm4_check(nmax, kmax, order, lambda, s1);
}

VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts) {
    if (suite == "background") {
        return background_checks(opts.nmax.value_or(15));
    }
    if (suite == "thm2") {
        return thm2_check(opts.nmax.value_or(12));
    }
    if (suite == "thm3") {
        std::vector<LambdaSetting> lambdas =
            opts.lambda ? std::vector<LambdaSetting>{*opts.lambda} : default_thm3_lambdas();
        return thm3_check(opts.nmax.value_or(6), opts.order.value_or(12), std::move(lambdas));
    }
    if (suite == "thm4") {
        return thm4_check(opts.nmax.value_or(4), opts.kmax.value_or(4), opts.order.value_or(-1),
                          opts.lambda.value_or(LambdaSetting{}));
    }
    if (suite == "all") {
        VerificationReport rep{"all", {}};
        for (const char* s : {"background", "thm2", "thm3", "thm4"}) {
            VerificationReport part = run_suite(s, opts);
            for (auto& id : part.identities) rep.identities.push_back(std::move(id));
        }
        return rep;
    }
    throw OutOfDomain("unknown suite '" + suite + "' (expected all|background|thm2|thm3|thm4)");
}

}  // namespace changhee
