#ifndef CHANGHEE_IDENTITY_HARNESS_HPP
#define CHANGHEE_IDENTITY_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "changhee/combinatorics.hpp"
#include "changhee/ode_coeffs.hpp"
#include "changhee/special_polys.hpp"

namespace changhee {

/// One parameter point of one identity. A failing point always carries
/// the full lhs / rhs / diff payload, never just a flag.
struct PointResult {
    nlohmann::ordered_json params;
    bool pass = false;
    nlohmann::ordered_json lhs;   // null on PASS
    nlohmann::ordered_json rhs;   // null on PASS
    nlohmann::ordered_json diff;  // null on PASS
};

PointResult pass_point(nlohmann::ordered_json params);
PointResult fail_point(nlohmann::ordered_json params, nlohmann::ordered_json lhs,
                       nlohmann::ordered_json rhs, nlohmann::ordered_json diff);

/// All parameter points of one identity.
struct IdentityReport {
    std::string id;
    std::vector<PointResult> points;

    int pass_count() const;
    int fail_count() const;
    bool all_pass() const { return fail_count() == 0; }
    nlohmann::ordered_json to_json() const;
};

/// Aggregate over identities; serialization is fully deterministic, so
/// identical inputs produce byte-identical JSON.
struct VerificationReport {
    std::string suite;
    std::vector<IdentityReport> identities;

    int pass_count() const;
    int fail_count() const;
    bool all_pass() const { return fail_count() == 0; }
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// lambda specialisation for a verification run; empty means symbolic.
using LambdaSetting = std::optional<Rational>;

std::string lambda_setting_name(const LambdaSetting& l);

// --- single identities -----------------------------------------------

/// E_n = sum_m Ch_m S2(n,m) against the direct Euler expansion, n <= nmax.
IdentityReport check_euler_from_changhee(int nmax);

/// Ch_n = sum_m S1(n,m) E_m against the direct Changhee expansion.
IdentityReport check_changhee_from_euler(int nmax);

/// m!/n! [t^m] log(1+t)^n = S1(m,n) for n <= nmax, m <= mmax.
IdentityReport check_stirling_gf(int nmax, int mmax);

/// sum_m S1(n,m) S2(m,k) = delta_{n,k} on the given triangle.
IdentityReport check_stirling_orthogonality(int nmax);
IdentityReport check_stirling_orthogonality(int nmax, const StirlingTable& s1,
                                            const StirlingTable& s2);

/// S_{1,i-1}(r-1-i) + S_{1,i-2}(r-i) = S_{1,i-1}(r-i) for
/// 2 <= r <= rmax, 1 <= i <= r-1.
IdentityReport check_power_sum_recursion(int rmax);

/// H_{N,N} = 1/N! for N <= nmax.
IdentityReport check_harmonic_diagonal(int nmax);

/// lambda-Changhee entries at lambda = 0 equal the Changhee entries.
IdentityReport check_degeneration(int nmax);

// --- suites ------------------------------------------------------------

/// The background identities above in one report.
VerificationReport background_checks(int conv_nmax = 15);

/// Recurrence table equals closed-form table entry-by-entry, 1 <= N <= nmax.
VerificationReport thm2_check(int nmax = 12);

std::vector<LambdaSetting> default_thm3_lambdas();

/// ODE residual is the zero series for 1 <= N <= nmax at the given order,
/// both table sources, each lambda setting.
VerificationReport thm3_check(int nmax = 6, int order = 12,
                              std::vector<LambdaSetting> lambdas = default_thm3_lambdas());

/// Right-hand side of the explicit identity expressing Ch_{k+N,lambda}(x)
/// through the coefficient table, evaluated literally as a finite nested
/// sum. The caller supplies the lambda-Changhee entries 0..k, the
/// argument-N table, and a signed first-kind Stirling triangle covering
/// rows 0..k (injectable so the harness can prove its own sensitivity).
XLPoly thm4_rhs(int N, int k, const PolySequence& polys, const CoeffTable& table,
                const StirlingTable& s1);

/// Adjudicates the explicit identity on 1 <= N <= nmax, 0 <= k <= kmax:
/// the generating-function entry Ch_{k+N,lambda} is the ground truth and
/// the nested sum is the system under test. order defaults to
/// nmax + kmax + 2. A numeric lambda substitutes both sides first.
VerificationReport thm4_check(int nmax = 4, int kmax = 4, int order = -1,
                              const LambdaSetting& lambda = std::nullopt);
VerificationReport thm4_check(int nmax, int kmax, int order, const LambdaSetting& lambda,
                              const StirlingTable& s1);

// --- CLI-facing dispatch ------------------------------------------------

struct VerifyOptions {
    std::optional<int> nmax;
    std::optional<int> kmax;
    std::optional<int> order;
    /// Engaged: overrides the suite's default lambda grid with one setting.
    std::optional<LambdaSetting> lambda;
};

/// suite is one of all | background | thm2 | thm3 | thm4.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace changhee

#endif
