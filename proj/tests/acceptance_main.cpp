// Acceptance suite: one line per criterion.
//
// Criteria 2 and 7 assert previously published oriented-count values that
// exhaustive enumeration refutes (see the verify report and README). They
// are asserted exactly as published and reported as failing; because the
// failure is established and documented, it is tracked strictly as
// expected (XFAIL): the process exits nonzero on any unexpected status,
// including those two criteria unexpectedly passing or failing in a
// different way than the analysis predicts.
#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <vector>

#include "galecount/asymptotics.hpp"
#include "galecount/automata.hpp"
#include "galecount/halfplane.hpp"
#include "galecount/oracle.hpp"
#include "galecount/polytopes.hpp"
#include "galecount/report.hpp"
#include "galecount/wheels.hpp"

using namespace galecount;

namespace {

int g_unexpected = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& note = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what;
    if (!note.empty()) std::cout << "  (" << note << ")";
    std::cout << std::endl;
    if (!pass) ++g_unexpected;
}

// asserted as stated, known and documented not to hold; `as_analyzed` must
// capture the exact predicted failure shape
void report_expected_fail(int criterion, bool pass, bool as_analyzed, const std::string& what,
                          const std::string& note) {
    const char* tag = pass ? "[XPASS]" : (as_analyzed ? "[XFAIL]" : "[FAIL] ");
    std::cout << tag << " criterion " << criterion << ": " << what;
    if (!note.empty()) std::cout << "  (" << note << ")";
    std::cout << std::endl;
    if (pass || !as_analyzed) ++g_unexpected;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    // 1: P(x) coefficients x^5..x^11, zero tolerance, under 1 s
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto p = polytope_series(11);
        const long expect[] = {1, 7, 31, 116, 379, 1133, 3210};
        bool ok = true;
        for (int i = 0; i < 7; ++i) ok &= p[5 + i] == expect[i];
        const double dt = seconds_since(t0);
        report(1, ok && dt < 1.0, "P(x) x^5..x^11 = 1,7,31,116,379,1133,3210",
               "elapsed " + std::to_string(dt) + " s");
    }

    // 2: P+(x) coefficients as published. The published x^8..x^11 values
    // (170, 617, 1979, 5859) are refuted by exhaustive enumeration, which
    // gives 169, 615, 1973, 5849; asserted as published, expected red.
    {
        const auto p = oriented_polytope_series(11);
        const long published[] = {1, 7, 38, 170, 617, 1979, 5859};
        const long verified[] = {1, 7, 38, 169, 615, 1973, 5849};
        bool ok = true, matches_verified = true;
        std::ostringstream got;
        for (int i = 0; i < 7; ++i) {
            ok &= p[5 + i] == published[i];
            matches_verified &= p[5 + i] == verified[i];
            got << (i ? "," : "") << p[5 + i].get_num().get_str();
        }
        report_expected_fail(2, ok, matches_verified,
                             "P+(x) x^5..x^11 = 1,7,38,170,617,1979,5859 as published",
                             "computed " + got.str() +
                                 "; enumeration confirms the computed values, see verify");
    }

    // 3: identity 2P - P+ = P- to order 200; nonnegative integers to 500;
    // under 30 s
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto p = extraction_delta_series(500, false).geometric_prefix();
        const auto plus = extraction_delta_series(500, true).geometric_prefix();
        bool ok = p.all_integer() && p.all_nonnegative() && plus.all_integer() && plus.all_nonnegative();
        TruncatedSeries minus = p.scaled(2) - plus;
        ok &= minus.all_integer() && minus.all_nonnegative();
        const auto id200 = achiral_series(200);
        for (int n = 0; n <= 200 && ok; ++n) ok &= id200[n] == minus[n];
        const double dt = seconds_since(t0);
        report(3, ok && dt < 30.0, "2P - P+ = P- to order 200; nonnegative integers to order 500",
               "elapsed " + std::to_string(dt) + " s");
    }

    // 4: oracle equivalence, sizes 5..10 for counts, n<=8 for fixed pairs;
    // under 5 min
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto p = polytope_series(10);
        const auto plus = oriented_polytope_series(10);
        const auto minus = achiral_series(10);
        bool ok = true;
        for (int n = 5; n <= 10; ++n) {
            const auto bf = oracle::brute_force_counts(n, 4);
            ok &= p[n] == Rational(bf.c) && plus[n] == Rational(bf.c_plus) && minus[n] == Rational(bf.c_minus);
        }
        const auto bundle = make_wheel_bundle(8);
        for (int n = 1; n <= 8; ++n) {
            const auto pairs = oracle::fixed_pair_counts(n);
            for (int k = 1; k <= n; ++k) {
                long rooted = 0, rot = 0, refl = 0;
                if (auto it = pairs.find(k); it != pairs.end()) {
                    rooted = it->second.rooted;
                    rot = it->second.rotation_pairs;
                    refl = it->second.reflection_pairs;
                }
                ok &= bundle.rooted.at(n, k) == rooted;
                ok &= bundle.rotation.at(n, k) == rot;
                ok &= bundle.reflection.at(n, k) == refl;
            }
        }
        const double dt = seconds_since(t0);
        report(4, ok && dt < 300.0, "oracle equivalence (counts 5..10, fixed pairs n<=8)",
               "elapsed " + std::to_string(dt) + " s");
    }

    // 5: automaton vs closed form, order 30, zero tolerance
    {
        const bool ok = rooted_wheel_series_automaton(30) == rooted_wheel_series_closed(30) &&
                        transfer_L(1, 0, 30) == transfer_L10_closed(30);
        report(5, ok, "transfer-matrix R(x,u) and L10 match their closed forms to order 30");
    }

    // 6: Burnside integral route equals closed forms to order 50
    {
        const bool ok = wheel_series_integral(50) == wheel_series(50) &&
                        oriented_wheel_series_integral(50) == oriented_wheel_series(50);
        report(6, ok, "Burnside integral route for W and W+ equals the closed forms to order 50");
    }

    // 7: configuration sums vs published closed forms to order 50, plus
    // the dropped-configuration regression. The oriented published form is
    // refuted by enumeration (it misses one alternating-hexagon factor);
    // asserting it as published, expected red on exactly that clause.
    {
        const bool unoriented_ok = wheels_not_p3_series(false, 50) == not_p3_rational(50);
        const bool oriented_published = wheels_not_p3_series(true, 50) == oriented_not_p3_rational_legacy(50);
        const bool oriented_corrected = wheels_not_p3_series(true, 50) == oriented_not_p3_rational(50);
        const bool drop_regression =
            wheels_not_p3_series_dropping(7, false, 50) != wheels_not_p3_series(false, 50);
        const bool as_analyzed = unoriented_ok && !oriented_published && oriented_corrected && drop_regression;
        report_expected_fail(
            7, unoriented_ok && oriented_published && drop_regression, as_analyzed,
            "configuration sums equal the published closed forms; drop regression",
            std::string("unoriented ") + (unoriented_ok ? "ok" : "FAIL") + ", oriented-published " +
                (oriented_published ? "ok" : "FAIL") + ", oriented-corrected " +
                (oriented_corrected ? "ok" : "FAIL") + ", regression " +
                (drop_regression ? "ok" : "FAIL"));
    }

    // 8: asymptotic constants and achiral fractions
    {
        const auto& k = asymptotic_constants();
        bool ok = std::abs(k.gamma - 2.839) <= 0.001;
        ok &= std::abs(k.lambda - 1.6850) <= 0.0005;
        ok &= std::abs(k.C - 12.1278) <= 0.001;
        ok &= std::abs(k.C_prime - 0.0346) <= 0.001;
        const auto rows = coefficient_table(23);
        const auto& d10 = rows[8];
        const auto& d20 = rows[18];
        ok &= d10.d == 10 && 10 * d10.c_minus < d10.c;
        ok &= d20.d == 20 && 1000 * d20.c_minus < d20.c;
        report(8, ok, "gamma, lambda, C, C' within windows; c-/c < 10% at d=10, < 0.1% at d=20");
    }

    // 9: convergence of c(d+3,d) d / gamma^d to gamma^4/(4(gamma-1)),
    // monotone for d >= 50, within the measured 1.3% at d = 200
    {
        const auto rows = convergence_report(200);
        bool ok = true;
        double prev = 1e9, at200 = 1.0;
        for (const auto& r : rows) {
            if (r.kind != CountKind::Combinatorial || r.d < 50) continue;
            const double e = std::abs(r.rel_error);
            ok &= e <= prev + 1e-12;
            prev = e;
            if (r.d == 200) at200 = e;
        }
        ok &= at200 < 0.013;
        report(9, ok, "c d/gamma^d -> gamma^4/(4(gamma-1)) monotone for d >= 50",
               "|rel err| at d=200: " + std::to_string(at200) + " (measured bound 0.013)");
    }

    // 10: performance: order-5000 table under 60 s; sub-quadratic ladder
    {
        const auto t0 = std::chrono::steady_clock::now();
        ExtractionStats stats;
        const auto rows = coefficient_table(4997, &stats);
        const double dt = seconds_since(t0);
        bool ok = dt < 60.0 && rows.size() == 4996;
        std::ostringstream bench_out;
        ok &= run_bench({625, 1250, 2500, 5000}, bench_out);
        report(10, ok, "order-5000 table in under 60 s; doubling ladder sub-quadratic",
               "table elapsed " + std::to_string(dt) + " s, ops " + std::to_string(stats.coefficient_ops));
    }

    // 11: the achiral discrepancy report must state the finding
    {
        std::ostringstream os;
        const int verify_failures = run_verify(6, 30, 2, os);
        const auto s = os.str();
        const bool stated = s.find("identity route is the count of record") != std::string::npos &&
                            s.find("typo") != std::string::npos;
        report(11, verify_failures == 0 && stated,
               "verify documents the achiral closed-form finding, identity route of record");
    }

    if (g_unexpected) {
        std::cout << g_unexpected << " unexpected criterion status(es).\n";
    } else {
        std::cout << "all criteria behave as analyzed: 9 pass; criteria 2 and 7 fail exactly as\n"
                  << "documented (they assert previously published oriented values that exhaustive\n"
                  << "enumeration refutes; see README and the verify report).\n";
    }
    return g_unexpected == 0 ? 0 : 1;
}
