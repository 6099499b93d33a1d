#include "galecount/report.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "galecount/asymptotics.hpp"
#include "galecount/automata.hpp"
#include "galecount/halfplane.hpp"
#include "galecount/oracle.hpp"
#include "galecount/wheels.hpp"

namespace galecount {

std::string format_table(const std::vector<CountRow>& rows, TableFormat format) {
    std::ostringstream os;
    switch (format) {
        case TableFormat::Csv: {
            os << "d,vertices,c,c_plus,c_minus\n";
            for (const auto& r : rows)
                os << r.d << ',' << r.vertices << ',' << r.c.get_str() << ',' << r.c_plus.get_str()
                   << ',' << r.c_minus.get_str() << '\n';
            break;
        }
        case TableFormat::Json: {
            // counts as decimal strings: c(d+3,d) outgrows 64-bit integers
            // near d = 140
            os << "{\"rows\":[";
            for (size_t i = 0; i < rows.size(); ++i) {
                const auto& r = rows[i];
                if (i) os << ',';
                os << "{\"d\":" << r.d << ",\"vertices\":" << r.vertices << ",\"c\":\""
                   << r.c.get_str() << "\",\"c_plus\":\"" << r.c_plus.get_str() << "\",\"c_minus\":\""
                   << r.c_minus.get_str() << "\"}";
            }
            os << "]}\n";
            break;
        }
        case TableFormat::Text: {
            size_t wc = 1, wp = 6, wm = 7;
            for (const auto& r : rows) {
                wc = std::max(wc, r.c.get_str().size());
                wp = std::max(wp, r.c_plus.get_str().size());
                wm = std::max(wm, r.c_minus.get_str().size());
            }
            os << std::setw(5) << "d" << std::setw(9) << "vertices" << std::setw(static_cast<int>(wc) + 2)
               << "c" << std::setw(static_cast<int>(wp) + 2) << "c_plus"
               << std::setw(static_cast<int>(wm) + 2) << "c_minus" << '\n';
            for (const auto& r : rows)
                os << std::setw(5) << r.d << std::setw(9) << r.vertices
                   << std::setw(static_cast<int>(wc) + 2) << r.c.get_str()
                   << std::setw(static_cast<int>(wp) + 2) << r.c_plus.get_str()
                   << std::setw(static_cast<int>(wm) + 2) << r.c_minus.get_str() << '\n';
            break;
        }
    }
    return os.str();
}

namespace {

struct Checker {
    std::ostream& out;
    int failures = 0;

    void check(bool ok, const std::string& name, const std::string& detail = "") {
        out << (ok ? "[ok]   " : "[FAIL] ") << name;
        if (!ok && !detail.empty()) out << " -- " << detail;
        out << '\n';
        if (!ok) ++failures;
    }

    void note(const std::string& text) { out << "[note] " << text << '\n'; }
};

}  // namespace

int run_verify(int max_size, int order, int jobs, std::ostream& out) {
    Checker c{out};

    out << "== automaton routes vs closed forms ==\n";
    c.check(rooted_wheel_series_automaton(order) == rooted_wheel_series_closed(order),
            "rooted-wheel transfer matches closed form to order " + std::to_string(order));
    c.check(transfer_L(1, 0, order) == transfer_L10_closed(order),
            "L10 transfer matches closed form to order " + std::to_string(order));
    {
        const auto [r0, r1] = reflection_word_series_automaton(order);
        c.check(r0 == reflection_vertex_axis_closed(order),
                "vertex-axis reflection words match closed form");
        c.check(r1 == reflection_edge_axis_closed(order),
                "edge-axis reflection words match closed form");
    }

    out << "== Burnside integral route vs closed forms ==\n";
    c.check(wheel_series_integral(order) == wheel_series(order), "W integral route equals closed form");
    c.check(oriented_wheel_series_integral(order) == oriented_wheel_series(order),
            "W+ integral route equals closed form");

    out << "== configuration sums ==\n";
    c.check(wheels_not_p3_series(false, order) == not_p3_rational(order),
            "violating-wheel configuration sum equals closed form");
    c.check(wheels_not_p3_series(true, order) == oriented_not_p3_rational(order),
            "oriented configuration sum equals corrected closed form");
    c.check(wheels_not_p3_series_dropping(7, false, order) != wheels_not_p3_series(false, order),
            "regression: omitting the marked four-diameter class changes the series");

    out << "== dual routes for the final series ==\n";
    TruncatedSeries p(order), plus(order), minus(order);
    bool routes_ok = true;
    try {
        p = polytope_series(order);
        plus = oriented_polytope_series(order);
        minus = achiral_series(order);
    } catch (const std::exception& e) {
        routes_ok = false;
        c.check(false, "component route equals extraction route", e.what());
    }
    if (routes_ok) {
        c.check(true, "component route equals extraction route (P and P+)");
        c.check(p.all_integer() && p.all_nonnegative() && plus.all_integer() && minus.all_nonnegative(),
                "counting series have nonnegative integer coefficients");
        c.check(achiral_rational(order) == minus, "achiral rational form equals 2P - P+");
    }

    out << "== brute-force oracle, sizes 1.." << max_size << " ==\n";
    {
        const auto bundle = make_wheel_bundle(max_size);
        const auto viol_series_d = wheels_not_p3_series(false, max_size);
        const auto viol_series_c = wheels_not_p3_series(true, max_size);
        bool pairs_ok = true, burnside_ok = true, orbits_ok = true, notp3_ok = true, krange_ok = true;
        for (int n = 1; n <= max_size; ++n) {
            const auto pairs = oracle::fixed_pair_counts(n);
            const auto orbits_d = oracle::wheel_orbit_counts(n, oracle::Group::Dihedral);
            const auto orbits_c = oracle::wheel_orbit_counts(n, oracle::Group::Cyclic);
            long wn = 0, wpn = 0;
            for (int k = 1; k <= n; ++k) {
                long rooted = 0, rot = 0, refl = 0, wd = 0;
                if (auto it = pairs.find(k); it != pairs.end()) {
                    rooted = it->second.rooted;
                    rot = it->second.rotation_pairs;
                    refl = it->second.reflection_pairs;
                }
                if (auto it = orbits_d.find(k); it != orbits_d.end()) wd = it->second;
                pairs_ok &= bundle.rooted.at(n, k) == rooted;
                pairs_ok &= bundle.rotation.at(n, k) == rot;
                pairs_ok &= bundle.reflection.at(n, k) == refl;
                burnside_ok &= 4L * k * wd == rooted + rot + refl;
            }
            for (const auto& [k, v] : orbits_d) wn += v;
            for (const auto& [k, v] : orbits_c) wpn += v;
            orbits_ok &= bundle.wheels[n] == wn;
            orbits_ok &= bundle.oriented_wheels[n] == wpn;
            long viol_d = 0, viol_c = 0;
            for (const auto& [k, v] : oracle::not_p3_orbit_counts(n, oracle::Group::Dihedral)) {
                krange_ok &= k <= 4;
                viol_d += v;
            }
            for (const auto& [k, v] : oracle::not_p3_orbit_counts(n, oracle::Group::Cyclic)) viol_c += v;
            notp3_ok &= viol_series_d[n] == viol_d;
            notp3_ok &= viol_series_c[n] == viol_c;
        }
        c.check(pairs_ok, "R, R+, R- match fixed-pair counts per (n,k)");
        c.check(burnside_ok, "Burnside identity 4k W_{n,k} = R + R+ + R- per (n,k)");
        c.check(orbits_ok, "W and W+ match orbit counts");
        c.check(notp3_ok, "violating-wheel series match orbit counts");
        c.check(krange_ok, "every violating wheel has at most 4 diameters");
    }
    if (routes_ok) {
        bool counts_ok = true;
        for (int n = 5; n <= max_size; ++n) {
            const auto bf = oracle::brute_force_counts(n, jobs);
            counts_ok &= p[n] == Rational(bf.c);
            counts_ok &= plus[n] == Rational(bf.c_plus);
            counts_ok &= minus[n] == Rational(bf.c_minus);
        }
        c.check(counts_ok, "P, P+, P- match diagram counts for sizes 5.." + std::to_string(max_size));
    }

    out << "== documented findings (reported, not failures) ==\n";
    {
        const auto legacy = achiral_rational_legacy(std::max(order, 12));
        std::ostringstream terms;
        for (int n = 5; n <= 11; ++n) terms << (n > 5 ? " " : "") << legacy[n].get_str() << "*x^" << n;
        c.note("standalone achiral rational form expands to " + terms.str());
        c.note("its exponents follow the identity route (24 at x^7, not x^8): the shifted");
        c.note("first-terms line seen in older write-ups is a typo.");
        if (routes_ok) {
            const bool match7 = legacy[7] == minus[7];
            const bool diverge8 = legacy[8] != minus[8];
            c.note(std::string("vs identity route 2P - P+: agrees through x^7 (") +
                   (match7 ? "yes" : "NO") + "), diverges from x^8 (" + (diverge8 ? "yes" : "no") +
                   "): legacy " + legacy[8].get_str() + " vs " + minus[8].get_str() + ".");
        }
        c.note("cause: the legacy oriented violating-wheel closed form misses one");
        c.note("alternating-hexagon subtlety; the corrected form is oracle-verified, so the");
        c.note("oriented counts here read 169, 615, 1973, 5849 at x^8..x^11 where older");
        c.note("tables print 170, 617, 1979, 5859. identity route is the count of record.");
    }

    out << (c.failures == 0 ? "verify: all checks passed\n"
                            : "verify: " + std::to_string(c.failures) + " check(s) FAILED\n");
    return c.failures;
}

void write_asymptotics_report(int max_d, int digits, std::ostream& out) {
    const auto& k = asymptotic_constants();
    out << std::setprecision(digits);
    out << "growth rate        gamma   = " << k.gamma << "  (1/rho, 1-4x+4x^2-2x^3 root)\n";
    out << "achiral rate       lambda  = " << k.lambda << "  (1/alpha, 2x^6-4x^4+4x^2-1 root)\n";
    out << "amplitude          c       ~ " << k.c_amplitude << " * gamma^d / d\n";
    out << "amplitude          c_plus  ~ " << k.c_plus_amplitude << " * gamma^d / d\n";
    out << "achiral amplitudes C = " << k.C << ", C' = " << k.C_prime
        << "  (c_minus ~ (C + (-1)^d C') lambda^d)\n";
    out << '\n';
    const auto rows = convergence_report(max_d);
    int d0 = -1, prev_d = -1;
    double prev = 0;
    for (const auto& r : rows) {
        if (r.kind != CountKind::Combinatorial) continue;
        const double e = std::abs(r.rel_error);
        if (prev_d >= 0 && e >= prev) d0 = r.d;
        prev = e;
        prev_d = r.d;
    }
    out << "combinatorial |rel error| decreases monotonically beyond d = " << std::max(d0, 2) << '\n';
    out << '\n';
    out << "d,kind,exact,log_estimate,rel_error\n";
    const char* names[] = {"c", "c_plus", "c_minus"};
    for (const auto& r : rows) {
        out << r.d << ',' << names[static_cast<int>(r.kind)] << ',' << r.exact.get_str() << ','
            << r.log_estimate << ',' << r.rel_error << '\n';
    }
}

bool run_bench(const std::vector<int>& orders, std::ostream& out) {
    out << "order,coefficient_ops,ops_ratio\n";
    std::vector<std::uint64_t> ops;
    std::vector<double> wall_ms;
    for (int n : orders) {
        ExtractionStats stats;
        const auto t0 = std::chrono::steady_clock::now();
        const auto rows = coefficient_table(n - 3, &stats);
        const auto t1 = std::chrono::steady_clock::now();
        if (rows.empty()) return false;
        wall_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        ops.push_back(stats.coefficient_ops);
        out << n << ',' << stats.coefficient_ops << ',';
        if (ops.size() > 1)
            out << static_cast<double>(ops.back()) / static_cast<double>(ops[ops.size() - 2]);
        out << '\n';
    }
    bool ok = true;
    for (size_t i = 1; i < ops.size(); ++i) {
        const double ratio = static_cast<double>(ops[i]) / static_cast<double>(ops[i - 1]);
        // doubling the order must stay well below the quadratic ratio 4;
        // the N log N path lands near 2.2
        if (ops[i] <= ops[i - 1] || ratio >= 3.0) ok = false;
    }
    out << (ok ? "scaling: sub-quadratic (consistent with N log N)\n" : "scaling: FAILED\n");
    out << "-- timings (non-deterministic, informational only) --\n";
    for (size_t i = 0; i < orders.size(); ++i)
        out << "order " << orders[i] << ": " << wall_ms[i] << " ms\n";
    return ok;
}

}  // namespace galecount
