#include "galecount/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace galecount {

double dominant_root(const Polynomial& poly, double lo, double hi, double rel_tol) {
    if (!(lo < hi)) throw std::invalid_argument("empty bracket");
    double flo = poly.eval(lo), fhi = poly.eval(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0)) throw std::invalid_argument("bracket does not straddle a sign change");
    const Polynomial dp = poly.derivative();
    // bisect to a narrow interval, then polish with Newton
    for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = poly.eval(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 60; ++it) {
        const double f = poly.eval(x);
        const double d = dp.eval(x);
        if (d == 0) break;
        const double step = f / d;
        const double nx = x - step;
        if (std::abs(step) <= rel_tol * std::abs(x)) return nx;
        if (nx < lo || nx > hi) break;  // Newton left the bracket; bisection result stands
        x = nx;
    }
    return x;
}

namespace {

AsymptoticConstants compute_constants() {
    AsymptoticConstants k{};
    const Polynomial growth_poly({1, -4, 4, -2});
    const Polynomial achiral_poly({-1, 0, 4, 0, -4, 0, 2});
    k.rho = dominant_root(growth_poly, 0.0, 1.0);
    k.gamma = 1.0 / k.rho;
    k.alpha = dominant_root(achiral_poly, 0.0, 1.0);
    k.lambda = 1.0 / k.alpha;
    k.c_amplitude = std::pow(k.gamma, 4) / (4.0 * (k.gamma - 1.0));
    k.c_plus_amplitude = 2.0 * k.c_amplitude;
    // Q(x) = P-(x)(1-4x^2+4x^4-2x^6) / (4x^5(3x^4-4x^2+2)); the vanishing
    // factor cancels the singular factor of P- analytically, leaving
    // n(x) / ((1-x)^4 (1+x)^2 4(3x^4-4x^2+2)) with n the reduced numerator
    const Polynomial n({1, 5, 5, -8, -12, 3, 11, 2, -4, -2});
    auto q = [&](double x) {
        const double d1 = std::pow(1.0 - x, 4) * std::pow(1.0 + x, 2);
        const double d2 = 4.0 * (3.0 * std::pow(x, 4) - 4.0 * x * x + 2.0);
        return n.eval(x) / (d1 * d2);
    };
    k.C = q(k.alpha);
    k.C_prime = q(-k.alpha);
    return k;
}

}  // namespace

const AsymptoticConstants& asymptotic_constants() {
    static const AsymptoticConstants k = compute_constants();
    return k;
}

double asymptotic_estimate(int d, CountKind kind) {
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    const auto& k = asymptotic_constants();
    switch (kind) {
        case CountKind::Combinatorial:
            return k.c_amplitude * std::pow(k.gamma, d) / d;
        case CountKind::Oriented:
            return k.c_plus_amplitude * std::pow(k.gamma, d) / d;
        case CountKind::Achiral:
            return (k.C + ((d % 2 == 0) ? k.C_prime : -k.C_prime)) * std::pow(k.lambda, d);
    }
    throw std::logic_error("unreachable");
}

double log_of(const Int& v) {
    if (v <= 0) throw std::domain_error("log of non-positive integer");
    long exp2 = 0;
    const double m = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(m) + static_cast<double>(exp2) * std::log(2.0);
}

std::vector<ConvergenceRow> convergence_report(int max_d) {
    if (max_d < 10) throw std::invalid_argument("max_d must be >= 10");
    const auto rows = coefficient_table(max_d);
    const auto& k = asymptotic_constants();
    const double lg = std::log(k.gamma), ll = std::log(k.lambda);
    std::vector<ConvergenceRow> out;
    out.reserve(rows.size() * 3);
    for (const auto& r : rows) {
        const double base[3] = {
            std::log(k.c_amplitude) + r.d * lg - std::log(static_cast<double>(r.d)),
            std::log(k.c_plus_amplitude) + r.d * lg - std::log(static_cast<double>(r.d)),
            std::log(k.C + ((r.d % 2 == 0) ? k.C_prime : -k.C_prime)) + r.d * ll,
        };
        const Int* exact[3] = {&r.c, &r.c_plus, &r.c_minus};
        const CountKind kinds[3] = {CountKind::Combinatorial, CountKind::Oriented, CountKind::Achiral};
        for (int i = 0; i < 3; ++i) {
            const double rel = std::expm1(base[i] - log_of(*exact[i]));
            out.push_back(ConvergenceRow{r.d, kinds[i], *exact[i], base[i], rel});
        }
    }
    return out;
}

}  // namespace galecount
