#pragma once

#include <string>
#include <vector>

#include "galecount/polynomial.hpp"
#include "galecount/polytopes.hpp"

namespace galecount {

enum class CountKind { Combinatorial, Oriented, Achiral };

struct AsymptoticConstants {
    double rho;       // real root of 1 - 4x + 4x^2 - 2x^3 in (0,1)
    double gamma;     // 1/rho, growth rate of c and c+
    double alpha;     // positive root of 2x^6 - 4x^4 + 4x^2 - 1
    double lambda;    // 1/alpha, growth rate of c-
    double c_amplitude;       // gamma^4 / (4(gamma-1))
    double c_plus_amplitude;  // gamma^4 / (2(gamma-1))
    double C;         // achiral amplitude Q(alpha)
    double C_prime;   // alternating achiral amplitude Q(-alpha)
};

/// Root of `poly` inside [lo, hi] to the given relative tolerance, by
/// bisection refined with Newton steps. The bracket must straddle a sign
/// change.
double dominant_root(const Polynomial& poly, double lo, double hi, double rel_tol = 1e-12);

const AsymptoticConstants& asymptotic_constants();

/// Leading-order estimate: c ~ A gamma^d / d, c+ ~ 2A gamma^d / d,
/// c- ~ (C + (-1)^d C') lambda^d.
double asymptotic_estimate(int d, CountKind kind);

struct ConvergenceRow {
    int d;
    CountKind kind;
    Int exact;
    double log_estimate;  // natural log of the estimate
    double rel_error;     // estimate/exact - 1
};

/// Exact-vs-estimate comparison for d = 2..max_d, all three kinds.
/// Ratios are formed in log space so the table is safe far beyond the
/// range where gamma^d overflows.
std::vector<ConvergenceRow> convergence_report(int max_d);

/// ln of a positive big integer.
double log_of(const Int& v);

}  // namespace galecount
