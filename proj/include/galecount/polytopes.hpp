#pragma once

#include <cstdint>
#include <vector>

#include "galecount/rational.hpp"
#include "galecount/series.hpp"

namespace galecount {

/// One table line: combinatorial, oriented, and achiral counts of
/// d-polytopes with d+3 vertices.
struct CountRow {
    int d;
    int vertices;
    Int c;
    Int c_plus;
    Int c_minus;
};

struct ExtractionStats {
    std::uint64_t coefficient_ops = 0;
};

/// P(x) = sum_d c(d+3,d) x^{d+3}. Computed by both the component route
/// (prefix of W - W_notP3) and the direct recurrence extraction; throws
/// std::logic_error if the routes disagree or any coefficient is
/// negative or non-integer.
TruncatedSeries polytope_series(int order);

/// P+(x), same dual-route contract.
TruncatedSeries oriented_polytope_series(int order);

/// P-(x) = 2P - P+; throws on a negative coefficient.
TruncatedSeries achiral_series(int order);

/// Rational closed form of P- obtained by exact cancellation of the log
/// parts of 2P - P+.
TruncatedSeries achiral_rational(int order);

/// The historically published rational form for P- (carries a propagated
/// error in the oriented part from x^8 on); kept for the verify report.
TruncatedSeries achiral_rational_legacy(int order);

/// Coefficients of (1-x)P (or (1-x)P+), by the recurrence path only:
/// rational parts via linear recurrences, log parts via the n*g_n
/// recurrence and (2^n-1)/n, totient-weighted substituted additions.
/// O(N log N) coefficient operations.
TruncatedSeries extraction_delta_series(int order, bool oriented, ExtractionStats* stats = nullptr);

/// Production path: full table for d = 2..max_d.
std::vector<CountRow> coefficient_table(int max_d, ExtractionStats* stats = nullptr);

}  // namespace galecount
