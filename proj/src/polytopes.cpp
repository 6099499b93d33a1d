#include "galecount/polytopes.hpp"

#include <stdexcept>

#include "galecount/halfplane.hpp"
#include "galecount/wheels.hpp"

namespace galecount {

namespace {

TruncatedSeries rational_delta_part(int order, bool oriented) {
    if (!oriented) {
        // K = reflection rational term - W_notP3
        return reflection_rational_term(order) - not_p3_rational(order);
    }
    return TruncatedSeries(order) - oriented_not_p3_rational(order);
}

void check_counting_series(const TruncatedSeries& s, const char* name) {
    for (int n = 0; n <= s.order(); ++n) {
        if (!is_integer(s[n]))
            throw std::logic_error(std::string(name) + ": non-integer coefficient at x^" + std::to_string(n));
        if (s[n] < 0)
            throw std::logic_error(std::string(name) + ": negative coefficient at x^" + std::to_string(n));
    }
}

}  // namespace

TruncatedSeries extraction_delta_series(int order, bool oriented, ExtractionStats* stats) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    std::uint64_t ops = 0;
    const auto phi = totient_table(order + 1);
    const TruncatedSeries g = log_core_series(order);
    const TruncatedSeries h = log_ratio_series(order);
    ops += 2u * static_cast<std::uint64_t>(order);  // two O(N) recurrences

    std::vector<Rational> f(static_cast<size_t>(order) + 1, Rational(0));
    for (int e = 1; 3 * e <= order; e += 2) {
        const Rational w = rat(phi[static_cast<size_t>(e)], (oriented ? 2 : 4) * e);
        for (int n = 3; n * e <= order; ++n) {
            if (g[n] == 0) continue;
            f[static_cast<size_t>(n * e)] += w * g[n];
            ++ops;
        }
    }
    for (int e = 1; e <= order; ++e) {
        const Rational w = rat(phi[static_cast<size_t>(e)], (oriented ? 1 : 2) * e);
        for (int n = 1; n * e <= order; ++n) {
            f[static_cast<size_t>(n * e)] += w * h[n];
            ++ops;
        }
    }
    const TruncatedSeries k = rational_delta_part(order, oriented);
    for (int n = 0; n <= order; ++n) {
        f[static_cast<size_t>(n)] += k[n];
        ++ops;
    }
    if (stats) stats->coefficient_ops += ops + static_cast<std::uint64_t>(order);
    return TruncatedSeries(order, std::move(f));
}

TruncatedSeries polytope_series(int order) {
    if (order < 5) throw std::invalid_argument("order must be >= 5");
    const TruncatedSeries component =
        (wheel_series(order) - wheels_not_p3_series(false, order)).geometric_prefix();
    const TruncatedSeries direct = extraction_delta_series(order, false).geometric_prefix();
    if (!(component == direct))
        throw std::logic_error("polytope series routes disagree (component vs extraction)");
    check_counting_series(direct, "P");
    return direct;
}

TruncatedSeries oriented_polytope_series(int order) {
    if (order < 5) throw std::invalid_argument("order must be >= 5");
    const TruncatedSeries component =
        (oriented_wheel_series(order) - wheels_not_p3_series(true, order)).geometric_prefix();
    const TruncatedSeries direct = extraction_delta_series(order, true).geometric_prefix();
    if (!(component == direct))
        throw std::logic_error("oriented polytope series routes disagree (component vs extraction)");
    check_counting_series(direct, "P+");
    return direct;
}

TruncatedSeries achiral_series(int order) {
    const TruncatedSeries p = polytope_series(order);
    const TruncatedSeries plus = oriented_polytope_series(order);
    const TruncatedSeries minus = p.scaled(2) - plus;
    check_counting_series(minus, "P-");
    return minus;
}

TruncatedSeries achiral_rational(int order) {
    const Polynomial num =
        Polynomial({0, 0, 0, 0, 0, 1}) * Polynomial({1, 5, 5, -8, -12, 3, 11, 2, -4, -2});
    const Polynomial den = Polynomial({1, -1}) * Polynomial({1, -1}) * Polynomial({1, -1}) *
                           Polynomial({1, -1}) * Polynomial({1, 1}) * Polynomial({1, 1}) *
                           Polynomial({1, 0, -4, 0, 4, 0, -2});
    return TruncatedSeries::from_rational(num, den, order);
}

TruncatedSeries achiral_rational_legacy(int order) {
    const Polynomial num =
        Polynomial({0, 0, 0, 0, 0, 1}) * Polynomial({1, 5, 4, -14, -17, 15, 23, -5, -15, -2, 4, 2});
    const Polynomial den = Polynomial({-1, 1}) * Polynomial({-1, 1}) * Polynomial({-1, 1}) *
                           Polynomial({-1, 1}) * Polynomial({-1, 1}) *
                           Polynomial({-1, 0, 4, 0, -4, 0, 2}) * Polynomial({1, 1}) *
                           Polynomial({1, 1}) * Polynomial({1, 1});
    return TruncatedSeries::from_rational(num, den, order);
}

std::vector<CountRow> coefficient_table(int max_d, ExtractionStats* stats) {
    if (max_d < 2) throw std::invalid_argument("max_d must be >= 2");
    const int order = max_d + 3;
    const TruncatedSeries dp = extraction_delta_series(order, false, stats);
    const TruncatedSeries dpp = extraction_delta_series(order, true, stats);
    // c(d+3,d) = c(d+2,d-1) + f_{d+3}, iteratively
    std::vector<CountRow> rows;
    rows.reserve(static_cast<size_t>(max_d - 1));
    Rational c(0), cp(0);
    for (int n = 0; n <= order; ++n) {
        c += dp[n];
        cp += dpp[n];
        if (stats) stats->coefficient_ops += 2;
        const int d = n - 3;
        if (d < 2) continue;
        const Int ci = to_integer(c), cpi = to_integer(cp);
        Int cm = 2 * ci - cpi;
        if (cm < 0 || cpi < ci) throw std::logic_error("count invariants violated at d=" + std::to_string(d));
        rows.push_back(CountRow{d, n, ci, cpi, cm});
    }
    return rows;
}

}  // namespace galecount
