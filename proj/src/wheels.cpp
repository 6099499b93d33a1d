#include "galecount/wheels.hpp"

#include <stdexcept>

#include "galecount/automata.hpp"

namespace galecount {

BivariateSeries rotation_wheel_series(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    const auto phi = totient_table(order + 1);
    BivariateSeries out(order);
    const BivariateSeries rooted = rooted_wheel_series_closed(order);
    // odd orders e = 2r+1: R(x^e, u^e) has x-valuation e (minimal rooted
    // wheel has size 1)
    for (int e = 3; e <= order; e += 2)
        out = out + rooted.substitute_powers(e).scaled(phi[static_cast<size_t>(e)]);
    // even orders e = 2r: valuation 2r
    for (int r = 1; 2 * r <= order; ++r) {
        const XUPoly num = {{2 * r, r, 1}};
        const XUPoly den = {{0, 0, 1}, {2 * r, 0, -1}, {2 * r, r, -1}};
        out = out + BivariateSeries::from_rational(num, den, order).scaled(phi[static_cast<size_t>(2 * r)]);
    }
    return out;
}

BivariateSeries reflection_wheel_series(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    const BivariateSeries sum = reflection_vertex_axis_closed(order) + reflection_edge_axis_closed(order);
    return sum.u_derivative().times_u();
}

TruncatedSeries log_core_series(int order) {
    // x g'(x) is rational, so n*g_n obeys a constant-coefficient linear
    // recurrence; dividing by n recovers g_n in O(order) operations
    const Polynomial num({0, 0, 0, 6, -4});
    const Polynomial den = Polynomial({1, -4, 4, -2}) * Polynomial({1, -2});
    const TruncatedSeries xgp = TruncatedSeries::from_rational(num, den, order);
    std::vector<Rational> g(static_cast<size_t>(order) + 1, Rational(0));
    for (int n = 1; n <= order; ++n) g[static_cast<size_t>(n)] = xgp[n] / Rational(n);
    return TruncatedSeries(order, std::move(g));
}

TruncatedSeries log_ratio_series(int order) {
    std::vector<Rational> h(static_cast<size_t>(order) + 1, Rational(0));
    Int pow2(1);
    for (int n = 1; n <= order; ++n) {
        pow2 <<= 1;
        Rational v(pow2 - 1);
        v /= n;
        h[static_cast<size_t>(n)] = v;
    }
    return TruncatedSeries(order, std::move(h));
}

TruncatedSeries reflection_rational_term(int order) {
    const Polynomial num = Polynomial({0, 1}) * Polynomial({-1, -1, 1}) * Polynomial({1, 0, -1, 0, 1});
    const Polynomial den = Polynomial({2, -2}) * Polynomial({-1, 0, 4, 0, -4, 0, 2});
    return TruncatedSeries::from_rational(num, den, order);
}

namespace {

TruncatedSeries wheel_log_parts(int order, bool oriented) {
    const auto phi = totient_table(order + 1);
    const TruncatedSeries g = log_core_series(order);
    const TruncatedSeries h = log_ratio_series(order);
    TruncatedSeries out(order);
    // g has valuation 3, so g(x^e) contributes only for 3e <= order
    for (int e = 1; 3 * e <= order; e += 2)
        out = out + g.substitute_power(e).scaled(rat(phi[static_cast<size_t>(e)], (oriented ? 2 : 4) * e));
    for (int e = 1; e <= order; ++e)
        out = out + h.substitute_power(e).scaled(rat(phi[static_cast<size_t>(e)], (oriented ? 1 : 2) * e));
    return out;
}

}  // namespace

TruncatedSeries wheel_series(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    return wheel_log_parts(order, false) + reflection_rational_term(order);
}

TruncatedSeries oriented_wheel_series(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    return wheel_log_parts(order, true);
}

TruncatedSeries wheel_series_integral(int order) {
    const BivariateSeries r = rooted_wheel_series_closed(order);
    const BivariateSeries rp = rotation_wheel_series(order);
    const TruncatedSeries refl = reflection_vertex_axis_closed(order).eval_u1() +
                                 reflection_edge_axis_closed(order).eval_u1();
    return ((r + rp).integrate_u_inv() + refl).scaled(Rational(1, 4));
}

TruncatedSeries oriented_wheel_series_integral(int order) {
    const BivariateSeries r = rooted_wheel_series_closed(order);
    const BivariateSeries rp = rotation_wheel_series(order);
    return (r + rp).integrate_u_inv().scaled(Rational(1, 2));
}

WheelSeriesBundle make_wheel_bundle(int order) {
    return WheelSeriesBundle{rooted_wheel_series_closed(order),
                             rotation_wheel_series(order),
                             reflection_wheel_series(order),
                             reflection_vertex_axis_closed(order),
                             reflection_edge_axis_closed(order),
                             wheel_series(order),
                             oriented_wheel_series(order)};
}

}  // namespace galecount
