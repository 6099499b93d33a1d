#pragma once

#include "galecount/bivariate.hpp"
#include "galecount/series.hpp"

namespace galecount {

/// R+(x,u): (rooted wheel, nontrivial rotation) fixed pairs. Odd rotation
/// orders contribute phi(e) R(x^e, u^e); even orders force all labels
/// positive and contribute phi(2r) u^r x^{2r} / (1 - x^{2r}(1 + u^r)).
/// Both sums stop at the first term whose x-valuation exceeds the order.
BivariateSeries rotation_wheel_series(int order);

/// R-(x,u) = u d/du (R^(0,-) + R^(-1,-)).
BivariateSeries reflection_wheel_series(int order);

/// W(x): wheels by size, closed form (totient-weighted log sums plus the
/// reflection rational term).
TruncatedSeries wheel_series(int order);

/// W+(x): oriented wheels by size (cyclic-orbit counterpart of W).
TruncatedSeries oriented_wheel_series(int order);

/// Independent Burnside route: W = (1/4)(int u^{-1}(R + R+) du
/// + R^(0,-)(x,1) + R^(-1,-)(x,1)).
TruncatedSeries wheel_series_integral(int order);

/// W+ = (1/2) int u^{-1} (R + R+) du.
TruncatedSeries oriented_wheel_series_integral(int order);

struct WheelSeriesBundle {
    BivariateSeries rooted;            // R
    BivariateSeries rotation;          // R+
    BivariateSeries reflection;        // R-
    BivariateSeries refl_vertex_axis;  // R^(0,-)
    BivariateSeries refl_edge_axis;    // R^(-1,-)
    TruncatedSeries wheels;            // W
    TruncatedSeries oriented_wheels;   // W+
};

WheelSeriesBundle make_wheel_bundle(int order);

/// Coefficients of -ln(1 - 2x^3/(1-2x)^2), extracted through the n*g_n
/// linear recurrence on x g'(x) = 2x^3(3-2x) / ((1-4x+4x^2-2x^3)(1-2x)).
TruncatedSeries log_core_series(int order);

/// Coefficients of ln((1-x)/(1-2x)): (2^n - 1)/n.
TruncatedSeries log_ratio_series(int order);

/// The reflection rational term x(x^2-x-1)(x^4-x^2+1) /
/// (2(1-x)(2x^6-4x^4+4x^2-1)) = (1/4)(R^(0,-)(x,1) + R^(-1,-)(x,1)).
TruncatedSeries reflection_rational_term(int order);

}  // namespace galecount
