#pragma once

#include <vector>

#include "galecount/rational.hpp"
#include "galecount/series.hpp"

namespace galecount {

/// Term of a polynomial in (x, u).
struct XUTerm {
    int x_deg;
    int u_deg;
    Rational coeff;
};

/// Sparse polynomial in (x, u), used to state closed forms.
using XUPoly = std::vector<XUTerm>;

XUPoly xu_mul(const XUPoly& a, const XUPoly& b);

/// Series in x truncated at order N whose x^n coefficient is a polynomial
/// in u of degree <= n. The degree bound is structural: every letter and
/// every diameter carries size at least 1, so the number of diameters k
/// of any counted object never exceeds its size n.
class BivariateSeries {
  public:
    explicit BivariateSeries(int order);

    static BivariateSeries constant(const Rational& c, int order);

    /// Expansion of num/den in powers of x with u-polynomial coefficients.
    /// Requires den's x^0 coefficient to be a nonzero constant in u.
    static BivariateSeries from_rational(const XUPoly& num, const XUPoly& den, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^n u^k (zero outside the stored triangle).
    const Rational& at(int n, int k) const;

    BivariateSeries operator+(const BivariateSeries& o) const;
    BivariateSeries operator-(const BivariateSeries& o) const;
    BivariateSeries operator*(const BivariateSeries& o) const;
    BivariateSeries scaled(const Rational& s) const;
    bool operator==(const BivariateSeries& o) const { return c_ == o.c_; }

    /// Multiply by g(x) * u^{u_shift} for a univariate g. The shift must
    /// keep the u-degree bound intact, which holds whenever g has
    /// valuation >= u_shift (each added diameter adds at least one unit
    /// of size).
    BivariateSeries times_univariate(const TruncatedSeries& g, int u_shift) const;

    /// F(x^e, u^e).
    BivariateSeries substitute_powers(int e) const;

    /// Sum of the u-coefficients per x power: F(x, 1).
    TruncatedSeries eval_u1() const;

    /// dF/du: u^k -> k u^{k-1}.
    BivariateSeries u_derivative() const;

    /// u * F; valid only when it cannot break the degree bound (i.e. the
    /// top u-coefficient of every x^n slot is zero).
    BivariateSeries times_u() const;

    /// int_0^1 u^{-1} F du: maps u^k -> 1/k and sums. Requires every
    /// u-constant term to vanish (a wheel has at least one diameter).
    TruncatedSeries integrate_u_inv() const;

    bool all_integer() const;
    bool all_nonnegative() const;
    bool is_zero() const;

  private:
    void add_term(int n, int k, const Rational& v);
    // c_[n][k] = coefficient of x^n u^k, 0 <= k <= n
    std::vector<std::vector<Rational>> c_;
};

}  // namespace galecount
