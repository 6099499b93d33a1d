#pragma once

#include <vector>

#include "galecount/polynomial.hpp"
#include "galecount/rational.hpp"

namespace galecount {

/// Power series in x truncated at a fixed order N, with exact rational
/// coefficients for x^0..x^N. Arithmetic between series of different
/// orders truncates to the smaller order. Immutable after construction.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order) : c_(order + 1, Rational(0)) { check_order(order); }
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    /// Unique series f with den*f == num (mod x^{N+1}), by the constant-
    /// coefficient linear recurrence. Requires den(0) != 0.
    static TruncatedSeries from_rational(const Polynomial& num, const Polynomial& den, int order);
    static TruncatedSeries from_polynomial(const Polynomial& p, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const Rational& c) const;
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    /// ln f for f with constant term exactly 1, via
    /// n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}.
    TruncatedSeries log() const;

    /// f(x^e); coefficients beyond the truncation order are dropped.
    TruncatedSeries substitute_power(int e) const;

    /// f / (1-x): running prefix sums of the coefficients.
    TruncatedSeries geometric_prefix() const;

    TruncatedSeries derivative() const;
    TruncatedSeries truncated(int order) const;

    bool all_integer() const;
    bool all_nonnegative() const;

    std::string str(int max_terms = 12) const;

  private:
    static void check_order(int order);
    std::vector<Rational> c_;
};

/// phi(1..N) by sieve; index 0 unused.
std::vector<long> totient_table(int n);

}  // namespace galecount
