#pragma once

#include <initializer_list>
#include <vector>

#include "galecount/rational.hpp"

namespace galecount {

/// Dense univariate polynomial with exact rational coefficients.
/// Coefficients are stored by ascending degree with no trailing zeros;
/// the zero polynomial has an empty coefficient vector and degree() == -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial monomial(int degree, const Rational& coeff);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^n (zero beyond the stored degree).
    const Rational& operator[](int n) const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial derivative() const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    const std::vector<Rational>& coeffs() const { return c_; }

    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace galecount
