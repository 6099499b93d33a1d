#include "galecount/polynomial.hpp"

#include <sstream>

namespace galecount {

namespace {
const Rational kZero(0);
}

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<Rational> c(degree + 1, Rational(0));
    c[static_cast<size_t>(degree)] = coeff;
    return Polynomial(std::move(c));
}

const Rational& Polynomial::operator[](int n) const {
    if (n < 0 || n >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(n)];
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = (*this)[static_cast<int>(i)] + o[static_cast<int>(i)];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& s) const {
    std::vector<Rational> c(c_);
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str() << "*x^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace galecount
