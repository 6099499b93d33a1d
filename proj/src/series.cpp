#include "galecount/series.hpp"

#include <sstream>
#include <stdexcept>

namespace galecount {

void TruncatedSeries::check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) {
    check_order(order);
    coeffs.resize(static_cast<size_t>(order) + 1, Rational(0));
    c_ = std::move(coeffs);
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, int order) {
    check_order(order);
    TruncatedSeries f(order);
    for (int n = 0; n <= std::min(order, p.degree()); ++n) f.c_[static_cast<size_t>(n)] = p[n];
    return f;
}

TruncatedSeries TruncatedSeries::from_rational(const Polynomial& num, const Polynomial& den,
                                               int order) {
    check_order(order);
    if (den.is_zero() || den[0] == 0)
        throw std::invalid_argument("from_rational: denominator must have nonzero constant term");
    TruncatedSeries f(order);
    const Rational& d0 = den[0];
    const int dd = den.degree();
    for (int n = 0; n <= order; ++n) {
        Rational acc = num[n];
        for (int j = 1; j <= std::min(n, dd); ++j) {
            if (den[j] != 0) acc -= den[j] * f.c_[static_cast<size_t>(n - j)];
        }
        f.c_[static_cast<size_t>(n)] = acc / d0;
    }
    return f;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    const int n = std::min(order(), o.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] + o.c_[static_cast<size_t>(i)];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    const int n = std::min(order(), o.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] - o.c_[static_cast<size_t>(i)];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    const int n = std::min(order(), o.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        const Rational& a = c_[static_cast<size_t>(i)];
        if (a == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            const Rational& b = o.c_[static_cast<size_t>(j)];
            if (b != 0) r.c_[static_cast<size_t>(i + j)] += a * b;
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& s) const {
    TruncatedSeries r(*this);
    for (auto& v : r.c_) v *= s;
    return r;
}

TruncatedSeries TruncatedSeries::log() const {
    if (c_[0] != 1) throw std::domain_error("series log requires constant term 1");
    const int N = order();
    TruncatedSeries g(N);
    for (int n = 1; n <= N; ++n) {
        Rational acc = Rational(n) * c_[static_cast<size_t>(n)];
        for (int k = 1; k < n; ++k) {
            if (g.c_[static_cast<size_t>(k)] != 0 && c_[static_cast<size_t>(n - k)] != 0)
                acc -= Rational(k) * g.c_[static_cast<size_t>(k)] * c_[static_cast<size_t>(n - k)];
        }
        g.c_[static_cast<size_t>(n)] = acc / Rational(n);
    }
    return g;
}

TruncatedSeries TruncatedSeries::substitute_power(int e) const {
    if (e < 1) throw std::invalid_argument("substitute_power requires e >= 1");
    const int N = order();
    TruncatedSeries g(N);
    for (int n = 0; n * e <= N; ++n) g.c_[static_cast<size_t>(n * e)] = c_[static_cast<size_t>(n)];
    return g;
}

TruncatedSeries TruncatedSeries::geometric_prefix() const {
    TruncatedSeries r(order());
    Rational run(0);
    for (int n = 0; n <= order(); ++n) {
        run += c_[static_cast<size_t>(n)];
        r.c_[static_cast<size_t>(n)] = run;
    }
    return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() == 0) return TruncatedSeries(0);
    TruncatedSeries r(order() - 1);
    for (int n = 1; n <= order(); ++n)
        r.c_[static_cast<size_t>(n - 1)] = Rational(n) * c_[static_cast<size_t>(n)];
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    check_order(new_order);
    TruncatedSeries r(new_order);
    for (int n = 0; n <= std::min(new_order, order()); ++n) r.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
    return r;
}

bool TruncatedSeries::all_integer() const {
    for (const auto& v : c_)
        if (!is_integer(v)) return false;
    return true;
}

bool TruncatedSeries::all_nonnegative() const {
    for (const auto& v : c_)
        if (v < 0) return false;
    return true;
}

std::string TruncatedSeries::str(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    for (int n = 0; n <= order() && shown < max_terms; ++n) {
        if (c_[static_cast<size_t>(n)] == 0) continue;
        if (shown) os << " + ";
        os << c_[static_cast<size_t>(n)].get_str() << "*x^" << n;
        ++shown;
    }
    if (shown == 0) return "0";
    os << " + O(x^" << order() + 1 << ")";
    return os.str();
}

std::vector<long> totient_table(int n) {
    if (n < 1) throw std::invalid_argument("totient_table requires n >= 1");
    std::vector<long> phi(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) phi[static_cast<size_t>(i)] = i;
    for (int p = 2; p <= n; ++p) {
        if (phi[static_cast<size_t>(p)] == p) {
            for (int m = p; m <= n; m += p) phi[static_cast<size_t>(m)] -= phi[static_cast<size_t>(m)] / p;
        }
    }
    phi[0] = 0;
    return phi;
}

}  // namespace galecount
