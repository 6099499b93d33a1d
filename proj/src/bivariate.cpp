#include "galecount/bivariate.hpp"

#include <stdexcept>

namespace galecount {

namespace {
const Rational kZero(0);
}

XUPoly xu_mul(const XUPoly& a, const XUPoly& b) {
    XUPoly r;
    for (const auto& ta : a) {
        for (const auto& tb : b) {
            const int xd = ta.x_deg + tb.x_deg;
            const int ud = ta.u_deg + tb.u_deg;
            Rational c = ta.coeff * tb.coeff;
            bool merged = false;
            for (auto& t : r) {
                if (t.x_deg == xd && t.u_deg == ud) {
                    t.coeff += c;
                    merged = true;
                    break;
                }
            }
            if (!merged) r.push_back({xd, ud, c});
        }
    }
    XUPoly out;
    for (auto& t : r)
        if (t.coeff != 0) out.push_back(t);
    return out;
}

BivariateSeries::BivariateSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.resize(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) c_[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, Rational(0));
}

BivariateSeries BivariateSeries::constant(const Rational& c, int order) {
    BivariateSeries r(order);
    r.c_[0][0] = c;
    return r;
}

const Rational& BivariateSeries::at(int n, int k) const {
    if (n < 0 || n > order() || k < 0 || k > n) return kZero;
    return c_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

void BivariateSeries::add_term(int n, int k, const Rational& v) {
    if (n > order()) return;
    if (k > n)
        throw std::logic_error("bivariate u-degree bound violated");
    c_[static_cast<size_t>(n)][static_cast<size_t>(k)] += v;
}

BivariateSeries BivariateSeries::from_rational(const XUPoly& num, const XUPoly& den, int order) {
    Rational d0(0);
    for (const auto& t : den) {
        if (t.x_deg == 0) {
            if (t.u_deg != 0)
                throw std::invalid_argument("bivariate from_rational: den x^0 term must be u-free");
            d0 = t.coeff;
        }
    }
    if (d0 == 0)
        throw std::invalid_argument("bivariate from_rational: den constant term must be nonzero");
    BivariateSeries f(order);
    for (int n = 0; n <= order; ++n) {
        // acc(u) = num_n(u) - sum_{j>=1} den_j(u) * f_{n-j}(u)
        std::vector<Rational> acc(static_cast<size_t>(n) + 1, Rational(0));
        for (const auto& t : num) {
            if (t.x_deg == n) {
                if (t.u_deg > n) throw std::invalid_argument("numerator breaks u-degree bound");
                acc[static_cast<size_t>(t.u_deg)] += t.coeff;
            }
        }
        for (const auto& t : den) {
            if (t.x_deg == 0 || t.x_deg > n) continue;
            const auto& prev = f.c_[static_cast<size_t>(n - t.x_deg)];
            for (size_t k2 = 0; k2 < prev.size(); ++k2) {
                if (prev[k2] == 0) continue;
                const int k = t.u_deg + static_cast<int>(k2);
                if (k > n) {
                    if (t.coeff * prev[k2] != 0)
                        throw std::logic_error("bivariate expansion breaks u-degree bound");
                    continue;
                }
                acc[static_cast<size_t>(k)] -= t.coeff * prev[k2];
            }
        }
        for (int k = 0; k <= n; ++k) f.c_[static_cast<size_t>(n)][static_cast<size_t>(k)] = acc[static_cast<size_t>(k)] / d0;
    }
    return f;
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
    const int N = std::min(order(), o.order());
    BivariateSeries r(N);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k)
            r.c_[static_cast<size_t>(n)][static_cast<size_t>(k)] = at(n, k) + o.at(n, k);
    return r;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& o) const {
    const int N = std::min(order(), o.order());
    BivariateSeries r(N);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k)
            r.c_[static_cast<size_t>(n)][static_cast<size_t>(k)] = at(n, k) - o.at(n, k);
    return r;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
    const int N = std::min(order(), o.order());
    BivariateSeries r(N);
    for (int n1 = 0; n1 <= N; ++n1) {
        for (int k1 = 0; k1 <= n1; ++k1) {
            const Rational& a = at(n1, k1);
            if (a == 0) continue;
            for (int n2 = 0; n1 + n2 <= N; ++n2) {
                for (int k2 = 0; k2 <= n2; ++k2) {
                    const Rational& b = o.at(n2, k2);
                    if (b != 0) r.add_term(n1 + n2, k1 + k2, a * b);
                }
            }
        }
    }
    return r;
}

BivariateSeries BivariateSeries::scaled(const Rational& s) const {
    BivariateSeries r(*this);
    for (auto& row : r.c_)
        for (auto& v : row) v *= s;
    return r;
}

BivariateSeries BivariateSeries::times_univariate(const TruncatedSeries& g, int u_shift) const {
    const int N = std::min(order(), g.order());
    BivariateSeries r(N);
    for (int n1 = 0; n1 <= N; ++n1) {
        for (int k1 = 0; k1 <= n1; ++k1) {
            const Rational& a = at(n1, k1);
            if (a == 0) continue;
            for (int n2 = 0; n1 + n2 <= N; ++n2) {
                const Rational& b = g[n2];
                if (b != 0) r.add_term(n1 + n2, k1 + u_shift, a * b);
            }
        }
    }
    return r;
}

BivariateSeries BivariateSeries::substitute_powers(int e) const {
    if (e < 1) throw std::invalid_argument("substitute_powers requires e >= 1");
    BivariateSeries r(order());
    for (int n = 0; n * e <= order(); ++n)
        for (int k = 0; k <= n; ++k)
            if (at(n, k) != 0) r.c_[static_cast<size_t>(n * e)][static_cast<size_t>(k * e)] = at(n, k);
    return r;
}

TruncatedSeries BivariateSeries::eval_u1() const {
    TruncatedSeries r(order());
    std::vector<Rational> out(static_cast<size_t>(order()) + 1, Rational(0));
    for (int n = 0; n <= order(); ++n) {
        Rational s(0);
        for (int k = 0; k <= n; ++k) s += at(n, k);
        out[static_cast<size_t>(n)] = s;
    }
    return TruncatedSeries(order(), std::move(out));
}

BivariateSeries BivariateSeries::u_derivative() const {
    BivariateSeries r(order());
    for (int n = 0; n <= order(); ++n)
        for (int k = 1; k <= n; ++k)
            if (at(n, k) != 0) r.c_[static_cast<size_t>(n)][static_cast<size_t>(k - 1)] = Rational(k) * at(n, k);
    return r;
}

BivariateSeries BivariateSeries::times_u() const {
    BivariateSeries r(order());
    for (int n = 0; n <= order(); ++n) {
        for (int k = 0; k <= n; ++k) {
            if (at(n, k) == 0) continue;
            if (k + 1 > n) throw std::logic_error("times_u breaks the u-degree bound");
            r.c_[static_cast<size_t>(n)][static_cast<size_t>(k + 1)] = at(n, k);
        }
    }
    return r;
}

TruncatedSeries BivariateSeries::integrate_u_inv() const {
    std::vector<Rational> out(static_cast<size_t>(order()) + 1, Rational(0));
    for (int n = 0; n <= order(); ++n) {
        if (at(n, 0) != 0)
            throw std::domain_error("integrate_u_inv: nonzero u^0 term at x^" + std::to_string(n));
        Rational s(0);
        for (int k = 1; k <= n; ++k) {
            if (at(n, k) != 0) s += at(n, k) / Rational(k);
        }
        out[static_cast<size_t>(n)] = s;
    }
    return TruncatedSeries(order(), std::move(out));
}

bool BivariateSeries::all_integer() const {
    for (const auto& row : c_)
        for (const auto& v : row)
            if (!is_integer(v)) return false;
    return true;
}

bool BivariateSeries::all_nonnegative() const {
    for (const auto& row : c_)
        for (const auto& v : row)
            if (v < 0) return false;
    return true;
}

bool BivariateSeries::is_zero() const {
    for (const auto& row : c_)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

}  // namespace galecount
