#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace galecount {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact conversion; throws if q is not an integer.
inline Int to_integer(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("non-integer rational: " + q.get_str());
    return q.get_num();
}

}  // namespace galecount
