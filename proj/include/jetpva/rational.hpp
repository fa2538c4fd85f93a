#ifndef JETPVA_RATIONAL_HPP
#define JETPVA_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace jetpva {

// Exact arbitrary-precision rational scalar. mpq_class keeps values
// canonicalized (lowest terms, positive denominator), which is exactly the
// invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Prints "num" or "num/den"; the canonical coefficient form.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace jetpva

#endif
