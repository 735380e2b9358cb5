#pragma once

#include <gmpxx.h>

#include <string>

namespace folcalc {

// Exact arithmetic everywhere: the ground field is Q, backed by GMP.
using BigInt = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational rational_from_string(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

// mpq_class(num, den) does not canonicalize on its own; this does.
inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Prints "a" when the denominator is 1, else "a/b".
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace folcalc
