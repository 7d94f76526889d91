#pragma once
#include <gmpxx.h>

#include <string>

namespace so4lab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& n, const Integer& d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// "n" or "n/d"
std::string to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// r^e for any integer e (r != 0 when e < 0)
Rational pow_int(const Rational& r, long e);

bool is_integer(const Rational& r);

}  // namespace so4lab
