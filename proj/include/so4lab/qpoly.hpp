#pragma once
// Dense univariate polynomials over Q, coefficients stored low degree first.
#include "so4lab/rational.hpp"

#include <vector>

namespace so4lab {

using QPoly = std::vector<Rational>;

void trim(QPoly& f);
int degree(const QPoly& f);  // -1 for zero
QPoly poly_add(const QPoly& f, const QPoly& g);
QPoly poly_sub(const QPoly& f, const QPoly& g);
QPoly poly_mul(const QPoly& f, const QPoly& g);
QPoly poly_scale(const QPoly& f, const Rational& c);
// f = q*g + r, deg r < deg g
void poly_divmod(const QPoly& f, const QPoly& g, QPoly& q, QPoly& r);
QPoly poly_mod(const QPoly& f, const QPoly& g);
// monic gcd; gcd(0,0) = 0
QPoly poly_gcd(const QPoly& f, const QPoly& g);
// s*f + t*g = gcd(f,g) (monic)
QPoly poly_xgcd(const QPoly& f, const QPoly& g, QPoly& s, QPoly& t);
QPoly poly_monic(const QPoly& f);

}  // namespace so4lab
