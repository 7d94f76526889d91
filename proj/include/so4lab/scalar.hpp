#pragma once
// Uniform helpers over the exact scalar types.
#include "so4lab/cyclotomic.hpp"
#include "so4lab/ratfun.hpp"
#include "so4lab/rational.hpp"

namespace so4lab {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero(const RationalFunction2& x) { return x.is_zero(); }

inline std::string str(const Rational& x) { return to_string(x); }
inline std::string str(const Cyclotomic& x) { return x.str(); }
inline std::string str(const RationalFunction2& x) { return x.str(); }

// the value type behind a gmpxx expression template (identity otherwise)
template <class T>
struct value_type_of { using type = T; };
template <class U, class V>
struct value_type_of<__gmp_expr<U, V>> { using type = __gmp_expr<U, U>; };
template <class T>
using value_t = typename value_type_of<std::decay_t<T>>::type;

}  // namespace so4lab
