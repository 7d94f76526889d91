#include "so4lab/rational.hpp"

#include <stdexcept>

namespace so4lab {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

Rational pow_int(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) throw std::domain_error("pow_int: zero to a negative power");
        return pow_int(Rational(1) / r, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
    return make_rational(n, d);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace so4lab
