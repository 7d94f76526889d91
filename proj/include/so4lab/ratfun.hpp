#pragma once
// Laurent polynomials and rational functions in two symbols a, b over Q.
#include "so4lab/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace so4lab {

// exponents are bounded by this window; exceeding it throws
inline constexpr int kLaurentWindow = 200;

class Laurent2 {
public:
    using Key = std::pair<int, int>;  // (exponent of a, exponent of b)
    Laurent2() = default;
    Laurent2(long c) { if (c != 0) t_[{0, 0}] = Rational(c); }
    Laurent2(const Rational& c) { if (c != 0) t_[{0, 0}] = c; }
    static Laurent2 monomial(const Rational& c, int ea, int eb);
    static Laurent2 a() { return monomial(1, 1, 0); }
    static Laurent2 b() { return monomial(1, 0, 1); }

    const std::map<Key, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rational coeff(int ea, int eb) const;
    int min_a() const;
    int min_b() const;
    int max_a() const;
    int max_b() const;

    Laurent2 operator-() const;
    friend Laurent2 operator+(const Laurent2& x, const Laurent2& y);
    friend Laurent2 operator-(const Laurent2& x, const Laurent2& y);
    friend Laurent2 operator*(const Laurent2& x, const Laurent2& y);
    friend bool operator==(const Laurent2& x, const Laurent2& y) { return x.t_ == y.t_; }
    friend bool operator!=(const Laurent2& x, const Laurent2& y) { return x.t_ != y.t_; }
    Laurent2& operator+=(const Laurent2& y) { return *this = *this + y; }
    Laurent2& operator*=(const Laurent2& y) { return *this = *this * y; }

    Laurent2 shifted(int da, int db) const;
    // substitute rational values for a and b
    Rational eval(const Rational& a, const Rational& b) const;
    std::string str() const;

private:
    void add_term(const Key& k, const Rational& c);
    std::map<Key, Rational> t_;
};

// num/den kept reduced: den is an honest polynomial (no a or b factor, all
// exponents >= 0) with leading coefficient 1 in lex order, and gcd(num, den) = 1.
class RationalFunction2 {
public:
    RationalFunction2() : num_(), den_(1) {}
    RationalFunction2(long c) : num_(c), den_(1) {}
    RationalFunction2(const Rational& c) : num_(c), den_(1) {}
    RationalFunction2(const Laurent2& p) : num_(p), den_(1) { normalize(); }
    RationalFunction2(const Laurent2& n, const Laurent2& d);  // throws on d == 0

    static RationalFunction2 a() { return RationalFunction2(Laurent2::a()); }
    static RationalFunction2 b() { return RationalFunction2(Laurent2::b()); }

    const Laurent2& num() const { return num_; }
    const Laurent2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_ == Laurent2(1); }

    RationalFunction2 operator-() const;
    friend RationalFunction2 operator+(const RationalFunction2& x, const RationalFunction2& y);
    friend RationalFunction2 operator-(const RationalFunction2& x, const RationalFunction2& y);
    friend RationalFunction2 operator*(const RationalFunction2& x, const RationalFunction2& y);
    friend RationalFunction2 operator/(const RationalFunction2& x, const RationalFunction2& y);
    RationalFunction2& operator+=(const RationalFunction2& y) { return *this = *this + y; }
    RationalFunction2& operator-=(const RationalFunction2& y) { return *this = *this - y; }
    RationalFunction2& operator*=(const RationalFunction2& y) { return *this = *this * y; }
    RationalFunction2& operator/=(const RationalFunction2& y) { return *this = *this / y; }
    friend bool operator==(const RationalFunction2& x, const RationalFunction2& y);
    friend bool operator!=(const RationalFunction2& x, const RationalFunction2& y) { return !(x == y); }

    RationalFunction2 pow(long e) const;
    Rational eval(const Rational& a, const Rational& b) const;
    std::string str() const;

private:
    static RationalFunction2 from_coprime(const Laurent2& n, const Laurent2& d);
    void normalize();
    void normalize_impl(bool coprime);
    Laurent2 num_, den_;
};

RationalFunction2 normalize_rational_function(const Laurent2& num, const Laurent2& den);

// gcd in Q[a, b] of honest polynomials (exponents >= 0), normalized to leading coefficient 1
Laurent2 poly2_gcd(const Laurent2& f, const Laurent2& g);
// exact quotient f / g in Q[a^{+-1}, b^{+-1}]; throws if g does not divide f
Laurent2 poly2_exact_div(const Laurent2& f, const Laurent2& g);

}  // namespace so4lab
