#pragma once
// Elements of Q(zeta_n), reduced modulo the n-th cyclotomic polynomial.
// Mixed orders are combined in Q(zeta_lcm).
#include "so4lab/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace so4lab {

unsigned long euler_phi(unsigned long n);
// integer coefficients of Phi_n, low degree first (cached)
const std::vector<long long>& cyclotomic_poly(unsigned long n);

class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_{Rational(0)} {}
    Cyclotomic(long v) : n_(1), c_{Rational(v)} {}
    Cyclotomic(const Rational& r) : n_(1), c_{r} {}

    // zeta_n^k with zeta_n = exp(2 pi i / n)
    static Cyclotomic zeta(unsigned long n, long long k = 1);
    // sum_j counts[j] zeta_n^j, counts indexed 0..n-1
    static Cyclotomic from_root_counts(unsigned long n, const std::vector<long long>& counts);
    // coefficients on the power basis 1, x, ..., x^(phi(n)-1)
    static Cyclotomic from_coeffs(unsigned long n, std::vector<Rational> c);

    unsigned long order() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Cyclotomic embed(unsigned long N) const;  // n must divide N
    Cyclotomic minimized() const;             // smallest order holding the value
    Cyclotomic conj() const;
    Cyclotomic inverse() const;

    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const;  // throws unless is_rational()

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
    Cyclotomic& operator/=(const Cyclotomic& b) { return *this = *this / b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic pow(long e) const;

    // floating approximation; only used to pick signs, never reported
    std::complex<long double> approx() const;

    // "[n: c0, c1, ...]" on the power basis, after minimizing
    std::string str() const;

private:
    Cyclotomic(unsigned long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    unsigned long n_;
    std::vector<Rational> c_;
};

}  // namespace so4lab
