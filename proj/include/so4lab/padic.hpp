#pragma once
// Q_p at desk scale: valuations and residues of rationals, truncated p-adic
// numbers, square classes, Hilbert symbols, additive characters and Haar sums.
#include "so4lab/cyclotomic.hpp"
#include "so4lab/rational.hpp"

#include <climits>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace so4lab {

inline constexpr int kDefaultPadicPrecision = 20;
inline constexpr long kInfiniteValuation = LONG_MAX;

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_prime(long p);
void require_prime(long p);  // throws std::invalid_argument

Integer ipow(long p, long e);       // p^e, e >= 0
Rational p_power(long p, long e);   // p^e, any integer e
long valuation(const Rational& x, long p);  // kInfiniteValuation for 0
// unit part of x (x / p^v) reduced mod p^k, in [0, p^k)
Integer unit_residue(const Rational& x, long p, long k);
// canonical representative of the coset x + p^k Z_p: a rational with p-power
// denominator in [0, p^k) (its p-adic expansion truncated below p^k)
Rational coset_representative(const Rational& x, long p, long k);
// Legendre symbol (a/p) for p odd, a a p-adic unit
int legendre(const Integer& a, long p);

class PadicNumber {
public:
    PadicNumber() = default;
    // canonical form of a rational at relative precision N
    static PadicNumber from_rational(const Rational& x, long p, int N = kDefaultPadicPrecision);
    static PadicNumber zero(long p, int N = kDefaultPadicPrecision);

    long prime() const { return p_; }
    bool is_zero() const { return zero_; }
    long valuation() const { return zero_ ? kInfiniteValuation : v_; }
    const Integer& unit() const { return u_; }
    int precision() const { return n_; }
    long absolute_precision() const { return zero_ ? LONG_MAX : v_ + n_; }

    Rational to_rational() const;  // p^v * unit

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& x, const PadicNumber& y);
    friend PadicNumber operator-(const PadicNumber& x, const PadicNumber& y);
    friend PadicNumber operator*(const PadicNumber& x, const PadicNumber& y);
    PadicNumber inverse() const;
    // agreement to the smallest shared absolute precision
    friend bool operator==(const PadicNumber& x, const PadicNumber& y);

    std::string str() const;

private:
    long p_ = 2;
    bool zero_ = true;
    long v_ = 0;
    Integer u_ = 0;
    int n_ = kDefaultPadicPrecision;
};

// smallest positive quadratic non-residue mod an odd prime
long smallest_nonresidue(long p);
// {1, u, p, u p} for odd p; {1, 3, 5, 7, 2, 6, 10, 14} for p = 2
std::vector<Rational> square_class_reps(long p);
// index of the square class of x within square_class_reps(p)
int square_class_index(const Rational& x, long p);

int hilbert_symbol(const Rational& a, const Rational& b, long p);
int hilbert_symbol(const PadicNumber& a, const PadicNumber& b);
// +1 iff a x^2 + b y^2 = z^2 has a primitive solution mod p^depth (exhaustive)
int hilbert_oracle(const Rational& a, const Rational& b, long p, int depth);

// psi(x) = exp(2 pi i {sign * p^conductor * x}_p); conductor 0 is unramified
struct AdditiveCharacter {
    long p;
    int conductor = 0;
    int sign = 1;
    AdditiveCharacter inverse() const { return {p, conductor, -sign}; }
    // psi_a(x) = psi(a x)
    Cyclotomic operator()(const Rational& x) const;
};

Cyclotomic char_eval(const AdditiveCharacter& psi, const Rational& x);
Cyclotomic char_eval(const AdditiveCharacter& psi, const PadicNumber& x);
// r with psi(x) = zeta_N^r; N must be a multiple of the order of psi(x)
unsigned long char_exponent(const AdditiveCharacter& psi, const Rational& x, unsigned long N);

struct Coset {
    Rational base;
    long level;  // the set base + p^level Z_p
};

class CosetRegion {
public:
    CosetRegion(long p, std::vector<Coset> cosets);
    static CosetRegion ball(long p, const Rational& center, long level) { return {p, {{center, level}}}; }
    long prime() const { return p_; }
    const std::vector<Coset>& cosets() const { return cosets_; }
    long finest_level() const;
    // all cosets of level L (>= every stored level) covering the region
    std::vector<Coset> refine(long L) const;
    Rational volume() const;  // vol(Z_p) = 1
    bool contains(const Rational& x) const;
    CosetRegion unite(const CosetRegion& other) const;  // throws on overlap

private:
    long p_;
    std::vector<Coset> cosets_;
};

struct RefinementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Integrand = std::function<Cyclotomic(const Rational&)>;

// exact Haar integral of an integrand declared constant on cosets of level L;
// two points per coset are compared (the base and one seeded random point)
Cyclotomic coset_sum(const CosetRegion& region, long L, const Integrand& f, std::uint64_t seed = 1);

// random element of p^vmin Z_p \ ... with valuation drawn from [vmin, vmax];
// numerator and denominator stay small
Rational random_with_valuation(std::mt19937_64& g, long p, long vmin, long vmax);
Rational random_unit(std::mt19937_64& g, long p);

}  // namespace so4lab
