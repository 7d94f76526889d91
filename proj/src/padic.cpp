#include "so4lab/padic.hpp"

#include <set>
#include <sstream>

namespace so4lab {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(long p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
}

Integer ipow(long p, long e) {
    if (e < 0) throw std::invalid_argument("ipow: negative exponent");
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

Rational p_power(long p, long e) {
    if (e >= 0) return Rational(ipow(p, e));
    return make_rational(1, ipow(p, -e));
}

namespace {

long strip(Integer& n, long p) {
    long v = 0;
    Integer P(p);
    while (n != 0 && mpz_divisible_p(n.get_mpz_t(), P.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t());
        ++v;
    }
    return v;
}

Integer inv_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible modulo p^k");
    return r;
}

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// n / d mod m for d coprime to m
Integer residue(const Integer& n, const Integer& d, const Integer& m) {
    if (m == 1) return 0;
    return mod(n * inv_mod(mod(d, m), m), m);
}

}  // namespace

long valuation(const Rational& x, long p) {
    if (x == 0) return kInfiniteValuation;
    Integer n = x.get_num(), d = x.get_den();
    return strip(n, p) - strip(d, p);
}

Integer unit_residue(const Rational& x, long p, long k) {
    if (x == 0) throw std::domain_error("unit_residue of zero");
    Integer n = x.get_num(), d = x.get_den();
    strip(n, p);
    strip(d, p);
    return residue(n, d, ipow(p, k));
}

Rational coset_representative(const Rational& x, long p, long k) {
    if (x == 0) return 0;
    long v = valuation(x, p);
    if (v >= k) return 0;
    long M = v < 0 ? -v : 0;
    Rational y = x * p_power(p, M);
    Integer r = residue(y.get_num(), y.get_den(), ipow(p, k + M));
    return make_rational(r, ipow(p, M));
}

int legendre(const Integer& a, long p) {
    Integer P(p);
    int s = mpz_legendre(mod(a, P).get_mpz_t(), P.get_mpz_t());
    if (s == 0) throw std::domain_error("legendre: argument not a unit");
    return s;
}

// ---------- PadicNumber

PadicNumber PadicNumber::from_rational(const Rational& x, long p, int N) {
    require_prime(p);
    if (N < 1) throw std::invalid_argument("p-adic precision must be positive");
    PadicNumber r;
    r.p_ = p;
    r.n_ = N;
    if (x == 0) return r;
    r.zero_ = false;
    r.v_ = so4lab::valuation(x, p);
    r.u_ = unit_residue(x, p, N);
    return r;
}

PadicNumber PadicNumber::zero(long p, int N) { return from_rational(0, p, N); }

Rational PadicNumber::to_rational() const {
    if (zero_) return 0;
    return Rational(u_) * p_power(p_, v_);
}

PadicNumber PadicNumber::operator-() const {
    PadicNumber r = *this;
    if (!zero_) r.u_ = mod(-u_, ipow(p_, n_));
    return r;
}

PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
    if (x.p_ != y.p_) throw std::invalid_argument("p-adic primes differ");
    PadicNumber r;
    r.p_ = x.p_;
    r.n_ = std::min(x.n_, y.n_);
    if (x.zero_ || y.zero_) return r;
    r.zero_ = false;
    r.v_ = x.v_ + y.v_;
    r.u_ = mod(x.u_ * y.u_, ipow(r.p_, r.n_));
    return r;
}

PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) {
    if (x.p_ != y.p_) throw std::invalid_argument("p-adic primes differ");
    if (x.zero_) return y;
    if (y.zero_) return x;
    long p = x.p_;
    long v = std::min(x.v_, y.v_);
    long A = std::min(x.v_ + x.n_, y.v_ + y.n_);
    Integer s = x.u_ * ipow(p, x.v_ - v) + y.u_ * ipow(p, y.v_ - v);
    s = mod(s, ipow(p, A - v));
    PadicNumber r;
    r.p_ = p;
    if (s == 0) {
        r.n_ = static_cast<int>(std::max<long>(1, A - v));
        return r;  // zero to the available precision
    }
    long w = strip(s, p);
    r.zero_ = false;
    r.v_ = v + w;
    r.n_ = static_cast<int>(A - r.v_);
    r.u_ = mod(s, ipow(p, r.n_));
    return r;
}

PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return x + (-y); }

PadicNumber PadicNumber::inverse() const {
    if (zero_) throw std::domain_error("p-adic inverse of zero");
    PadicNumber r = *this;
    r.v_ = -v_;
    r.u_ = inv_mod(u_, ipow(p_, n_));
    return r;
}

bool operator==(const PadicNumber& x, const PadicNumber& y) { return (x - y).is_zero(); }

std::string PadicNumber::str() const {
    std::ostringstream os;
    if (zero_) {
        os << "O(" << p_ << "^" << n_ << ")";
        return os.str();
    }
    os << p_ << "^" << v_ << "*" << u_.get_str() << " + O(" << p_ << "^" << v_ + n_ << ")";
    return os.str();
}

// ---------- square classes and Hilbert symbols

long smallest_nonresidue(long p) {
    if (p == 2) throw std::invalid_argument("no quadratic non-residue mod 2");
    require_prime(p);
    for (long u = 2; u < p; ++u)
        if (legendre(u, p) == -1) return u;
    throw std::logic_error("no non-residue found");
}

std::vector<Rational> square_class_reps(long p) {
    require_prime(p);
    if (p == 2) return {1, 3, 5, 7, 2, 6, 10, 14};
    long u = smallest_nonresidue(p);
    return {1, u, p, u * p};
}

int square_class_index(const Rational& x, long p) {
    if (x == 0) throw std::domain_error("zero has no square class");
    long v = valuation(x, p);
    bool odd = (v % 2) != 0;
    if (p == 2) {
        long u = unit_residue(x, 2, 3).get_si();  // 1, 3, 5, 7
        return (odd ? 4 : 0) + static_cast<int>((u - 1) / 2);
    }
    int nonsq = legendre(unit_residue(x, p, 1), p) == -1 ? 1 : 0;
    return (odd ? 2 : 0) + nonsq;
}

int hilbert_symbol(const Rational& a, const Rational& b, long p) {
    require_prime(p);
    if (a == 0 || b == 0) throw std::domain_error("Hilbert symbol of zero");
    long al = valuation(a, p), be = valuation(b, p);
    if (p == 2) {
        long u = unit_residue(a, 2, 3).get_si(), v = unit_residue(b, 2, 3).get_si();
        auto eps = [](long t) { return ((t - 1) / 2) & 1; };
        auto omega = [](long t) { return ((t * t - 1) / 8) & 1; };
        long e = eps(u) * eps(v) + al * omega(v) + be * omega(u);
        return (e & 1) ? -1 : 1;
    }
    int s = 1;
    if ((al & 1) && (be & 1) && (p % 4 == 3)) s = -s;
    if (be & 1) s *= legendre(unit_residue(a, p, 1), p);
    if (al & 1) s *= legendre(unit_residue(b, p, 1), p);
    return s;
}

int hilbert_symbol(const PadicNumber& a, const PadicNumber& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("p-adic primes differ");
    if (a.is_zero() || b.is_zero()) throw std::domain_error("Hilbert symbol of zero");
    int need = a.prime() == 2 ? 3 : 1;
    if (a.precision() < need || b.precision() < need)
        throw PrecisionError("not enough precision to fix the square class");
    return hilbert_symbol(a.to_rational(), b.to_rational(), a.prime());
}

int hilbert_oracle(const Rational& a, const Rational& b, long p, int depth) {
    require_prime(p);
    if (depth < 3) throw std::invalid_argument("oracle depth must be at least 3");
    if (a == 0 || b == 0) throw std::domain_error("Hilbert symbol of zero");
    // same square classes, integral, valuation 0 or 1
    auto integral = [p](const Rational& x) {
        Integer n = x.get_num() * x.get_den();
        long v = strip(n, p);
        if (v & 1) n *= p;
        return n;
    };
    Integer M = ipow(p, depth);
    long m = M.get_si();
    long A = mod(integral(a), M).get_si(), B = mod(integral(b), M).get_si();
    std::vector<char> square(m, 0);
    for (long z = 0; z < m; ++z) square[(z * z) % m] = 1;
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            if (x % p == 0 && y % p == 0) continue;  // primitive needs x or y a unit
            long s = ((A * ((x * x) % m)) % m + (B * ((y * y) % m)) % m) % m;
            if (square[s]) return 1;
        }
    return -1;
}

// ---------- additive characters

Cyclotomic char_eval(const AdditiveCharacter& psi, const Rational& x) {
    Rational y = x * p_power(psi.p, psi.conductor);
    if (psi.sign < 0) y = -y;
    if (y == 0) return 1;
    long v = valuation(y, psi.p);
    if (v >= 0) return 1;
    long k = -v;
    Integer P = ipow(psi.p, k);
    Rational z = y * Rational(P);
    Integer r = residue(z.get_num(), z.get_den(), P);
    if (!P.fits_ulong_p()) throw std::overflow_error("character level too deep");
    return Cyclotomic::zeta(P.get_ui(), r.get_si());
}

Cyclotomic AdditiveCharacter::operator()(const Rational& x) const { return char_eval(*this, x); }

unsigned long char_exponent(const AdditiveCharacter& psi, const Rational& x, unsigned long N) {
    Rational y = x * p_power(psi.p, psi.conductor);
    if (psi.sign < 0) y = -y;
    if (y == 0) return 0;
    long v = valuation(y, psi.p);
    if (v >= 0) return 0;
    Integer P = ipow(psi.p, -v);
    if (Integer(N) % P != 0) throw std::invalid_argument("char_exponent: order does not divide N");
    Rational z = y * Rational(P);
    Integer r = residue(z.get_num(), z.get_den(), P) * (Integer(N) / P);
    return r.get_ui();
}

Cyclotomic char_eval(const AdditiveCharacter& psi, const PadicNumber& x) {
    if (x.prime() != psi.p) throw std::invalid_argument("character and argument primes differ");
    if (x.is_zero()) return 1;
    if (x.absolute_precision() + psi.conductor < 0)
        throw PrecisionError("precision too low to resolve the fractional part");
    return char_eval(psi, x.to_rational());
}

// ---------- coset regions and Haar sums

CosetRegion::CosetRegion(long p, std::vector<Coset> cosets) : p_(p), cosets_(std::move(cosets)) {
    require_prime(p);
    for (size_t i = 0; i < cosets_.size(); ++i)
        for (size_t j = i + 1; j < cosets_.size(); ++j) {
            long l = std::min(cosets_[i].level, cosets_[j].level);
            if (valuation(cosets_[i].base - cosets_[j].base, p) >= l)
                throw std::invalid_argument("coset region pieces overlap");
        }
}

long CosetRegion::finest_level() const {
    long L = LONG_MIN;
    for (const auto& c : cosets_) L = std::max(L, c.level);
    return L;
}

std::vector<Coset> CosetRegion::refine(long L) const {
    std::vector<Coset> out;
    for (const auto& c : cosets_) {
        if (c.level > L) throw std::invalid_argument("refinement level below a stored level");
        Integer count = ipow(p_, L - c.level);
        if (!count.fits_slong_p() || count.get_si() > 50000000)
            throw std::range_error("refinement too large");
        Rational step = p_power(p_, c.level);
        for (long j = 0; j < count.get_si(); ++j)
            out.push_back({coset_representative(c.base + step * j, p_, L), L});
    }
    return out;
}

Rational CosetRegion::volume() const {
    Rational v = 0;
    for (const auto& c : cosets_) v += p_power(p_, -c.level);
    return v;
}

bool CosetRegion::contains(const Rational& x) const {
    for (const auto& c : cosets_)
        if (valuation(x - c.base, p_) >= c.level) return true;
    return false;
}

CosetRegion CosetRegion::unite(const CosetRegion& other) const {
    if (other.p_ != p_) throw std::invalid_argument("regions over different primes");
    std::vector<Coset> all = cosets_;
    all.insert(all.end(), other.cosets_.begin(), other.cosets_.end());
    return CosetRegion(p_, all);
}

Cyclotomic coset_sum(const CosetRegion& region, long L, const Integrand& f, std::uint64_t seed) {
    long p = region.prime();
    if (L < region.finest_level()) throw std::invalid_argument("declared level coarser than the region");
    std::mt19937_64 g(seed);
    std::uniform_int_distribution<long> pick(1, p * p * p);
    Rational step = p_power(p, L);
    Cyclotomic sum;
    for (const auto& c : region.refine(L)) {
        Cyclotomic v = f(c.base);
        Cyclotomic w = f(c.base + step * pick(g));
        if (v != w) throw RefinementError("integrand not constant on a coset of the declared level");
        sum += v;
    }
    return sum * Cyclotomic(p_power(p, -L));
}

Rational random_unit(std::mt19937_64& g, long p) {
    std::uniform_int_distribution<long> num(1, p * p * p * 4), den(1, 12);
    long n, d;
    do n = num(g) * (num(g) % 2 ? 1 : -1);
    while (n % p == 0);
    do d = den(g);
    while (d % p == 0);
    return make_rational(n, d);
}

Rational random_with_valuation(std::mt19937_64& g, long p, long vmin, long vmax) {
    std::uniform_int_distribution<long> v(vmin, vmax);
    return random_unit(g, p) * p_power(p, v(g));
}

}  // namespace so4lab
