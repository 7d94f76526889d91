#include "so4lab/cyclotomic.hpp"

#include "so4lab/qpoly.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace so4lab {

namespace {

std::vector<unsigned long> prime_factors(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// exact division of integer polynomials by a monic divisor
std::vector<long long> divide_monic(std::vector<long long> f, const std::vector<long long>& g) {
    int dg = static_cast<int>(g.size()) - 1;
    int df = static_cast<int>(f.size()) - 1;
    std::vector<long long> q(df - dg + 1, 0);
    for (int i = df; i >= dg; --i) {
        long long c = f[i];
        q[i - dg] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
    }
    return q;
}

std::vector<long long> squarefree_cyclotomic(unsigned long n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<long long> f(n + 1, 0);
    f[0] = -1;
    f[n] = 1;
    for (unsigned long d = 1; d < n; ++d)
        if (n % d == 0) f = divide_monic(f, cyclotomic_poly(d));
    return f;
}

struct Sparse {
    std::vector<std::pair<unsigned long, long long>> terms;  // below the leading term
    unsigned long deg;
};

const Sparse& sparse_phi(unsigned long n) {
    static std::mutex mu;
    static std::map<unsigned long, Sparse> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    const auto& phi = cyclotomic_poly(n);
    Sparse s;
    s.deg = phi.size() - 1;
    for (unsigned long i = 0; i < s.deg; ++i)
        if (phi[i] != 0) s.terms.push_back({i, phi[i]});
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(s)).first->second;
}

// reduce a polynomial of degree < n modulo Phi_n; T is long long or Rational
template <class T>
std::vector<Rational> reduce_mod_phi(unsigned long n, std::vector<T> f) {
    const Sparse& s = sparse_phi(n);
    for (unsigned long i = f.size(); i-- > s.deg;) {
        if (f[i] == 0) continue;
        T c = f[i];
        unsigned long shift = i - s.deg;
        for (const auto& [j, a] : s.terms) f[shift + j] -= c * a;
        f[i] = 0;
    }
    std::vector<Rational> out(s.deg);
    for (unsigned long i = 0; i < s.deg && i < f.size(); ++i) out[i] = Rational(static_cast<long>(f[i]));
    return out;
}

std::vector<Rational> reduce_mod_phi(unsigned long n, std::vector<Rational> f) {
    const Sparse& s = sparse_phi(n);
    for (unsigned long i = f.size(); i-- > s.deg;) {
        if (f[i] == 0) continue;
        Rational c = f[i];
        unsigned long shift = i - s.deg;
        for (const auto& [j, a] : s.terms) f[shift + j] -= c * Rational(static_cast<long>(a));
        f[i] = 0;
    }
    f.resize(s.deg);
    return f;
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
    unsigned long r = n;
    for (unsigned long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

const std::vector<long long>& cyclotomic_poly(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    static std::recursive_mutex mu;
    static std::map<unsigned long, std::vector<long long>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<long long> phi;
    if (n == 1) {
        phi = {-1, 1};
    } else {
        unsigned long rad = 1;
        for (unsigned long p : prime_factors(n)) rad *= p;
        std::vector<long long> base = squarefree_cyclotomic(rad);
        unsigned long e = n / rad;  // Phi_n(x) = Phi_rad(x^e)
        phi.assign((base.size() - 1) * e + 1, 0);
        for (size_t i = 0; i < base.size(); ++i) phi[i * e] = base[i];
    }
    return cache.emplace(n, std::move(phi)).first->second;
}

Cyclotomic Cyclotomic::zeta(unsigned long n, long long k) {
    if (n == 0) throw std::invalid_argument("zeta: order must be positive");
    long long e = k % static_cast<long long>(n);
    if (e < 0) e += n;
    std::vector<long long> counts(n, 0);
    counts[e] = 1;
    return from_root_counts(n, counts);
}

Cyclotomic Cyclotomic::from_root_counts(unsigned long n, const std::vector<long long>& counts) {
    if (counts.size() != n) throw std::invalid_argument("from_root_counts: need n counts");
    return Cyclotomic(n, reduce_mod_phi<long long>(n, counts));
}

Cyclotomic Cyclotomic::from_coeffs(unsigned long n, std::vector<Rational> c) {
    if (c.size() > n) throw std::invalid_argument("from_coeffs: too many coefficients");
    c.resize(n);
    return Cyclotomic(n, reduce_mod_phi(n, std::move(c)));
}

Cyclotomic Cyclotomic::embed(unsigned long N) const {
    if (N % n_ != 0) throw std::invalid_argument("embed: order does not divide target");
    if (N == n_) return *this;
    unsigned long step = N / n_;
    std::vector<Rational> f(N);
    for (size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) f[(j * step) % N] += c_[j];
    return Cyclotomic(N, reduce_mod_phi(N, std::move(f)));
}

namespace {

// is v in the subfield of order n/r?  Fills sub with its coordinates if so.
bool descend(unsigned long n, unsigned long r, const std::vector<Rational>& v, std::vector<Rational>& sub) {
    unsigned long m = n / r;
    if (m % r == 0) {
        // Phi_n(x) = Phi_m(x^r): the subfield basis is a subset of the power basis
        for (size_t j = 0; j < v.size(); ++j)
            if (j % r != 0 && v[j] != 0) return false;
        sub.assign(euler_phi(m), Rational(0));
        for (size_t j = 0; j < v.size(); j += r) sub[j / r] = v[j];
        return true;
    }
    unsigned long dn = v.size(), dm = euler_phi(m);
    if (dn > 240) return false;  // too large for the dense solve; leave unminimized
    // columns: images of zeta_m^j = zeta_n^(r j) in the power basis of order n
    std::vector<std::vector<Rational>> a(dn, std::vector<Rational>(dm + 1));
    for (unsigned long j = 0; j < dm; ++j) {
        Cyclotomic z = Cyclotomic::zeta(n, static_cast<long long>(r * j));
        for (unsigned long i = 0; i < dn; ++i) a[i][j] = z.coeffs()[i];
    }
    for (unsigned long i = 0; i < dn; ++i) a[i][dm] = v[i];
    std::vector<long> pivcol;
    unsigned long row = 0;
    for (unsigned long col = 0; col < dm && row < dn; ++col) {
        unsigned long piv = row;
        while (piv < dn && a[piv][col] == 0) ++piv;
        if (piv == dn) continue;
        std::swap(a[piv], a[row]);
        Rational inv = Rational(1) / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (unsigned long i = 0; i < dn; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (unsigned long k = col; k <= dm; ++k) a[i][k] -= f * a[row][k];
        }
        pivcol.push_back(col);
        ++row;
    }
    for (unsigned long i = row; i < dn; ++i)
        if (a[i][dm] != 0) return false;
    sub.assign(dm, Rational(0));
    for (unsigned long i = 0; i < row; ++i) sub[pivcol[i]] = a[i][dm];
    return true;
}

}  // namespace

Cyclotomic Cyclotomic::minimized() const {
    Cyclotomic cur = *this;
    bool progress = true;
    while (progress && cur.n_ > 1) {
        progress = false;
        for (unsigned long r : prime_factors(cur.n_)) {
            std::vector<Rational> sub;
            if (descend(cur.n_, r, cur.c_, sub)) {
                cur = Cyclotomic(cur.n_ / r, std::move(sub));
                progress = true;
                break;
            }
        }
    }
    if (cur.n_ == 2) cur = Cyclotomic(1, {cur.c_[0]});  // Q(zeta_2) = Q
    return cur;
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Rational> f(n_);
    for (size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) f[(n_ - j % n_) % n_] += c_[j];
    return Cyclotomic(n_, reduce_mod_phi(n_, std::move(f)));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    QPoly f(c_.begin(), c_.end());
    const auto& phi = cyclotomic_poly(n_);
    QPoly g;
    for (long long x : phi) g.push_back(Rational(static_cast<long>(x)));
    QPoly s, t;
    QPoly d = poly_xgcd(f, g, s, t);
    if (degree(d) != 0) throw std::logic_error("Cyclotomic: non-unit in a field");
    s.resize(std::max<size_t>(s.size(), 1));
    return Cyclotomic::from_coeffs(n_, s);
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const { return minimized().n_ == 1; }

Rational Cyclotomic::to_rational() const {
    Cyclotomic m = minimized();
    if (m.n_ != 1) throw std::domain_error("Cyclotomic value is not rational");
    return m.c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

static unsigned long lcm_order(unsigned long a, unsigned long b) { return std::lcm(a, b); }

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned long N = lcm_order(a.n_, b.n_);
    Cyclotomic x = a.embed(N), y = b.embed(N);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto scalar = [](const Cyclotomic& z) {
        for (size_t i = 1; i < z.c_.size(); ++i)
            if (z.c_[i] != 0) return false;
        return true;
    };
    if (scalar(a) || scalar(b)) {
        const Cyclotomic& s = scalar(a) ? a : b;
        Cyclotomic r = scalar(a) ? b : a;
        Rational k = s.c_.empty() ? Rational(0) : s.c_[0];
        for (auto& x : r.c_) x *= k;
        return r;
    }
    unsigned long N = lcm_order(a.n_, b.n_);
    Cyclotomic x = a.embed(N), y = b.embed(N);
    if (N == 1) return Cyclotomic(x.c_[0] * y.c_[0]);
    std::vector<Rational> f(2 * x.c_.size());
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (size_t j = 0; j < y.c_.size(); ++j)
            if (y.c_[j] != 0) f[i + j] += x.c_[i] * y.c_[j];
    }
    // degree < 2 phi(N) <= 2N; fold x^N = 1 first
    std::vector<Rational> g(N);
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) g[i % N] += f[i];
    return Cyclotomic(N, reduce_mod_phi(N, std::move(g)));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned long N = lcm_order(a.n_, b.n_);
    return a.embed(N).c_ == b.embed(N).c_;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::complex<long double> Cyclotomic::approx() const {
    const long double two_pi = 6.283185307179586476925286766559L;
    std::complex<long double> z(0, 0);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        long double ang = two_pi * static_cast<long double>(j) / static_cast<long double>(n_);
        z += static_cast<long double>(c_[j].get_d()) * std::polar(1.0L, ang);
    }
    return z;
}

std::string Cyclotomic::str() const {
    Cyclotomic m = minimized();
    if (m.n_ == 1) return to_string(m.c_[0]);
    std::ostringstream os;
    os << "[" << m.n_ << ":";
    for (size_t i = 0; i < m.c_.size(); ++i) os << (i ? ", " : " ") << to_string(m.c_[i]);
    os << "]";
    return os.str();
}

}  // namespace so4lab
