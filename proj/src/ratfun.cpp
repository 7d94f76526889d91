#include "so4lab/ratfun.hpp"

#include "so4lab/qpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace so4lab {

// ---------- Laurent2

Laurent2 Laurent2::monomial(const Rational& c, int ea, int eb) {
    Laurent2 r;
    r.add_term({ea, eb}, c);
    return r;
}

void Laurent2::add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    if (k.first > kLaurentWindow || k.first < -kLaurentWindow || k.second > kLaurentWindow ||
        k.second < -kLaurentWindow)
        throw std::range_error("Laurent exponent outside the window");
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Rational Laurent2::coeff(int ea, int eb) const {
    auto it = t_.find({ea, eb});
    return it == t_.end() ? Rational(0) : it->second;
}

int Laurent2::min_a() const {
    int m = 0;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (first || k.first < m) m = k.first;
        first = false;
    }
    return m;
}
int Laurent2::min_b() const {
    int m = 0;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (first || k.second < m) m = k.second;
        first = false;
    }
    return m;
}
int Laurent2::max_a() const { return t_.empty() ? 0 : t_.rbegin()->first.first; }
int Laurent2::max_b() const {
    int m = 0;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (first || k.second > m) m = k.second;
        first = false;
    }
    return m;
}

Laurent2 Laurent2::operator-() const {
    Laurent2 r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

Laurent2 operator+(const Laurent2& x, const Laurent2& y) {
    Laurent2 r = x;
    for (const auto& [k, c] : y.t_) r.add_term(k, c);
    return r;
}

Laurent2 operator-(const Laurent2& x, const Laurent2& y) { return x + (-y); }

Laurent2 operator*(const Laurent2& x, const Laurent2& y) {
    Laurent2 r;
    for (const auto& [kx, cx] : x.t_)
        for (const auto& [ky, cy] : y.t_) r.add_term({kx.first + ky.first, kx.second + ky.second}, cx * cy);
    return r;
}

Laurent2 Laurent2::shifted(int da, int db) const {
    Laurent2 r;
    for (const auto& [k, c] : t_) r.add_term({k.first + da, k.second + db}, c);
    return r;
}

Rational Laurent2::eval(const Rational& a, const Rational& b) const {
    Rational s = 0;
    for (const auto& [k, c] : t_) s += c * pow_int(a, k.first) * pow_int(b, k.second);
    return s;
}

std::string Laurent2::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [k, c] = *it;
        Rational mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool unit = (mag == 1);
        bool any = false;
        if (!unit || (k.first == 0 && k.second == 0)) {
            os << to_string(mag);
            any = true;
        }
        auto var = [&](const char* v, int e) {
            if (e == 0) return;
            if (any) os << "*";
            os << v;
            if (e != 1) os << "^" << e;
            any = true;
        };
        var("a", k.first);
        var("b", k.second);
    }
    return os.str();
}

// ---------- gcd machinery: honest polynomials viewed in Q[a][b]

namespace {

using BPoly = std::vector<QPoly>;  // index = exponent of b, entries polynomials in a

BPoly to_bpoly(const Laurent2& f) {
    BPoly r;
    for (const auto& [k, c] : f.terms()) {
        if (k.first < 0 || k.second < 0) throw std::logic_error("to_bpoly: negative exponent");
        if (static_cast<int>(r.size()) <= k.second) r.resize(k.second + 1);
        QPoly& q = r[k.second];
        if (static_cast<int>(q.size()) <= k.first) q.resize(k.first + 1);
        q[k.first] += c;
    }
    for (auto& q : r) trim(q);
    while (!r.empty() && r.back().empty()) r.pop_back();
    return r;
}

Laurent2 from_bpoly(const BPoly& f) {
    Laurent2 r;
    for (size_t j = 0; j < f.size(); ++j)
        for (size_t i = 0; i < f[j].size(); ++i)
            if (f[j][i] != 0) r = r + Laurent2::monomial(f[j][i], static_cast<int>(i), static_cast<int>(j));
    return r;
}

void btrim(BPoly& f) {
    while (!f.empty() && f.back().empty()) f.pop_back();
}

QPoly content(const BPoly& f) {
    QPoly g;
    for (const auto& q : f) g = poly_gcd(g, q);
    return g;
}

BPoly divide_content(const BPoly& f, const QPoly& c) {
    BPoly r(f.size());
    for (size_t j = 0; j < f.size(); ++j) {
        QPoly q, rem;
        poly_divmod(f[j], c, q, rem);
        if (!rem.empty()) throw std::logic_error("content does not divide");
        r[j] = q;
    }
    btrim(r);
    return r;
}

// divides out the Q[a]-content, then scales to coprime integer coefficients
BPoly primitive_part(const BPoly& f) {
    if (f.empty()) return f;
    BPoly r = divide_content(f, content(f));
    Integer l = 1, g = 0;
    for (const auto& q : r)
        for (const auto& c : q) {
            if (c == 0) continue;
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        }
    Rational s = make_rational(l, g);
    for (auto& q : r)
        for (auto& c : q) c *= s;
    return r;
}

BPoly prem(BPoly f, const BPoly& g) {
    int dg = static_cast<int>(g.size()) - 1;
    const QPoly& lg = g.back();
    while (static_cast<int>(f.size()) - 1 >= dg && !f.empty()) {
        int df = static_cast<int>(f.size()) - 1;
        QPoly lf = f.back();
        for (auto& q : f) q = poly_mul(q, lg);
        for (int j = 0; j <= dg; ++j) f[df - dg + j] = poly_sub(f[df - dg + j], poly_mul(lf, g[j]));
        btrim(f);
        // keep coefficient growth in check
        if (!f.empty()) f = primitive_part(f);
    }
    return f;
}

}  // namespace

Laurent2 poly2_gcd(const Laurent2& f, const Laurent2& g) {
    if (f.is_zero() && g.is_zero()) return Laurent2();
    BPoly F = to_bpoly(f), G = to_bpoly(g);
    QPoly cf = F.empty() ? QPoly{} : content(F), cg = G.empty() ? QPoly{} : content(G);
    QPoly c = poly_gcd(cf, cg);
    BPoly H;
    if (F.empty()) {
        H = primitive_part(G);
    } else if (G.empty()) {
        H = primitive_part(F);
    } else {
        F = primitive_part(F);
        G = primitive_part(G);
        if (F.size() < G.size()) std::swap(F, G);
        while (!G.empty()) {
            BPoly R = prem(F, G);
            F = std::move(G);
            G = R.empty() ? R : primitive_part(R);
        }
        H = primitive_part(F);
    }
    for (auto& q : H) q = poly_mul(q, c);
    Laurent2 r = from_bpoly(H);
    if (r.is_zero()) return r;
    Rational lead = r.terms().rbegin()->second;
    return r * Laurent2(Rational(1) / lead);
}

Laurent2 poly2_exact_div(const Laurent2& f, const Laurent2& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (f.is_zero()) return Laurent2();
    int fa = f.min_a(), fb = f.min_b(), ga = g.min_a(), gb = g.min_b();
    Laurent2 rem = f.shifted(-fa, -fb), d = g.shifted(-ga, -gb), q;
    const auto& [lk, lc] = *d.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& [k, c] = *rem.terms().rbegin();
        int ea = k.first - lk.first, eb = k.second - lk.second;
        if (ea < 0 || eb < 0) throw std::domain_error("polynomial does not divide");
        Laurent2 m = Laurent2::monomial(c / lc, ea, eb);
        q = q + m;
        rem = rem - m * d;
    }
    return q.shifted(fa - ga, fb - gb);
}

// ---------- RationalFunction2

RationalFunction2::RationalFunction2(const Laurent2& n, const Laurent2& d) : num_(n), den_(d) { normalize(); }

void RationalFunction2::normalize() { normalize_impl(false); }

// coprime: caller guarantees gcd(num, den) is a monomial times a constant
void RationalFunction2::normalize_impl(bool coprime) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Laurent2(1);
        return;
    }
    int na = num_.min_a(), nb = num_.min_b(), da = den_.min_a(), db = den_.min_b();
    Laurent2 n = num_.shifted(-na, -nb), d = den_.shifted(-da, -db);
    bool den_constant = d.terms().size() == 1;  // a pure monomial once shifted
    if (!coprime && !den_constant) {
        Laurent2 g = poly2_gcd(n, d);
        if (g != Laurent2(1)) {
            n = poly2_exact_div(n, g);
            d = poly2_exact_div(d, g);
        }
    }
    Rational lead = d.terms().rbegin()->second;
    Laurent2 inv(Rational(1) / lead);
    num_ = (n * inv).shifted(na - da, nb - db);
    den_ = d * inv;
}

RationalFunction2 RationalFunction2::from_coprime(const Laurent2& n, const Laurent2& d) {
    RationalFunction2 r;
    r.num_ = n;
    r.den_ = d;
    r.normalize_impl(true);
    return r;
}

RationalFunction2 normalize_rational_function(const Laurent2& num, const Laurent2& den) {
    return RationalFunction2(num, den);
}

RationalFunction2 RationalFunction2::operator-() const {
    RationalFunction2 r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction2 operator+(const RationalFunction2& x, const RationalFunction2& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.is_laurent() && y.is_laurent()) return RationalFunction2(x.num_ + y.num_);
    // reduced inputs: only factors of gcd(dx, dy) can cancel
    Laurent2 g = poly2_gcd(x.den_, y.den_);
    Laurent2 xd = poly2_exact_div(x.den_, g), yd = poly2_exact_div(y.den_, g);
    Laurent2 n = x.num_ * yd + y.num_ * xd;
    if (n.is_zero()) return RationalFunction2();
    int na = n.min_a(), nb = n.min_b();
    Laurent2 h = poly2_gcd(n.shifted(-na, -nb), g);
    Laurent2 d = xd * y.den_;
    if (h != Laurent2(1)) {
        n = poly2_exact_div(n, h);
        d = poly2_exact_div(d, h);
    }
    return RationalFunction2::from_coprime(n, d);
}

RationalFunction2 operator-(const RationalFunction2& x, const RationalFunction2& y) { return x + (-y); }

namespace {
// split off the common factor of a Laurent numerator and an honest denominator
Laurent2 cross_gcd(const Laurent2& num, const Laurent2& den) {
    if (num.is_zero() || den.terms().size() == 1) return Laurent2(1);
    return poly2_gcd(num.shifted(-num.min_a(), -num.min_b()), den);
}
}  // namespace

RationalFunction2 operator*(const RationalFunction2& x, const RationalFunction2& y) {
    if (x.is_zero() || y.is_zero()) return RationalFunction2();
    Laurent2 g1 = cross_gcd(x.num_, y.den_), g2 = cross_gcd(y.num_, x.den_);
    Laurent2 n = poly2_exact_div(x.num_, g1) * poly2_exact_div(y.num_, g2);
    Laurent2 d = poly2_exact_div(x.den_, g2) * poly2_exact_div(y.den_, g1);
    return RationalFunction2::from_coprime(n, d);
}

RationalFunction2 operator/(const RationalFunction2& x, const RationalFunction2& y) {
    if (y.is_zero()) throw std::domain_error("rational function division by zero");
    return x * RationalFunction2::from_coprime(y.den_, y.num_);
}

bool operator==(const RationalFunction2& x, const RationalFunction2& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
}

RationalFunction2 RationalFunction2::pow(long e) const {
    if (e < 0) return (RationalFunction2(1) / *this).pow(-e);
    RationalFunction2 r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rational RationalFunction2::eval(const Rational& a, const Rational& b) const {
    Rational d = den_.eval(a, b);
    if (d == 0) throw std::domain_error("rational function pole at the evaluation point");
    return num_.eval(a, b) / d;
}

std::string RationalFunction2::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace so4lab
