#include "so4lab/qpoly.hpp"

#include <stdexcept>

namespace so4lab {

void trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const QPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

QPoly poly_add(const QPoly& f, const QPoly& g) {
    QPoly h(std::max(f.size(), g.size()));
    for (size_t i = 0; i < f.size(); ++i) h[i] += f[i];
    for (size_t i = 0; i < g.size(); ++i) h[i] += g[i];
    trim(h);
    return h;
}

QPoly poly_sub(const QPoly& f, const QPoly& g) {
    QPoly h(std::max(f.size(), g.size()));
    for (size_t i = 0; i < f.size(); ++i) h[i] += f[i];
    for (size_t i = 0; i < g.size(); ++i) h[i] -= g[i];
    trim(h);
    return h;
}

QPoly poly_mul(const QPoly& f, const QPoly& g) {
    if (f.empty() || g.empty()) return {};
    QPoly h(f.size() + g.size() - 1);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
    }
    trim(h);
    return h;
}

QPoly poly_scale(const QPoly& f, const Rational& c) {
    if (c == 0) return {};
    QPoly h(f);
    for (auto& x : h) x *= c;
    return h;
}

void poly_divmod(const QPoly& f, const QPoly& g, QPoly& q, QPoly& r) {
    int dg = degree(g);
    if (dg < 0) throw std::domain_error("polynomial division by zero");
    r = f;
    trim(r);
    int dr = degree(r);
    q.assign(dr >= dg ? dr - dg + 1 : 0, Rational(0));
    const Rational lead = g[dg];
    while ((dr = degree(r)) >= dg) {
        Rational c = r[dr] / lead;
        q[dr - dg] = c;
        for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= c * g[i];
        r.resize(dr);  // leading term cancelled
        trim(r);
    }
    trim(q);
}

QPoly poly_mod(const QPoly& f, const QPoly& g) {
    QPoly q, r;
    poly_divmod(f, g, q, r);
    return r;
}

QPoly poly_monic(const QPoly& f) {
    int d = degree(f);
    if (d < 0) return {};
    QPoly h(f.begin(), f.begin() + d + 1);
    Rational inv = Rational(1) / h[d];
    for (auto& x : h) x *= inv;
    return h;
}

QPoly poly_gcd(const QPoly& f, const QPoly& g) {
    QPoly a = f, b = g;
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = poly_monic(poly_mod(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

QPoly poly_xgcd(const QPoly& f, const QPoly& g, QPoly& s, QPoly& t) {
    QPoly r0 = f, r1 = g, s0{Rational(1)}, s1{}, t0{}, t1{Rational(1)};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        QPoly q, r;
        poly_divmod(r0, r1, q, r);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        QPoly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    int d = degree(r0);
    if (d < 0) {
        s = {};
        t = {};
        return {};
    }
    Rational inv = Rational(1) / r0[d];
    s = poly_scale(s0, inv);
    t = poly_scale(t0, inv);
    return poly_scale(r0, inv);
}

}  // namespace so4lab
