#include "so4lab/metaplectic.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace so4lab {

Mat2 n2(const Rational& b) { return Mat2{{1, b}, {0, 1}}; }
Mat2 nbar2(const Rational& x) { return Mat2{{1, 0}, {x, 1}}; }
Mat2 t2(const Rational& a) {
    if (a == 0) throw std::invalid_argument("t(a) needs a != 0");
    return Mat2{{a, 0}, {0, 1 / a}};
}
Mat2 w2() { return Mat2{{0, 1}, {-1, 0}}; }

namespace {
void require_sl2(const Mat2& g) {
    if (g.rows() != 2 || g.cols() != 2 || g.det() != 1) throw std::invalid_argument("expected an element of SL_2");
}
void require_odd(long p) {
    require_prime(p);
    if (p == 2) throw UnsupportedPrime("Weil index and Weil representation need an odd prime");
}
long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
}  // namespace

Rational kubota_x(const Mat2& g) {
    require_sl2(g);
    return g(1, 0) != 0 ? g(1, 0) : g(1, 1);
}

int cocycle(const Mat2& g1, const Mat2& g2, long p) {
    Rational x1 = kubota_x(g1), x2 = kubota_x(g2), x12 = kubota_x(g1 * g2);
    return hilbert_symbol(x1, x2, p) * hilbert_symbol(Rational(-x1 * x2), x12, p);
}

MetaElement meta_mul(const MetaElement& a, const MetaElement& b, long p) {
    return {a.g * b.g, a.zeta * b.zeta * cocycle(a.g, b.g, p)};
}

// ---- Weil index

namespace {

// sum of psi(a x^2) over x in p^{-K} Z_p / p^M Z_p with M the coarsest level on
// which the integrand is constant; a has v(a) + conductor in {0, 1}
Cyclotomic oscillatory_sum(const AdditiveCharacter& psi, const Rational& a, long K) {
    long p = psi.p;
    long e = valuation(a, p) + psi.conductor;
    // psi(a x^2) = exp(2 pi i s p^e (u / w) x^2) with u / w a unit
    Rational unit = a * p_power(p, -valuation(a, p)) * psi.sign;
    long dexp = 2 * K - e;
    if (dexp <= 0) return Cyclotomic(1);
    Integer D = ipow(p, dexp);
    if (!D.fits_ulong_p() || D > 2000000) throw LevelError("Weil index level too large");
    Integer c = unit.get_num(), w = unit.get_den(), winv;
    mpz_invert(winv.get_mpz_t(), w.get_mpz_t(), D.get_mpz_t());
    c = c * winv;
    c %= D;
    if (c < 0) c += D;
    unsigned long n = D.get_ui();
    unsigned long cc = c.get_ui();
    std::vector<long long> counts(n, 0);
    for (unsigned long j = 0; j < n; ++j) {
        unsigned __int128 r = static_cast<unsigned __int128>(j) * j % n * cc % n;
        ++counts[static_cast<unsigned long>(r)];
    }
    return Cyclotomic::from_root_counts(n, counts).minimized();
}

// S / |S| as an exact 8th root of unity
Cyclotomic unit_phase(const Cyclotomic& S) {
    if (S.is_zero()) throw LevelError("oscillatory sum vanished");
    Rational r = (S * S.conj()).to_rational();
    for (int k = 0; k < 8; ++k) {
        Cyclotomic eps = Cyclotomic::zeta(8, k);
        Cyclotomic t = S * eps.conj();
        Cyclotomic t2 = t * t;
        // the sign of the real number t is the only non-exact decision
        if (t2.is_rational() && t2.to_rational() == r && t.approx().real() > 0) return eps.minimized();
    }
    throw LevelError("oscillatory sum is not a root of unity times a positive real");
}

}  // namespace

Cyclotomic sqrt_prime(long p) {
    require_odd(p);
    static std::mutex mu;
    static std::map<long, Cyclotomic> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    // the quadratic Gauss sum is sqrt(p) times a 4th root of unity
    std::vector<long long> counts(p, 0);
    for (long y = 0; y < p; ++y) ++counts[y * y % p];
    Cyclotomic S = Cyclotomic::from_root_counts(p, counts);
    Cyclotomic r = (S * unit_phase(S).conj()).minimized();
    return cache.emplace(p, r).first->second;
}

WeilIndexValue weil_index(const AdditiveCharacter& psi, const Rational& a, long L) {
    require_odd(psi.p);
    if (a == 0) throw std::invalid_argument("Weil index of the trivial character");
    long p = psi.p;
    // x -> p^k x rescales the integral by a positive constant, so a and a p^{2k} agree
    long e = valuation(a, p) + psi.conductor;
    Rational ar = a * p_power(p, -2 * floor_div(e, 2));
    if (L < 0) L = 1;
    Cyclotomic g1 = unit_phase(oscillatory_sum(psi, ar, L));
    Cyclotomic g2 = unit_phase(oscillatory_sum(psi, ar, L + 1));
    if (g1 != g2) throw LevelError("Weil index not stable at level " + std::to_string(L));
    return {g1, L};
}

namespace {
std::mutex gamma_mu;
std::map<std::tuple<long, int, int>, Cyclotomic> gamma_cache;

Cyclotomic gamma_cached(const AdditiveCharacter& psi, const Rational& a) {
    require_odd(psi.p);
    // psi^s_a = psi_{s a}, and only the square class matters
    auto key = std::make_tuple(psi.p, psi.conductor, square_class_index(Rational(a * psi.sign), psi.p));
    {
        std::lock_guard<std::mutex> lock(gamma_mu);
        auto it = gamma_cache.find(key);
        if (it != gamma_cache.end()) return it->second;
    }
    Cyclotomic g = weil_index(psi, a).value;
    std::lock_guard<std::mutex> lock(gamma_mu);
    gamma_cache.emplace(key, g);
    return g;
}
}  // namespace

Cyclotomic mu_psi(const AdditiveCharacter& psi, const Rational& a) {
    return (gamma_cached(psi, Rational(1)) / gamma_cached(psi, a)).minimized();
}

// ---- step functions

StepFunction StepFunction::indicator(long p, const Rational& center, long level) {
    StepFunction f(p, level);
    f.add(center, Cyclotomic(1));
    return f;
}

Cyclotomic StepFunction::coefficient(const Rational& x) const {
    auto it = terms_.find(coset_representative(x, p_, level_));
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

Cyclotomic StepFunction::value(const Rational& x) const {
    int h = half_exp_ % 2;
    if (h < 0) h += 2;
    Cyclotomic c = coefficient(x) * Cyclotomic(p_power(p_, (half_exp_ - h) / 2));
    return h ? c * sqrt_prime(p_) : c;
}

void StepFunction::add(const Rational& x, const Cyclotomic& c) {
    Rational r = coset_representative(x, p_, level_);
    auto it = terms_.find(r);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(r, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

StepFunction StepFunction::refined(long L) const {
    if (L < level_) throw std::invalid_argument("refined: level must not decrease");
    StepFunction g(p_, L);
    g.half_exp_ = half_exp_;
    Integer k = ipow(p_, L - level_);
    Rational step = p_power(p_, level_);
    for (const auto& [r, c] : terms_)
        for (Integer j = 0; j < k; ++j) g.terms_.emplace(coset_representative(r + Rational(j) * step, p_, L), c);
    return g;
}

StepFunction StepFunction::canonical() const {
    StepFunction g(p_, level_);
    int h = half_exp_ % 2;
    if (h < 0) h += 2;
    Cyclotomic scale(p_power(p_, (half_exp_ - h) / 2));
    if (h == 1) scale = scale * sqrt_prime(p_);
    g.half_exp_ = 0;
    for (const auto& [r, c] : terms_)
        if (!c.is_zero()) g.terms_.emplace(r, c * scale);
    if (g.terms_.empty()) {
        g.half_exp_ = 0;
        return g;
    }
    // coarsen while every parent coset is uniformly covered
    for (;;) {
        long L = g.level_ - 1;
        std::map<Rational, std::vector<Cyclotomic>> parents;
        for (const auto& [r, c] : g.terms_) parents[coset_representative(r, p_, L)].push_back(c);
        bool ok = true;
        for (const auto& [r, cs] : parents) {
            if (static_cast<long>(cs.size()) != p_) { ok = false; break; }
            for (const auto& c : cs)
                if (c != cs.front()) { ok = false; break; }
            if (!ok) break;
        }
        if (!ok) break;
        StepFunction coarse(p_, L);
        coarse.half_exp_ = g.half_exp_;
        for (const auto& [r, cs] : parents) coarse.terms_.emplace(r, cs.front());
        g = coarse;
    }
    return g;
}

long StepFunction::min_valuation() const {
    long v = level_;
    for (const auto& [r, c] : terms_)
        if (r != 0) v = std::min(v, valuation(r, p_));
    return v;
}

StepFunction StepFunction::scaled(const Cyclotomic& s) const {
    StepFunction g(p_, level_);
    g.half_exp_ = half_exp_;
    if (s.is_zero()) return g;
    for (const auto& [r, c] : terms_) g.terms_.emplace(r, c * s);
    return g;
}

StepFunction StepFunction::with_half_exp(int h) const {
    StepFunction g = *this;
    g.half_exp_ = h;
    return g;
}

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
    if (f.p_ != g.p_) throw std::invalid_argument("step functions over different primes");
    StepFunction a = f.canonical(), b = g.canonical();
    if (a.terms_.empty()) return b;
    if (b.terms_.empty()) return a;
    long L = std::max(a.level_, b.level_);
    StepFunction out = a.refined(L);
    for (const auto& [r, c] : b.refined(L).terms_) out.add(r, c);
    return out.canonical();
}

bool operator==(const StepFunction& f, const StepFunction& g) {
    if (f.p_ != g.p_) return false;
    StepFunction a = f.canonical(), b = g.canonical();
    if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
    if (a.half_exp_ != b.half_exp_ || a.level_ != b.level_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [r, c] : a.terms_) {
        if (r != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

std::string StepFunction::str() const {
    std::ostringstream os;
    os << "p=" << p_ << " level=" << level_ << " sqrtp^" << half_exp_ << " {";
    bool first = true;
    for (const auto& [r, c] : terms_) {
        os << (first ? "" : ", ") << to_string(r) << ": " << c.str();
        first = false;
    }
    os << "}";
    return os.str();
}

// ---- Weil representation

StepFunction fourier(const StepFunction& f, const AdditiveCharacter& psi) {
    require_odd(psi.p);
    if (psi.conductor != 0) throw std::invalid_argument("fourier: only unramified characters are supported");
    if (psi.p != f.prime()) throw std::invalid_argument("fourier: prime mismatch");
    long p = psi.p, L = f.level();
    if (f.terms().empty()) return f;
    // transform of 1_{y + p^L Z_p} is p^{-L} psi(2xy) 1_{p^{-L} Z_p}(x)
    long M = std::max(-L, -f.min_valuation());
    StepFunction out(p, M);
    out = out.with_half_exp(f.half_exp());
    // accumulate in the group ring of Z/N, where every psi(2xy) is a shift
    unsigned long N = ipow(p, std::max(0L, L - f.min_valuation())).get_ui();
    for (const auto& [y, c] : f.terms()) N = std::lcm(N, c.order());
    struct Term {
        Rational y;
        std::vector<std::pair<unsigned long, Rational>> coeffs;
    };
    std::vector<Term> terms;
    for (const auto& [y, c] : f.terms()) {
        Term t{y, {}};
        Cyclotomic e = c.embed(N);
        const auto& v = e.coeffs();
        for (size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) t.coeffs.emplace_back(k, v[k]);
        terms.push_back(std::move(t));
    }
    Integer count = ipow(p, M + L);
    Rational unit_step = p_power(p, -L);
    Cyclotomic vol(p_power(p, -L));
    std::vector<Rational> acc(N);
    for (Integer k = 0; k < count; ++k) {
        Rational x = Rational(k) * unit_step;
        for (auto& a : acc) a = 0;
        bool any = false;
        for (const auto& t : terms) {
            unsigned long e = char_exponent(psi, Rational(2 * x * t.y), N);
            for (const auto& [j, a] : t.coeffs) acc[(j + e) % N] += a;
            any = true;
        }
        if (!any) continue;
        Cyclotomic v = Cyclotomic::from_coeffs(N, acc);
        if (!v.is_zero()) out.add(x, v * vol);
    }
    return out;
}

StepFunction weil_generator(const WeilStep& s, const StepFunction& f, const AdditiveCharacter& psi) {
    require_odd(psi.p);
    if (psi.conductor != 0) throw std::invalid_argument("Weil representation: only unramified characters are supported");
    long p = psi.p;
    switch (s.gen) {
        case WeilGenerator::zeta:
            if (s.param != 1 && s.param != -1) throw std::invalid_argument("zeta must be +-1");
            return f.scaled(Cyclotomic(s.param));
        case WeilGenerator::n: {
            // psi(b x^2) is constant on cosets of p^L' inside the support
            const Rational& b = s.param;
            if (b == 0 || f.terms().empty()) return f;
            long vb = valuation(b, p);
            long L = std::max({f.level(), -vb - f.min_valuation(), floor_div(-vb + 1, 2)});
            StepFunction g = f.refined(L), out(p, L);
            out = out.with_half_exp(g.half_exp());
            for (const auto& [x, c] : g.terms()) out.add(x, c * psi(b * x * x));
            return out;
        }
        case WeilGenerator::t: {
            const Rational& a = s.param;
            if (a == 0) throw std::invalid_argument("t(a) needs a != 0");
            long va = valuation(a, p);
            StepFunction out(p, f.level() - va);
            out = out.with_half_exp(f.half_exp() - static_cast<int>(va));
            Cyclotomic mu = mu_psi(psi, a);
            for (const auto& [x, c] : f.terms()) out.add(x / a, c * mu);
            return out;
        }
        case WeilGenerator::w2:
            return fourier(f, psi).scaled(gamma_cached(psi, Rational(1)));
        case WeilGenerator::w2_inverse: {
            // (w2,1)(w2^{-1},1) = (1, c(w2, w2^{-1})) and omega(w2)^2 f = gamma^2 f(-x)
            StepFunction h = fourier(f, psi), out(p, h.level());
            out = out.with_half_exp(h.half_exp());
            for (const auto& [x, c] : h.terms()) out.add(-x, c);
            Cyclotomic k(Rational(cocycle(w2(), w2().inverse(), p)));
            return out.scaled(k / gamma_cached(psi, Rational(1)));
        }
    }
    throw std::logic_error("unknown generator");
}

std::vector<WeilStep> weil_factorization(const Mat2& g) {
    require_sl2(g);
    const Rational &a = g(0, 0), &b = g(0, 1), &c = g(1, 0), &d = g(1, 1);
    using G = WeilGenerator;
    if (c == 0) return {{G::t, a}, {G::n, b / a}};
    if (d != 0)  // nbar(c/d) = w2^{-1} n(-c/d) w2
        return {{G::n, b / d}, {G::t, 1 / d}, {G::w2_inverse, 0}, {G::n, -c / d}, {G::w2, 0}};
    return {{G::n, a / c}, {G::t, -1 / c}, {G::w2, 0}, {G::n, d / c}};
}

namespace {
Mat2 step_matrix(const WeilStep& s) {
    switch (s.gen) {
        case WeilGenerator::w2: return w2();
        case WeilGenerator::w2_inverse: return w2().inverse();
        case WeilGenerator::n: return n2(s.param);
        case WeilGenerator::t: return t2(s.param);
        case WeilGenerator::zeta: return Mat2::identity(2);
    }
    throw std::logic_error("unknown generator");
}
}  // namespace

StepFunction weil_op(const MetaElement& g, const StepFunction& f, const AdditiveCharacter& psi) {
    long p = psi.p;
    auto steps = weil_factorization(g.g);
    // (g_1,1)...(g_k,1) = (g, C)
    MetaElement acc{Mat2::identity(2), 1};
    for (const auto& s : steps) acc = meta_mul(acc, {step_matrix(s), 1}, p);
    if (acc.g != g.g) throw std::logic_error("weil_factorization does not multiply back");
    StepFunction out = f;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) out = weil_generator(*it, out, psi);
    return out.scaled(Cyclotomic(g.zeta * acc.zeta)).canonical();
}

IndicatorIdentityReport check_indicator_identities(long p, long m, int samples, std::uint64_t seed) {
    require_odd(p);
    AdditiveCharacter psi_inv = AdditiveCharacter{p}.inverse();
    StepFunction phi = StepFunction::indicator(p, Rational(1), m);
    std::mt19937_64 gen(seed);
    IndicatorIdentityReport rep;
    for (int k = 0; k < samples; ++k, ++rep.samples) {
        Rational b = random_with_valuation(gen, p, -m, -m + 2);
        if (weil_op({n2(b), 1}, phi, psi_inv) != phi.scaled(psi_inv(b))) rep.unipotent_upper = false;
        Rational x = random_with_valuation(gen, p, 3 * m, 3 * m + 2);
        if (weil_op({nbar2(x), 1}, phi, psi_inv) != phi) rep.unipotent_lower = false;
    }
    StepFunction wphi = weil_op({w2(), 1}, phi, psi_inv);
    Cyclotomic gam = gamma_cached(psi_inv, Rational(1));
    Cyclotomic qm(p_power(p, -m));
    // every coset of p^{-m-2} Z_p / p^m Z_p is a sample point
    long lo = -m - 2;
    Integer count = ipow(p, m - lo);
    for (Integer k = 0; k < count; ++k) {
        Rational a = Rational(k) * p_power(p, lo);
        bool inside = a == 0 || valuation(a, p) >= -m;
        Cyclotomic v = wphi.value(a);
        if (inside && v != gam * psi_inv(2 * a) * qm) rep.weyl = false;
        if (!inside && !v.is_zero()) rep.weyl_vanishes_outside = false;
    }
    return rep;
}

}  // namespace so4lab
