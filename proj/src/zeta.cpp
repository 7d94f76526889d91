#include "so4lab/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace so4lab {

RationalFunction2 QScaled::at(long q) const {
    if (half_exp % 2 != 0) throw std::invalid_argument("QScaled::at: odd half exponent");
    return value * RationalFunction2(p_power(q, half_exp / 2));
}

QScaled cs_whittaker(long k, const SatakeParams& s) {
    if (k < 0) return {RationalFunction2(0), 0};
    const auto& a = s.a;
    const auto& b = s.b;
    RationalFunction2 bracket = a.pow(k + 2) * b.pow(1 - k) - a.pow(1 - k) * b.pow(k + 2) -
                                a.pow(k + 1) * b.pow(-k) + a.pow(-k) * b.pow(k + 1);
    RationalFunction2 den = (a - b) * (a * b - RationalFunction2(1));
    return {bracket / den, -2 * k};
}

TruncatedSeries<RationalFunction2> unramified_zeta_series(const SatakeParams& s, int K, std::optional<long> q) {
    if (K < 1) throw std::invalid_argument("series order must be at least 1");
    TruncatedSeries<RationalFunction2> out(K);
    for (int k = 0; k <= K; ++k) {
        QScaled w = cs_whittaker(k, s);
        // |p^k|^{1/2} from omega(t(p^k)) phi^0 (1), |p^k|^{1/2} from the section,
        // |p^k|^{-2} from dh; the |p^k|^{s} and eta, chi powers make up t^k
        long weil = -k, section = -k, measure = 4 * k;
        if (q) {
            out[k] = w.at(*q) * RationalFunction2(p_power(*q, (weil + section + measure) / 2));
        } else {
            if (w.half_exp + weil + section + measure != 0)
                throw std::logic_error("unramified_zeta_series: q-powers do not cancel");
            out[k] = w.value;
        }
    }
    return out;
}

TruncatedSeries<RationalFunction2> cs_closed_form(const SatakeParams& s, int K) {
    RationalFunction2 r = s.a / s.b;
    std::vector<RationalFunction2> num{RationalFunction2(1), RationalFunction2(1)};
    std::vector<RationalFunction2> den{RationalFunction2(1), -(r + RationalFunction2(1) / r), RationalFunction2(1)};
    return expand_rational_series(num, den, K);
}

TruncatedSeries<RationalFunction2> LFactor::expand(int K) const {
    std::vector<RationalFunction2> den{RationalFunction2(1)};
    for (const auto& r : inverse_roots) {
        std::vector<RationalFunction2> next(den.size() + 1, RationalFunction2(0));
        for (size_t j = 0; j < den.size(); ++j) {
            next[j] += den[j];
            next[j + 1] -= den[j] * r;
        }
        den = std::move(next);
    }
    return expand_rational_series(std::vector<RationalFunction2>{RationalFunction2(1)}, den, K);
}

std::string LFactor::str() const {
    std::string s = "{";
    for (size_t i = 0; i < inverse_roots.size(); ++i) s += (i ? ", " : "") + inverse_roots[i].str();
    return s + "}";
}

LFactor lfactor_wedge_plus(const SatakeParams& s, const RationalFunction2& eta) {
    return {{eta, s.a / s.b * eta, s.b / s.a * eta}};
}

bool same_inverse_roots(const LFactor& x, const LFactor& y) {
    if (x.inverse_roots.size() != y.inverse_roots.size()) return false;
    std::vector<bool> used(y.inverse_roots.size(), false);
    for (const auto& r : x.inverse_roots) {
        bool found = false;
        for (size_t j = 0; j < y.inverse_roots.size() && !found; ++j)
            if (!used[j] && y.inverse_roots[j] == r) used[j] = found = true;
        if (!found) return false;
    }
    return true;
}

TruncatedSeries<RationalFunction2> lratio_series(const SatakeParams& s, int K) {
    TruncatedSeries<RationalFunction2> num(K);
    num[0] = RationalFunction2(1);
    if (K >= 2) num[2] = RationalFunction2(-1);
    return lfactor_wedge_plus(s).expand(K) * num;
}

UnramifiedFactorReport check_unramified_factors(long p, long kmax) {
    AdditiveCharacter psi_inv = AdditiveCharacter{p}.inverse();
    UnramifiedFactorReport rep;
    for (const auto& u : square_class_reps(p))
        if (valuation(u, p) == 0 && mu_psi(psi_inv, u) != Cyclotomic(1)) rep.mu_trivial_on_units = false;
    int chi = hilbert_symbol(Rational(p), Rational(-1), p);
    if (chi * chi != 1) rep.chi_squared_trivial = false;
    StepFunction phi0 = StepFunction::indicator(p, Rational(0), 0);
    Cyclotomic root_q = sqrt_prime(p);
    for (long k = 0; k <= kmax; ++k) {
        Rational pk = p_power(p, k);
        Cyclotomic mu = mu_psi(psi_inv, pk);
        if (mu * mu != Cyclotomic(Rational(k % 2 == 0 ? 1 : chi))) rep.mu_square_is_chi = false;
        Cyclotomic v = weil_op({t2(pk), 1}, phi0, psi_inv).value(Rational(1));
        if (v * root_q.pow(k) != mu) rep.weil_torus_value = false;
    }
    return rep;
}

FormalScalar FormalScalar::monomial(const Cyclotomic& c, long half_q, long x) {
    FormalScalar f;
    f.add({half_q, x}, c);
    return f;
}

void FormalScalar::add(const Key& k, const Cyclotomic& c) {
    auto it = t_.find(k);
    if (it == t_.end()) {
        if (!c.is_zero()) t_.emplace(k, c.minimized());
        return;
    }
    it->second = (it->second + c).minimized();
    if (it->second.is_zero()) t_.erase(it);
}

FormalScalar operator+(const FormalScalar& x, const FormalScalar& y) {
    FormalScalar r = x;
    for (const auto& [k, c] : y.t_) r.add(k, c);
    return r;
}

FormalScalar operator*(const FormalScalar& x, const FormalScalar& y) {
    FormalScalar r;
    for (const auto& [k1, c1] : x.t_)
        for (const auto& [k2, c2] : y.t_) r.add({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
    return r;
}

std::map<long, Cyclotomic> FormalScalar::specialize(long p) const {
    std::map<long, Cyclotomic> out;
    for (const auto& [k, c] : t_) {
        long h = k.first;
        Cyclotomic v = c * Cyclotomic(p_power(p, (h - (((h % 2) + 2) % 2)) / 2));
        if (h % 2 != 0) v = v * sqrt_prime(p);
        Cyclotomic& slot = out[k.second];
        slot = (slot + v).minimized();
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Cyclotomic FormalScalar::constant_at(long p) const {
    auto s = specialize(p);
    if (s.empty()) return Cyclotomic(0);
    if (s.size() != 1 || s.begin()->first != 0) throw std::domain_error("FormalScalar: value depends on X");
    return s.begin()->second;
}

std::string FormalScalar::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (k.first != 0) {
            os << "*q^";
            if (k.first % 2 == 0) os << k.first / 2;
            else os << "(" << k.first << "/2)";
        }
        if (k.second != 0) os << "*X^" << k.second;
    }
    return os.str();
}

namespace {

long primitive_root(long p) {
    long phi = p - 1;
    std::vector<long> qs;
    for (long d = 2, n = phi; n > 1; ++d)
        if (n % d == 0) {
            qs.push_back(d);
            while (n % d == 0) n /= d;
        }
    for (long g = 2;; ++g) {
        bool ok = true;
        for (long q : qs) {
            Integer r;
            mpz_powm_ui(r.get_mpz_t(), Integer(g).get_mpz_t(), phi / q, Integer(p).get_mpz_t());
            if (r == 1) ok = false;
        }
        // g is also primitive mod p^c unless g^{p-1} = 1 mod p^2
        if (ok) {
            Integer r;
            mpz_powm_ui(r.get_mpz_t(), Integer(g).get_mpz_t(), phi, Integer(p * p).get_mpz_t());
            if (r != 1) return g;
        }
    }
}

}  // namespace

Cyclotomic EtaCharacter::on_unit(const Rational& u) const {
    if (u == 0 || valuation(u, p) != 0) throw std::invalid_argument("eta: argument is not a unit");
    if (conductor == 0 || twist == 0) return Cyclotomic(1);
    if (p == 2) throw UnsupportedPrime("eta: ramified characters need odd p");
    Integer mod = ipow(p, conductor);
    unsigned long order = Integer(mod / p * (p - 1)).get_ui();
    Integer r = unit_residue(u, p, conductor);
    long g = primitive_root(p);
    Integer x = 1;
    for (unsigned long k = 0; k < order; ++k, x = x * g % mod)
        if (x == r) return Cyclotomic::zeta(order, static_cast<long long>(k) * twist).minimized();
    throw std::logic_error("eta: discrete log not found");
}

FormalScalar section_eval(long i, const EtaCharacter& eta, const MetaElement& g, SectionConvention conv) {
    long p = eta.p;
    const Mat2& m = g.g;
    if (m(1, 1) == 0) return {};
    Rational z = m(1, 0) / m(1, 1);
    if (z != 0 && valuation(z, p) < 3 * i) return {};
    Rational a = 1 / m(1, 1);
    Mat2 b{{a, m(0, 1)}, {Rational(0), m(1, 1)}};
    int eps = g.zeta;
    if (conv == SectionConvention::cocycle_corrected) eps *= cocycle(b, nbar2(z), p);
    long v = valuation(a, p);
    Rational unit = a / p_power(p, v);
    AdditiveCharacter psi_inv = AdditiveCharacter{p}.inverse();
    Cyclotomic c = Cyclotomic(eps) * mu_psi(psi_inv, a) * eta.on_unit(unit);
    // eta(a) |a|^{s+1/2} = eta(unit) X^v q^{-v/2}
    return FormalScalar::monomial(c, -v, v);
}

long section_threshold(long window_radius, const EtaCharacter& eta) {
    long need = std::max(1L, eta.twist == 0 ? 0L : eta.conductor) + window_radius;
    long i = 1;
    while (3 * i < need) ++i;
    return i;
}

FormalScalar intertwined_section_value(long i, const EtaCharacter& eta, const Rational& x0, long window_radius,
                                       bool check_threshold) {
    long p = eta.p;
    if (x0 != 0 && valuation(x0, p) < -window_radius)
        throw std::invalid_argument("intertwined_section_value: x0 outside the window");
    long need = section_threshold(window_radius, eta);
    if (check_threshold && i < need)
        throw BelowThreshold("intertwined_section_value: i = " + std::to_string(i) + " is below the threshold " +
                                 std::to_string(need),
                             need);
    MetaElement w{w2(), 1}, n0{n2(x0), 1};
    Integrand f = [&](const Rational& y) {
        MetaElement g = meta_mul(meta_mul(meta_mul(w, {n2(y), 1}, p), w, p), n0, p);
        return section_eval(i, eta, g).constant_at(p);
    };
    // support is p^{3i} Z_p above the threshold; the sum runs over a larger ball
    Cyclotomic v = coset_sum(CosetRegion::ball(p, Rational(0), 3 * i - 2), 3 * i, f);
    return FormalScalar::monomial(v, 0, 0);
}

ModelHoweWhittaker::ModelHoweWhittaker(const HoweLevel& L, int omega_minus_one) : L_(L), omega_(omega_minus_one) {
    if (L.m < 1) throw DomainError("model Whittaker: m must be positive");
    if (L.p == 2) throw UnsupportedPrime("model Whittaker: p must be odd");
    if (omega_ != 1 && omega_ != -1) throw std::invalid_argument("model Whittaker: omega(-1) must be +-1");
}

Cyclotomic ModelHoweWhittaker::from_factors(int z, const QMat& u, const QMat& h) const {
    Cyclotomic w = howe_character(L_, u, HoweCharacter::psi_U) * howe_character(L_, h, HoweCharacter::psi_m);
    return z == 1 ? w : w * Cyclotomic(omega_);
}

std::optional<Cyclotomic> ModelHoweWhittaker::operator()(const QMat& g) const {
    QMat d = d_m(L_);
    QMat dinv = d.inverse();
    for (int z : {1, -1}) {
        QMat v = dinv * (Rational(z) * g) * d;
        if (v(3, 3) == 0) continue;
        // u' = u(x', y') clears entries (2,3) and (1,3) of u' v
        Rational x = v(2, 3) / v(3, 3), y = v(1, 3) / v(3, 3);
        QMat up = unipotent(x, y);
        QMat k = up * v;
        if (!in_K(L_, k)) continue;
        QMat u = d * up.inverse() * dinv;
        QMat h = d * k * dinv;
        return from_factors(z, u, h);
    }
    return std::nullopt;
}

long ModelHoweWhittaker::certify(long collisions, std::uint64_t seed) const {
    std::mt19937_64 gen(seed);
    for (long n = 0; n < collisions; ++n) {
        int z = gen() % 2 ? 1 : -1;
        QMat u = unipotent(random_with_valuation(gen, L_.p, -L_.m - 3, 2), random_with_valuation(gen, L_.p, -L_.m - 3, 2));
        QMat h = random_H(gen, L_);
        QMat v = random_U_m(gen, L_);
        Cyclotomic w1 = from_factors(z, u, h);
        Cyclotomic w2v = from_factors(z, u * v, v.inverse() * h);
        auto w3 = (*this)(Rational(z) * u * h);
        if (w1 != w2v || !w3 || *w3 != w1)
            throw ModelInconsistency("model Whittaker: collision " + std::to_string(n) + " disagrees");
    }
    return collisions;
}

FormalScalar ramified_zeta_value(long m, long i, long p, int omega_minus_one) {
    if (m < 1 || i < m) throw DomainError("ramified_zeta_value: need i >= m >= 1");
    if (p == 2 || !is_prime(p)) throw DomainError("ramified_zeta_value: p must be an odd prime");
    ModelHoweWhittaker W({p, m}, omega_minus_one);
    EtaCharacter eta{p};
    AdditiveCharacter psi_inv = AdditiveCharacter{p}.inverse();
    StepFunction phi = StepFunction::indicator(p, Rational(1), m);

    // integrand at t(a) nbar(x), |a|^{-2} included
    auto integrand = [&](const Rational& a, const Rational& x) -> Cyclotomic {
        MetaElement g = meta_mul({t2(a), 1}, {nbar2(x), 1}, p);
        FormalScalar f = section_eval(i, eta, g);
        if (f.is_zero()) return Cyclotomic(0);
        Cyclotomic weil = weil_op(g, phi, psi_inv).value(Rational(1));
        if (weil.is_zero()) return Cyclotomic(0);
        auto w = W(levi_m(g.g));
        if (!w) throw ModelInconsistency("ramified_zeta_value: integrand left the model's support");
        return *w * weil * f.constant_at(p) * Cyclotomic(p_power(p, 2 * valuation(a, p)));
    };

    // outside the units the Weil factor vanishes; spot-check a few shells
    std::mt19937_64 gen(17);
    for (long v : {-2L, -1L, 1L, 2L}) {
        Rational a = random_unit(gen, p) * p_power(p, v);
        if (!integrand(a, Rational(0)).is_zero()) throw std::logic_error("ramified_zeta_value: nonzero off the units");
    }

    std::vector<Coset> units;
    Integer pm = ipow(p, m);
    for (Integer u = 1; u < pm; ++u)
        if (u % p != 0) units.push_back({Rational(u), m});
    CosetRegion a_region(p, units);
    CosetRegion x_region = CosetRegion::ball(p, Rational(0), 3 * i - 1);
    Cyclotomic total = coset_sum(a_region, m, [&](const Rational& a) {
        return coset_sum(x_region, 3 * i, [&](const Rational& x) { return integrand(a, x); });
    });
    return FormalScalar::monomial(total, 0, 0);
}

bool chi_collapse_holds(long p, long m, int samples, std::uint64_t seed) {
    AdditiveCharacter psi_inv = AdditiveCharacter{p}.inverse();
    auto ok = [&](const Rational& a) {
        Cyclotomic mu = mu_psi(psi_inv, a);
        int aa = hilbert_symbol(a, a, p);
        return mu * mu == Cyclotomic(aa) && aa == hilbert_symbol(a, Rational(-1), p);
    };
    for (const auto& a : square_class_reps(p))
        if (!ok(a)) return false;
    std::mt19937_64 gen(seed);
    for (int k = 0; k < samples; ++k) {
        Rational a = 1 + random_with_valuation(gen, p, m, m + 3);
        if (!ok(a) || hilbert_symbol(a, Rational(-1), p) != 1) return false;
    }
    return true;
}

}  // namespace so4lab
