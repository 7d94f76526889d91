#pragma once
// Local zeta data for the SO_4 x Mp_2 integral: unramified Whittaker values,
// L-factors, the sections f_s^i, their intertwined values, and the ramified
// integral against a model partial Bessel function.
#include "so4lab/metaplectic.hpp"
#include "so4lab/ratfun.hpp"
#include "so4lab/series.hpp"
#include "so4lab/so4.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace so4lab {

// Satake parameter diag(a, b, 1/b, 1/a); symbolic by default
struct SatakeParams {
    RationalFunction2 a = RationalFunction2::a();
    RationalFunction2 b = RationalFunction2::b();
    static SatakeParams symbolic() { return {}; }
    static SatakeParams numeric(const Rational& a, const Rational& b) { return {a, b}; }
};

// value * q^{half_exp / 2}, q left as a symbol
struct QScaled {
    RationalFunction2 value;
    long half_exp = 0;
    RationalFunction2 at(long q) const;  // half_exp must be even
};

// W^0(a_k) for the unramified Whittaker function with W^0(1) = 1
QScaled cs_whittaker(long k, const SatakeParams& s);

// sum_k Psi-integrand at a_k, as a series in t = chi(p) eta(p) q^{-s}.
// The q-powers of the Whittaker value, the Weil factor, the section and the
// measure are tracked separately and must cancel; with q given they are
// multiplied out numerically instead.
TruncatedSeries<RationalFunction2> unramified_zeta_series(const SatakeParams& s, int K,
                                                          std::optional<long> q = std::nullopt);
// (1 + t) / ((1 - a/b t)(1 - b/a t))
TruncatedSeries<RationalFunction2> cs_closed_form(const SatakeParams& s, int K);

struct LFactor {
    std::vector<RationalFunction2> inverse_roots;
    TruncatedSeries<RationalFunction2> expand(int K) const;
    std::string str() const;
};
LFactor lfactor_wedge_plus(const SatakeParams& s, const RationalFunction2& eta = RationalFunction2(1));
bool same_inverse_roots(const LFactor& x, const LFactor& y);
// L(s, wedge_+ x chi eta) / L(2s, eta^2) in the variable t; eta(p)^2 q^{-2s} = t^2
// because chi(p)^2 = 1
TruncatedSeries<RationalFunction2> lratio_series(const SatakeParams& s, int K);

// the torus factors used in the unramified computation, checked against the
// metaplectic module for one prime
struct UnramifiedFactorReport {
    bool mu_trivial_on_units = true;   // mu_{psi^{-1}}(u) = 1
    bool mu_square_is_chi = true;      // mu_{psi^{-1}}(p^k)^2 = (p, -1)^k
    bool weil_torus_value = true;      // omega(t(p^k)) phi^0 (1) = q^{-k/2} mu(p^k)
    bool chi_squared_trivial = true;   // chi(p)^2 = 1
    bool all() const { return mu_trivial_on_units && mu_square_is_chi && weil_torus_value && chi_squared_trivial; }
};
UnramifiedFactorReport check_unramified_factors(long p, long kmax);

// sum of terms coeff * q^{half_q / 2} * X^{x}, with X standing for eta(p) q^{-s}
class FormalScalar {
public:
    using Key = std::pair<long, long>;  // (half exponent of q, exponent of X)
    FormalScalar() = default;
    static FormalScalar monomial(const Cyclotomic& c, long half_q, long x);
    static FormalScalar q_power(long e) { return monomial(Cyclotomic(1), 2 * e, 0); }

    const std::map<Key, Cyclotomic>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    // coefficient of X^x after putting q = p
    std::map<long, Cyclotomic> specialize(long p) const;
    // the X-free value at q = p; throws if X appears
    Cyclotomic constant_at(long p) const;

    friend FormalScalar operator+(const FormalScalar& x, const FormalScalar& y);
    friend FormalScalar operator*(const FormalScalar& x, const FormalScalar& y);
    friend bool operator==(const FormalScalar& x, const FormalScalar& y) { return x.t_ == y.t_; }
    std::string str() const;

private:
    void add(const Key& k, const Cyclotomic& c);
    std::map<Key, Cyclotomic> t_;
};

// character of Q_p^x with eta(p) = 1 (the uniformizer value lives in X);
// on units eta(g^k) = zeta_{phi(p^c)}^{twist k}, g the least primitive root mod p^c
struct EtaCharacter {
    long p;
    long conductor = 0;
    long twist = 0;
    Cyclotomic on_unit(const Rational& u) const;
    Cyclotomic at_minus_one() const { return on_unit(Rational(-1)); }
};

enum class SectionConvention {
    cocycle_corrected,  // f((b,1)(nbar,1)(1,e)) = e mu(a) eta_{s+1/2}(a)
    literal             // f((g,e)) = e mu(a) eta_{s+1/2}(a) with g = b nbar as matrices
};

// f_s^i in I(s, eta, psi^{-1}), psi unramified of conductor 0 at eta.p
FormalScalar section_eval(long i, const EtaCharacter& eta, const MetaElement& g,
                          SectionConvention conv = SectionConvention::cocycle_corrected);

struct BelowThreshold : std::domain_error {
    BelowThreshold(const std::string& what, long minimal) : std::domain_error(what), minimal_i(minimal) {}
    long minimal_i;
};
// smallest i with 3i - r >= max(1, cond eta), for the window n(p^{-r} Z_p)
long section_threshold(long window_radius, const EtaCharacter& eta);
// M_s(f_s^i)(w2 n(x0)) = int f_s^i(w2 n(y) w2 n(x0)) dy as an exact Haar sum;
// with check_threshold off the sum is attempted anyway (it can fail to be
// locally constant at level 3i, which raises RefinementError)
FormalScalar intertwined_section_value(long i, const EtaCharacter& eta, const Rational& x0, long window_radius,
                                       bool check_threshold = true);

struct ModelInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// W with W(z u h) = omega(z) psi_U(u) psi_m(h) on Z U H_m, undefined elsewhere
class ModelHoweWhittaker {
public:
    ModelHoweWhittaker(const HoweLevel& L, int omega_minus_one = 1);
    const HoweLevel& level() const { return L_; }
    // nullopt outside the declared support
    std::optional<Cyclotomic> operator()(const QMat& g) const;
    // value from an explicit factorization
    Cyclotomic from_factors(int z, const QMat& u, const QMat& h) const;
    // collisions z u h = z (u v)(v^{-1} h), v in U_m; throws ModelInconsistency
    long certify(long collisions, std::uint64_t seed) const;

private:
    HoweLevel L_;
    int omega_;
};

// Psi(W_m, phi^m, f_s^i) for unramified eta, as a Haar sum over the dense cell
FormalScalar ramified_zeta_value(long m, long i, long p, int omega_minus_one = 1);

// gamma_{psi^{-1}}(a)^2 = (a, a) = (a, -1) over square classes and 1 + p^m
bool chi_collapse_holds(long p, long m, int samples, std::uint64_t seed);

}  // namespace so4lab
