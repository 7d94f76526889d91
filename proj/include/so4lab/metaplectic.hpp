#pragma once
// The metaplectic double cover of SL_2(Q_p), the Weil index, and the Weil
// representation acting on locally constant compactly supported functions.
#include "so4lab/cyclotomic.hpp"
#include "so4lab/matrix.hpp"
#include "so4lab/padic.hpp"

#include <map>
#include <string>
#include <vector>

namespace so4lab {

using Mat2 = ExactMatrix<Rational>;

Mat2 n2(const Rational& b);     // [[1, b], [0, 1]]
Mat2 nbar2(const Rational& x);  // [[1, 0], [x, 1]]
Mat2 t2(const Rational& a);     // diag(a, 1/a)
Mat2 w2();                      // [[0, 1], [-1, 0]]

// c if c != 0, else d
Rational kubota_x(const Mat2& g);
int cocycle(const Mat2& g1, const Mat2& g2, long p);

struct MetaElement {
    Mat2 g;
    int zeta = 1;
    friend bool operator==(const MetaElement& a, const MetaElement& b) { return a.g == b.g && a.zeta == b.zeta; }
};
MetaElement meta_mul(const MetaElement& a, const MetaElement& b, long p);

struct UnsupportedPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LevelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeilIndexValue {
    Cyclotomic value;
    long level;  // summation range p^{-level} Z_p
};

// gamma(psi_a): the normalized integral of psi(a x^2) over p^{-L} Z_p,
// checked against level L + 1. L < 0 picks a default.
WeilIndexValue weil_index(const AdditiveCharacter& psi, const Rational& a, long L = -1);
// the positive square root of an odd prime, inside Q(zeta_4p)
Cyclotomic sqrt_prime(long p);

// gamma(psi) / gamma(psi_a)
Cyclotomic mu_psi(const AdditiveCharacter& psi, const Rational& a);

// A function on Q_p constant on cosets of p^level Z_p with finite support,
// times p^{half_exp / 2}.
class StepFunction {
public:
    StepFunction(long p, long level) : p_(p), level_(level) { require_prime(p); }
    static StepFunction indicator(long p, const Rational& center, long level);

    long prime() const { return p_; }
    long level() const { return level_; }
    int half_exp() const { return half_exp_; }
    const std::map<Rational, Cyclotomic>& terms() const { return terms_; }

    // coefficient at x, without the p^{half_exp/2} factor
    Cyclotomic coefficient(const Rational& x) const;
    // full value
    Cyclotomic value(const Rational& x) const;
    void add(const Rational& x, const Cyclotomic& c);

    StepFunction refined(long L) const;
    // coarsest level, no zero terms, p^{half_exp/2} folded into the coefficients
    StepFunction canonical() const;
    // smallest valuation over the support (level if the support meets p^level Z_p)
    long min_valuation() const;

    StepFunction scaled(const Cyclotomic& c) const;
    StepFunction with_half_exp(int h) const;
    friend StepFunction operator+(const StepFunction& f, const StepFunction& g);
    friend bool operator==(const StepFunction& f, const StepFunction& g);
    friend bool operator!=(const StepFunction& f, const StepFunction& g) { return !(f == g); }

    std::string str() const;

private:
    long p_;
    long level_;
    int half_exp_ = 0;
    std::map<Rational, Cyclotomic> terms_;
};

// f^(x) = int f(y) psi(2xy) dy, self-dual measure (psi unramified, p odd)
StepFunction fourier(const StepFunction& f, const AdditiveCharacter& psi);

enum class WeilGenerator { w2, w2_inverse, n, t, zeta };
struct WeilStep {
    WeilGenerator gen;
    Rational param;  // b for n, a for t, zeta for zeta
};

// action of (generator, 1); zeta acts as multiplication
StepFunction weil_generator(const WeilStep& s, const StepFunction& f, const AdditiveCharacter& psi);

// factorization g = g_1 ... g_k used for a general element
std::vector<WeilStep> weil_factorization(const Mat2& g);
StepFunction weil_op(const MetaElement& g, const StepFunction& f, const AdditiveCharacter& psi);

// the three identities for the indicator of 1 + p^m under omega_{psi^{-1}}
struct IndicatorIdentityReport {
    bool unipotent_upper = true;  // omega(n(b)) phi = psi^{-1}(b) phi, b in p^{-m}
    bool unipotent_lower = true;  // omega(nbar(x)) phi = phi, x in p^{3m}
    bool weyl = true;             // omega(w2) phi (a) = gamma(psi^{-1}) psi^{-1}(2a) q^{-m} where v(a) >= -m
    bool weyl_vanishes_outside = true;  // and 0 where v(a) < -m
    long samples = 0;
    bool all() const { return unipotent_upper && unipotent_lower && weyl && weyl_vanishes_outside; }
};
IndicatorIdentityReport check_indicator_identities(long p, long m, int samples, std::uint64_t seed);

}  // namespace so4lab
