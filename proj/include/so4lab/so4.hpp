#pragma once
// SO_4 and GSO_4 for the form with Gram matrix J_4 (antidiagonal ones).
#include "so4lab/cyclotomic.hpp"
#include "so4lab/matrix.hpp"
#include "so4lab/padic.hpp"

#include <optional>
#include <random>
#include <string>
#include <utility>

namespace so4lab {

template <class T>
using Mat = ExactMatrix<T>;
using QMat = ExactMatrix<Rational>;

template <class T>
Mat<T> antidiag_ones(int n) {
    Mat<T> j(n, n);
    for (int i = 0; i < n; ++i) j(i, n - 1 - i) = T(1);
    return j;
}

template <class T>
void require_invertible(const T& x, const char* what) {
    if (is_zero(x)) throw std::invalid_argument(std::string("non-invertible parameter: ") + what);
}

// t(a1, a2) = diag(a1, a2, 1/a2, 1/a1)
template <class A, class B, class T = value_t<A>>
Mat<T> torus(const A& a1_, const B& a2_) {
    T a1(a1_), a2(a2_);
    require_invertible(a1, "a1");
    require_invertible(a2, "a2");
    return Mat<T>::diag({a1, a2, T(1) / a2, T(1) / a1});
}

template <class X, class T = value_t<X>>
Mat<T> x_alpha(const X& x) {
    Mat<T> g = Mat<T>::identity(4);
    g(0, 1) = x;
    g(2, 3) = -x;
    return g;
}

template <class X, class T = value_t<X>>
Mat<T> x_beta(const X& y) {
    Mat<T> g = Mat<T>::identity(4);
    g(0, 2) = y;
    g(1, 3) = -y;
    return g;
}

template <class X, class T = value_t<X>>
Mat<T> x_minus_alpha(const X& x) {
    Mat<T> g = Mat<T>::identity(4);
    g(1, 0) = x;
    g(3, 2) = -x;
    return g;
}

template <class X, class T = value_t<X>>
Mat<T> x_minus_beta(const X& y) {
    Mat<T> g = Mat<T>::identity(4);
    g(2, 0) = y;
    g(3, 1) = -y;
    return g;
}

template <class A, class B, class T = value_t<A>>
Mat<T> unipotent(const A& x, const B& y) { return x_alpha(T(x)) * x_beta(T(y)); }

template <class A, class B, class T = value_t<A>>
Mat<T> lower_unipotent(const A& x, const B& y) { return x_minus_alpha(T(x)) * x_minus_beta(T(y)); }

enum class WeylWord { one, s_alpha, s_beta, s_alpha_s_beta };
const char* weyl_name(WeylWord w);
WeylWord weyl_from_name(const std::string& s);

template <class T>
Mat<T> weyl(WeylWord w) {
    Mat<T> sa{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    Mat<T> sb{{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}};
    switch (w) {
        case WeylWord::one: return Mat<T>::identity(4);
        case WeylWord::s_alpha: return sa;
        case WeylWord::s_beta: return sb;
        case WeylWord::s_alpha_s_beta: return sa * sb;
    }
    throw std::logic_error("unknown Weyl word");
}

// the permutation matrix swapping the middle coordinates (in O_4, not SO_4)
template <class T>
Mat<T> outer_c() {
    return Mat<T>{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
}

template <class T>
Mat<T> outer_conj(const Mat<T>& g) {
    Mat<T> c = outer_c<T>();
    return c * g * c;
}

// m(h) = diag(h, h*) with h* = J_2 h^{-t} J_2
template <class T>
Mat<T> levi_m(const Mat<T>& h) {
    if (h.rows() != 2 || h.cols() != 2) throw std::invalid_argument("m(h) needs a 2x2 matrix");
    require_invertible(h.det(), "det h");
    Mat<T> j = antidiag_ones<T>(2);
    Mat<T> hs = j * h.inverse().transpose() * j;
    Mat<T> g(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            g(i, k) = h(i, k);
            g(2 + i, 2 + k) = hs(i, k);
        }
    return g;
}

template <class T>
Mat<T> iota_alpha(const Mat<T>& h) {
    require_invertible(h.det(), "det h");
    const T &a = h(0, 0), &b = h(0, 1), &c = h(1, 0), &d = h(1, 1);
    return Mat<T>{{a, b, 0, 0}, {c, d, 0, 0}, {0, 0, a, -b}, {0, 0, -c, d}};
}

template <class T>
Mat<T> iota_beta(const Mat<T>& h) {
    require_invertible(h.det(), "det h");
    const T &a = h(0, 0), &b = h(0, 1), &c = h(1, 0), &d = h(1, 1);
    return Mat<T>{{a, 0, b, 0}, {0, a, 0, -b}, {c, 0, d, 0}, {0, -c, 0, d}};
}

// lambda with g^t J g = lambda J, if any
template <class T>
std::optional<T> similitude(const Mat<T>& g) {
    if (g.rows() != 4 || g.cols() != 4) return std::nullopt;
    Mat<T> j = antidiag_ones<T>(4);
    Mat<T> q = g.transpose() * j * g;
    T lambda = q(0, 3);
    if (q != lambda * j || is_zero(lambda)) return std::nullopt;
    return lambda;
}

template <class T>
struct GroupElement {
    Mat<T> matrix;
    T lambda;
    bool is_so4 = false;
    bool is_gso4 = false;
};

template <class T>
GroupElement<T> classify(const Mat<T>& g) {
    GroupElement<T> e{g, T(0), false, false};
    auto l = similitude(g);
    if (!l) return e;
    e.lambda = *l;
    T d = g.det();
    e.is_gso4 = (d == *l * *l);
    e.is_so4 = e.is_gso4 && *l == T(1) && d == T(1);
    return e;
}

template <class T>
bool in_so4(const Mat<T>& g) { return classify(g).is_so4; }
template <class T>
bool in_gso4(const Mat<T>& g) { return classify(g).is_gso4; }

// ---- element builder used by the command line

struct ElementSpec {
    std::string kind;  // torus | u | ubar | weyl | c | m | x_beta | iota_alpha | iota_beta
    std::vector<Rational> params;  // torus: a1 a2; u/ubar: x y; x_beta: y; m/iota: h row-major
    WeylWord word = WeylWord::one;
};

GroupElement<Rational> build_element(const ElementSpec& spec);

// ---- Bruhat decomposition over Q

WeylWord bruhat_cell(const QMat& g);

struct BruhatFactor {
    QMat b1;      // upper triangular in SO_4
    WeylWord w;
    QMat u2;      // x_alpha(x) x_beta(y) with only the coordinates w makes negative
    Rational x, y;
};
BruhatFactor bruhat_factor(const QMat& g);

// ---- GSO_4 as (GL_2 x GL_2) / Delta

struct GSO4Split {
    QMat h1, h2;  // h1 normalized: first nonzero entry (row-major) is 1
};
GSO4Split gso4_split(const QMat& G);

// ---- Howe data at level m over Q_p

struct HoweLevel {
    long p;
    long m;
};

enum class HoweCharacter { tau, psi_m, psi_U };

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

bool in_K(const HoweLevel& L, const QMat& k);
bool in_H(const HoweLevel& L, const QMat& h);
bool in_U(const QMat& u);
bool in_U_m(const HoweLevel& L, const QMat& u);
QMat d_m(const HoweLevel& L);
Cyclotomic howe_character(const HoweLevel& L, const QMat& g, HoweCharacter which);

QMat random_K(std::mt19937_64& g, const HoweLevel& L);
QMat random_H(std::mt19937_64& g, const HoweLevel& L);
QMat random_U_m(std::mt19937_64& g, const HoweLevel& L);

// ---- the sets A_w inside the torus

struct TorusElement {
    Rational a1, a2;
    Rational alpha() const { return a1 / a2; }
    Rational beta() const { return a1 * a2; }
    QMat matrix() const { return torus(a1, a2); }
};
bool a_w_contains(const TorusElement& t, WeylWord w);

}  // namespace so4lab
