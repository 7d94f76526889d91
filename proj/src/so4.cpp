#include "so4lab/so4.hpp"

#include "so4lab/ratfun.hpp"

#include <array>

namespace so4lab {

const char* weyl_name(WeylWord w) {
    switch (w) {
        case WeylWord::one: return "1";
        case WeylWord::s_alpha: return "s_alpha";
        case WeylWord::s_beta: return "s_beta";
        case WeylWord::s_alpha_s_beta: return "s_alpha s_beta";
    }
    return "?";
}

WeylWord weyl_from_name(const std::string& s) {
    for (auto w : {WeylWord::one, WeylWord::s_alpha, WeylWord::s_beta, WeylWord::s_alpha_s_beta})
        if (s == weyl_name(w)) return w;
    if (s == "sa") return WeylWord::s_alpha;
    if (s == "sb") return WeylWord::s_beta;
    if (s == "sasb" || s == "s_alpha_s_beta") return WeylWord::s_alpha_s_beta;
    throw std::invalid_argument("unknown Weyl word: " + s);
}

namespace {

void need_params(const ElementSpec& s, size_t n) {
    if (s.params.size() != n)
        throw std::invalid_argument(s.kind + " expects " + std::to_string(n) + " parameters");
}

QMat two_by_two(const std::vector<Rational>& p) { return QMat{{p[0], p[1]}, {p[2], p[3]}}; }

}  // namespace

GroupElement<Rational> build_element(const ElementSpec& s) {
    QMat g;
    if (s.kind == "torus") {
        need_params(s, 2);
        g = torus(s.params[0], s.params[1]);
    } else if (s.kind == "u") {
        need_params(s, 2);
        g = unipotent(s.params[0], s.params[1]);
    } else if (s.kind == "ubar") {
        need_params(s, 2);
        g = lower_unipotent(s.params[0], s.params[1]);
    } else if (s.kind == "x_beta") {
        need_params(s, 1);
        g = x_beta(s.params[0]);
    } else if (s.kind == "weyl") {
        g = weyl<Rational>(s.word);
    } else if (s.kind == "c") {
        g = outer_c<Rational>();
    } else if (s.kind == "m") {
        need_params(s, 4);
        g = levi_m(two_by_two(s.params));
    } else if (s.kind == "iota_alpha") {
        need_params(s, 4);
        g = iota_alpha(two_by_two(s.params));
    } else if (s.kind == "iota_beta") {
        need_params(s, 4);
        g = iota_beta(two_by_two(s.params));
    } else {
        throw std::invalid_argument("unknown element kind: " + s.kind);
    }
    return classify(g);
}

namespace {

// ranks of the lower-left corners (rows i.., cols ..j)
std::array<int, 16> corner_ranks(const QMat& g) {
    std::array<int, 16> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i * 4 + j] = g.block(i, 0, 4 - i, j + 1).rank();
    return r;
}

constexpr std::array<WeylWord, 4> kWords{WeylWord::one, WeylWord::s_alpha, WeylWord::s_beta,
                                         WeylWord::s_alpha_s_beta};

bool flips_alpha(WeylWord w) { return w == WeylWord::s_alpha || w == WeylWord::s_alpha_s_beta; }
bool flips_beta(WeylWord w) { return w == WeylWord::s_beta || w == WeylWord::s_alpha_s_beta; }

bool upper_triangular(const QMat& b) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j)
            if (b(i, j) != 0) return false;
    return true;
}

}  // namespace

WeylWord bruhat_cell(const QMat& g) {
    if (g.rows() != 4 || g.cols() != 4 || g.det() == 0)
        throw std::invalid_argument("bruhat_cell needs an invertible 4x4 matrix");
    if (!in_so4(g)) throw std::invalid_argument("bruhat_cell needs an element of SO_4");
    auto r = corner_ranks(g);
    for (auto w : kWords)
        if (corner_ranks(weyl<Rational>(w)) == r) return w;
    throw std::logic_error("no Weyl word matches the rank pattern");
}

BruhatFactor bruhat_factor(const QMat& g) {
    WeylWord w = bruhat_cell(g);
    using RF = RationalFunction2;
    // symbolic u2^{-1} with x -> a, y -> b, only the free coordinates
    RF xs = flips_alpha(w) ? RF::a() : RF(0);
    RF ys = flips_beta(w) ? RF::b() : RF(0);
    Mat<RF> gs(4, 4), wi(4, 4);
    QMat winv = weyl<Rational>(w).inverse();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            gs(i, j) = RF(g(i, j));
            wi(i, j) = RF(winv(i, j));
        }
    Mat<RF> m = gs * x_beta(-ys) * x_alpha(-xs) * wi;

    // lower entries must vanish; each is c0 + c1 a + c2 b + c3 ab
    std::optional<Rational> x, y;
    if (!flips_alpha(w)) x = Rational(0);
    if (!flips_beta(w)) y = Rational(0);
    for (int pass = 0; pass < 3 && (!x || !y); ++pass) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < i; ++j) {
                const Laurent2& e = m(i, j).num();
                Rational c0 = e.coeff(0, 0), ca = e.coeff(1, 0), cb = e.coeff(0, 1), cab = e.coeff(1, 1);
                // fold in whatever is known
                if (y) { ca += cab * *y; c0 += cb * *y; cb = 0; cab = 0; }
                if (x) { cb += cab * *x; c0 += ca * *x; ca = 0; cab = 0; }
                if (cab != 0) continue;
                if (!x && ca != 0 && cb == 0) x = -c0 / ca;
                else if (!y && cb != 0 && ca == 0) y = -c0 / cb;
            }
    }
    if (!x || !y) throw std::logic_error("bruhat_factor could not solve for the unipotent part");
    QMat u2 = unipotent(*x, *y);
    QMat b1 = g * u2.inverse() * winv;
    if (!upper_triangular(b1)) throw std::logic_error("bruhat_factor produced a non-triangular Borel part");
    return {b1, w, u2, *x, *y};
}

GSO4Split gso4_split(const QMat& G) {
    if (!in_gso4(G)) throw std::invalid_argument("gso4_split needs an element of GSO_4");
    // G(r, c) = sign * A[i] * B[k] with A = (a b c d), B = (e f g h) row-major
    struct Slot { int i, k, s; };
    static const Slot table[4][4] = {
        {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, -1}},
        {{2, 0, 1}, {3, 0, 1}, {2, 1, 1}, {3, 1, -1}},
        {{0, 2, 1}, {1, 2, 1}, {0, 3, 1}, {1, 3, -1}},
        {{2, 2, -1}, {3, 2, -1}, {2, 3, -1}, {3, 3, 1}},
    };
    Rational P[4][4];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const Slot& t = table[r][c];
            P[t.i][t.k] = t.s * G(r, c);
        }
    int i0 = -1, k0 = -1;
    for (int i = 0; i < 4 && i0 < 0; ++i)
        for (int k = 0; k < 4; ++k)
            if (P[i][k] != 0) { i0 = i; k0 = k; break; }
    std::vector<Rational> A(4), B(4);
    for (int k = 0; k < 4; ++k) B[k] = P[i0][k];
    for (int i = 0; i < 4; ++i) A[i] = P[i][k0] / B[k0];
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            if (A[i] * B[k] != P[i][k]) throw std::invalid_argument("gso4_split: matrix is not a product of iota images");
    GSO4Split out{QMat{{A[0], A[1]}, {A[2], A[3]}}, QMat{{B[0], B[1]}, {B[2], B[3]}}};
    if (iota_alpha(out.h1) * iota_beta(out.h2) != G) throw std::logic_error("gso4_split round trip failed");
    return out;
}

// ---- Howe data

QMat d_m(const HoweLevel& L) { return torus(p_power(L.p, -2 * L.m), Rational(1)); }

bool in_K(const HoweLevel& L, const QMat& k) {
    if (!in_so4(k)) return false;
    QMat e = k - QMat::identity(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (e(i, j) != 0 && valuation(e(i, j), L.p) < L.m) return false;
    return true;
}

bool in_H(const HoweLevel& L, const QMat& h) {
    QMat d = d_m(L);
    return in_K(L, d.inverse() * h * d);
}

bool in_U(const QMat& u) { return u.rows() == 4 && u.cols() == 4 && u == unipotent(u(0, 1), u(0, 2)); }

bool in_U_m(const HoweLevel& L, const QMat& u) {
    if (!in_U(u)) return false;
    for (const Rational& c : {u(0, 1), u(0, 2)})
        if (c != 0 && valuation(c, L.p) < -L.m) return false;
    return true;
}

Cyclotomic howe_character(const HoweLevel& L, const QMat& g, HoweCharacter which) {
    AdditiveCharacter psi{L.p};
    switch (which) {
        case HoweCharacter::tau:
            if (!in_K(L, g)) throw DomainError("tau_m: element is not in K_m");
            return psi(p_power(L.p, -2 * L.m) * (g(0, 1) - 2 * g(0, 2)));
        case HoweCharacter::psi_m: {
            if (!in_H(L, g)) throw DomainError("psi_m: element is not in H_m");
            QMat d = d_m(L);
            return howe_character(L, d.inverse() * g * d, HoweCharacter::tau);
        }
        case HoweCharacter::psi_U:
            if (!in_U(g)) throw DomainError("psi_U: element is not in U");
            return psi(g(0, 1) - 2 * g(0, 2));
    }
    throw std::logic_error("unknown character");
}

QMat random_K(std::mt19937_64& g, const HoweLevel& L) {
    auto small = [&] { return random_with_valuation(g, L.p, L.m, L.m + 3); };
    QMat k = torus(Rational(1 + small()), Rational(1 + small()));
    k = k * unipotent(small(), small());
    k = k * lower_unipotent(small(), small());
    k = k * unipotent(small(), small());
    return k;
}

QMat random_H(std::mt19937_64& g, const HoweLevel& L) {
    QMat d = d_m(L);
    return d * random_K(g, L) * d.inverse();
}

QMat random_U_m(std::mt19937_64& g, const HoweLevel& L) {
    return unipotent(random_with_valuation(g, L.p, -L.m, -L.m + 3),
                     random_with_valuation(g, L.p, -L.m, -L.m + 3));
}

bool a_w_contains(const TorusElement& t, WeylWord w) {
    // positive simple roots kept positive by w must be trivial on t
    bool need_alpha = !flips_alpha(w);
    bool need_beta = !flips_beta(w);
    if (need_alpha && t.alpha() != 1) return false;
    if (need_beta && t.beta() != 1) return false;
    return true;
}

}  // namespace so4lab
