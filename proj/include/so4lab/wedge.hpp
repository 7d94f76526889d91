#pragma once
// The exterior square of the standard representation of SO_4 and its two
// self-dual halves.
#include "so4lab/so4.hpp"

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace so4lab {

// fixed order e12, e13, e14, e23, e24, e34 (0-based pairs)
inline constexpr std::array<std::pair<int, int>, 6> kWedgePairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// index of e_i ^ e_j (0-based, i != j) and the sign picked up by sorting
std::pair<int, int> wedge_slot(int i, int j);

template <class T>
Mat<T> lambda2_matrix(const Mat<T>& g) {
    if (g.rows() != 4 || g.cols() != 4) throw std::invalid_argument("lambda2 needs a 4x4 matrix");
    Mat<T> L(6, 6);
    for (int c = 0; c < 6; ++c) {
        auto [i, j] = kWedgePairs[c];
        for (int r = 0; r < 6; ++r) {
            auto [k, l] = kWedgePairs[r];
            L(r, c) = g(k, i) * g(l, j) - g(l, i) * g(k, j);
        }
    }
    return L;
}

// the form induced by J_4 on the exterior square
QMat induced_form();
// star operator: w ^ rho(t) = Qt(w, t) e1^e2^e3^e4
QMat star_rho();

struct SplitBasis {
    std::vector<std::vector<Rational>> plus, minus;
};
SplitBasis split_eigenspaces(const QMat& rho);

// columns: e13, e14 - e23, e24 (the +1 side) and e12, e14 + e23, e34 (the -1 side)
QMat plus_basis();
QMat minus_basis();
bool same_span(const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b);
bool in_span(const std::vector<Rational>& v, const std::vector<std::vector<Rational>>& basis);

namespace detail {
inline constexpr std::array<int, 3> kPlusCoords{1, 2, 4};
inline constexpr std::array<int, 3> kMinusCoords{0, 2, 5};

template <class T>
Mat<T> restrict_to(const Mat<T>& L, const QMat& basis, const std::array<int, 3>& coords) {
    Mat<T> B(6, 3);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 3; ++j) B(i, j) = T(basis(i, j));
    Mat<T> image = L * B;
    Mat<T> out(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out(i, j) = image(coords[i], j);
    if (B * out != image) throw std::logic_error("subspace is not invariant");
    return out;
}
}  // namespace detail

template <class T>
Mat<T> wedge_plus_matrix(const Mat<T>& g) {
    if (!in_so4(g)) throw std::invalid_argument("wedge_plus_matrix needs an element of SO_4");
    return detail::restrict_to(lambda2_matrix(g), plus_basis(), detail::kPlusCoords);
}

template <class T>
Mat<T> wedge_minus_matrix(const Mat<T>& g) {
    if (!in_so4(g)) throw std::invalid_argument("wedge_minus_matrix needs an element of SO_4");
    return detail::restrict_to(lambda2_matrix(g), minus_basis(), detail::kMinusCoords);
}

// c e_i ^ e_j with 1-based indices, as written by hand
struct PureWedge {
    Rational coeff;
    int i, j;
};

// E ^ phi2(E) for phi2(E) = (1/m) sum e_{5-i} ^ e_{5-j}; +1 / -1 when it is
// a signed volume form, nothing otherwise
std::optional<int> self_dual_sign(const std::vector<PureWedge>& e);

using Rep3 = std::function<QMat(const QMat&)>;
std::vector<QMat> intertwiner_generators();
// an invertible T with T A(g) = B(g) T on every generator
std::optional<QMat> find_intertwiner(const Rep3& A, const Rep3& B, const std::vector<QMat>& gens);
// full solution space of the same system (each entry a 3x3 matrix)
std::vector<QMat> intertwiner_space(const Rep3& A, const Rep3& B, const std::vector<QMat>& gens);

}  // namespace so4lab
