#include "so4lab/wedge.hpp"

namespace so4lab {

std::pair<int, int> wedge_slot(int i, int j) {
    if (i == j) throw std::invalid_argument("repeated index in a wedge");
    int sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    for (int k = 0; k < 6; ++k)
        if (kWedgePairs[k] == std::make_pair(i, j)) return {k, sign};
    throw std::out_of_range("wedge index out of range");
}

namespace {

int perm_sign(const std::array<int, 4>& p) {
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (p[a] == p[b]) return 0;
    int inv = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (p[a] > p[b]) ++inv;
    return inv % 2 ? -1 : 1;
}

Rational q(int i, int j) { return i + j == 3 ? 1 : 0; }

std::vector<std::vector<Rational>> columns(const QMat& m) {
    std::vector<std::vector<Rational>> out;
    for (int j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
    return out;
}

int span_rank(const std::vector<std::vector<Rational>>& vs) {
    if (vs.empty()) return 0;
    QMat m(static_cast<int>(vs.size()), static_cast<int>(vs[0].size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = 0; j < vs[i].size(); ++j) m(i, j) = vs[i][j];
    return m.rank();
}

}  // namespace

QMat induced_form() {
    QMat f(6, 6);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            auto [v1, v2] = kWedgePairs[r];
            auto [w1, w2] = kWedgePairs[c];
            f(r, c) = q(v1, w1) * q(v2, w2) - q(v1, w2) * q(v2, w1);
        }
    return f;
}

QMat star_rho() {
    QMat f = induced_form(), rho(6, 6);
    for (int t = 0; t < 6; ++t)
        for (int s = 0; s < 6; ++s) {
            // only e_s ^ e_comp(s) survives
            auto [i, j] = kWedgePairs[s];
            int k = 0, l = 0;
            for (int x = 0, n = 0; x < 4; ++x)
                if (x != i && x != j) (n++ == 0 ? k : l) = x;
            int comp = wedge_slot(k, l).first;
            rho(comp, t) = f(s, t) * perm_sign({i, j, k, l});
        }
    return rho;
}

SplitBasis split_eigenspaces(const QMat& rho) {
    QMat id = QMat::identity(rho.rows());
    if (rho * rho != id) throw std::invalid_argument("split_eigenspaces: operator is not an involution");
    SplitBasis s;
    s.plus = solve_linear_exact(rho - id).kernel;
    s.minus = solve_linear_exact(rho + id).kernel;
    return s;
}

QMat plus_basis() {
    return QMat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, 0}};
}

QMat minus_basis() {
    return QMat{{1, 0, 0}, {0, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 0}, {0, 0, 1}};
}

bool same_span(const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b) {
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    int r = span_rank(ab);
    return r == span_rank(a) && r == span_rank(b);
}

bool in_span(const std::vector<Rational>& v, const std::vector<std::vector<Rational>>& basis) {
    auto with = basis;
    with.push_back(v);
    return span_rank(with) == span_rank(basis);
}

std::optional<int> self_dual_sign(const std::vector<PureWedge>& e) {
    if (e.empty()) return std::nullopt;
    Rational total = 0;
    for (const auto& s : e)
        for (const auto& t : e) {
            std::array<int, 4> p{s.i, s.j, 5 - t.i, 5 - t.j};
            total += s.coeff * t.coeff * perm_sign(p);
        }
    total /= static_cast<long>(e.size());
    if (total == 1) return 1;
    if (total == -1) return -1;
    return std::nullopt;
}

std::vector<QMat> intertwiner_generators() {
    return {torus(Rational(2), Rational(3)),   torus(Rational(5), Rational(7)),
            weyl<Rational>(WeylWord::s_alpha), weyl<Rational>(WeylWord::s_beta),
            unipotent(Rational(1), Rational(0)), unipotent(Rational(0), Rational(1))};
}

std::vector<QMat> intertwiner_space(const Rep3& A, const Rep3& B, const std::vector<QMat>& gens) {
    // unknown T row-major; rows of the system are entries of T A - B T
    QMat sys(9 * static_cast<int>(gens.size()), 9);
    int row = 0;
    for (const auto& g : gens) {
        QMat a = A(g), b = B(g);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j, ++row)
                for (int k = 0; k < 3; ++k) {
                    sys(row, i * 3 + k) += a(k, j);
                    sys(row, k * 3 + j) -= b(i, k);
                }
    }
    std::vector<QMat> out;
    for (const auto& v : solve_linear_exact(sys).kernel) {
        QMat t(3, 3);
        for (int i = 0; i < 9; ++i) t(i / 3, i % 3) = v[i];
        out.push_back(t);
    }
    return out;
}

std::optional<QMat> find_intertwiner(const Rep3& A, const Rep3& B, const std::vector<QMat>& gens) {
    auto space = intertwiner_space(A, B, gens);
    if (space.empty()) return std::nullopt;
    for (const auto& t : space)
        if (t.det() != 0) return t;
    // det restricted to the space is a polynomial; probe integer points
    for (long seed = 1; seed <= 50; ++seed) {
        QMat t(3, 3);
        long c = seed;
        for (const auto& s : space) {
            t = t + Rational(c) * s;
            c = c * 7 % 11 + 1;
        }
        if (t.det() != 0) return t;
    }
    return std::nullopt;
}

}  // namespace so4lab
