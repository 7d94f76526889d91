#include "doctest.h"

#include "so4lab/padic.hpp"

using namespace so4lab;

TEST_CASE("padic normal form") {
    auto x = PadicNumber::from_rational(18, 3, 5);
    CHECK(x.valuation() == 2);
    CHECK(x.unit() == 2);
    auto y = PadicNumber::from_rational(Rational(1, 3), 3, 5);
    CHECK(y.valuation() == -1);
    CHECK(y.unit() == 1);
    auto z = PadicNumber::from_rational(0, 5, 5);
    CHECK(z.is_zero());
    CHECK(z.valuation() == kInfiniteValuation);
    CHECK_THROWS_AS(PadicNumber::from_rational(3, 6, 5), std::invalid_argument);
    // -1 = ...2222 in Z_3
    auto m = PadicNumber::from_rational(-1, 3, 4);
    CHECK(m.unit() == 80);
}

TEST_CASE("padic arithmetic tracks rationals") {
    std::mt19937_64 g(3);
    for (long p : {2l, 3l, 5l}) {
        for (int t = 0; t < 50; ++t) {
            Rational a = random_with_valuation(g, p, -3, 3), b = random_with_valuation(g, p, -3, 3);
            auto A = PadicNumber::from_rational(a, p), B = PadicNumber::from_rational(b, p);
            CHECK(A * B == PadicNumber::from_rational(a * b, p));
            CHECK(A + B == PadicNumber::from_rational(a + b, p));
            CHECK(A.inverse() == PadicNumber::from_rational(1 / a, p));
        }
    }
    // cancellation loses relative precision but not correctness
    auto a = PadicNumber::from_rational(1, 5, 4), b = PadicNumber::from_rational(1 + 625, 5, 4);
    CHECK((b - a).is_zero());
}

TEST_CASE("coset representatives") {
    CHECK(coset_representative(Rational(7, 3), 3, 0) == Rational(1, 3));
    CHECK(coset_representative(Rational(7, 3), 3, 1) == Rational(7, 3));
    CHECK(coset_representative(Rational(10, 3), 3, 1) == Rational(1, 3));
    CHECK(coset_representative(-1, 5, 2) == 24);
    CHECK(coset_representative(50, 5, 2) == 0);
    CHECK(coset_representative(Rational(1, 2), 3, 2) == 5);  // 2 * 5 = 10 = 1 mod 9
}

TEST_CASE("hilbert symbol examples") {
    for (long p : {2l, 3l, 5l, 7l})
        for (const auto& b : square_class_reps(p)) CHECK(hilbert_symbol(1, b, p) == 1);
    CHECK(hilbert_symbol(2, 5, 5) == -1);
    CHECK(hilbert_symbol(-1, -1, 2) == -1);
    CHECK(hilbert_oracle(1, 1, 3, 3) == 1);
    CHECK(hilbert_oracle(3, 3, 3, 3) == hilbert_symbol(3, -1, 3));
    CHECK(hilbert_oracle(2, 5, 5, 3) == -1);
    CHECK(hilbert_oracle(-1, -1, 2, 5) == -1);
    auto a = PadicNumber::from_rational(2, 5), b = PadicNumber::from_rational(5, 5);
    CHECK(hilbert_symbol(a, b) == -1);
    CHECK_THROWS_AS(hilbert_symbol(PadicNumber::from_rational(3, 2, 2), PadicNumber::from_rational(5, 2, 2)),
                    PrecisionError);
}

TEST_CASE("hilbert symbol closed form matches the exhaustive oracle on all square classes") {
    for (long p : {2l, 3l, 5l, 7l}) {
        int depth = p == 2 ? 5 : 3;
        auto reps = square_class_reps(p);
        for (const auto& a : reps)
            for (const auto& b : reps) {
                CAPTURE(p);
                CAPTURE(a.get_str());
                CAPTURE(b.get_str());
                CHECK(hilbert_symbol(a, b, p) == hilbert_oracle(a, b, p, depth));
            }
    }
}

TEST_CASE("hilbert symbol laws") {
    for (long p : {2l, 3l, 5l, 7l}) {
        auto reps = square_class_reps(p);
        for (const auto& a : reps) {
            CHECK(hilbert_symbol(a, -a, p) == 1);
            for (const auto& b : reps) {
                CHECK(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p));
                for (const auto& c : reps)
                    CHECK(hilbert_symbol(a, b * c, p) == hilbert_symbol(a, b, p) * hilbert_symbol(a, c, p));
            }
        }
        // only square classes matter
        std::mt19937_64 g(p);
        for (int t = 0; t < 30; ++t) {
            Rational a = random_with_valuation(g, p, -4, 4), b = random_with_valuation(g, p, -4, 4);
            Rational u = random_with_valuation(g, p, -2, 2);
            CHECK(hilbert_symbol(a * u * u, b, p) == hilbert_symbol(a, b, p));
            CHECK(square_class_index(a * u * u, p) == square_class_index(a, p));
        }
    }
}

TEST_CASE("additive character") {
    AdditiveCharacter psi{5};
    CHECK(psi(Rational(7, 3)) == Cyclotomic(1));
    CHECK(psi(Rational(1, 5)) == Cyclotomic::zeta(5));
    CHECK(psi(Rational(1, 5)).minimized().order() == 5);
    CHECK(psi.inverse()(Rational(1, 5)) == Cyclotomic::zeta(5, -1));
    std::mt19937_64 g(9);
    for (long p : {3l, 5l, 7l}) {
        AdditiveCharacter ps{p};
        for (int t = 0; t < 100; ++t) {
            Rational a = random_with_valuation(g, p, -3, 2), b = random_with_valuation(g, p, -3, 2);
            CHECK(ps(a + b) == ps(a) * ps(b));
        }
    }
    // conductor 1: trivial on p^-1 Z_p
    AdditiveCharacter psi1{3, 1};
    CHECK(psi1(Rational(1, 3)) == Cyclotomic(1));
    CHECK(psi1(Rational(1, 9)) == Cyclotomic::zeta(3));
    auto x = PadicNumber::from_rational(Rational(1, 25), 5, 1);
    CHECK_THROWS_AS(char_eval(psi, x), PrecisionError);
}

TEST_CASE("coset sums") {
    for (long m : {1l, 2l}) {
        auto r = CosetRegion::ball(3, 1, m);
        CHECK(coset_sum(r, m, [](const Rational&) { return Cyclotomic(1); }) == Cyclotomic(p_power(3, -m)));
    }
    AdditiveCharacter psi{5};
    auto zp = CosetRegion::ball(5, 0, 0);
    CHECK(coset_sum(zp, 1, [&](const Rational& x) { return psi(x / 5); }).is_zero());
    // declared level too coarse is caught by sampling
    CHECK_THROWS_AS(coset_sum(zp, 0, [&](const Rational& x) { return psi(x / 5); }), RefinementError);
    // refinement does not change the value; additivity over disjoint pieces
    auto f = [&](const Rational& x) { return psi(x * x / 25); };
    auto ball = CosetRegion::ball(5, 0, 0);
    CHECK(coset_sum(ball, 2, f) == coset_sum(ball, 3, f));
    auto left = CosetRegion::ball(5, 0, 1), right = CosetRegion(5, {{1, 1}, {2, 1}, {3, 1}, {4, 1}});
    CHECK(coset_sum(left.unite(right), 2, f) == coset_sum(left, 2, f) + coset_sum(right, 2, f));
    CHECK_THROWS_AS(left.unite(CosetRegion::ball(5, 5, 2)), std::invalid_argument);
}
