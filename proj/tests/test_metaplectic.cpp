#include "doctest.h"
#include "so4lab/metaplectic.hpp"

using namespace so4lab;

namespace {

Mat2 random_sl2(std::mt19937_64& g, long p, long vlo, long vhi) {
    std::uniform_int_distribution<int> kind(0, 3);
    Mat2 m = Mat2::identity(2);
    for (int k = 0; k < 3; ++k) {
        Rational r = random_with_valuation(g, p, vlo, vhi);
        switch (kind(g)) {
            case 0: m = m * n2(r); break;
            case 1: m = m * nbar2(r); break;
            case 2: m = m * t2(r); break;
            default: m = m * w2(); break;
        }
    }
    return m;
}

MetaElement random_meta(std::mt19937_64& g, long p) {
    std::uniform_int_distribution<int> kind(0, 2), z(0, 1);
    Mat2 m = Mat2::identity(2);
    for (int k = 0; k < 2; ++k) {
        Rational r = random_with_valuation(g, p, -1, 1);
        switch (kind(g)) {
            case 0: m = m * n2(r); break;
            case 1: m = m * t2(r); break;
            default: m = m * w2(); break;
        }
    }
    return {m, z(g) ? 1 : -1};
}

StepFunction random_step(std::mt19937_64& g, long p) {
    std::uniform_int_distribution<int> lvl(0, 1), cnt(1, 3), z(-2, 2);
    StepFunction f(p, lvl(g));
    for (int k = 0, n = cnt(g); k < n; ++k) {
        Rational x = random_with_valuation(g, p, -1, 1);
        f.add(x, Cyclotomic(Rational(z(g))) + Cyclotomic::zeta(p, z(g)));
    }
    return f;
}

}  // namespace

TEST_CASE("Kubota x and the cocycle") {
    CHECK(kubota_x(Mat2::identity(2)) == 1);
    CHECK(kubota_x(w2()) == -1);
    CHECK(kubota_x(nbar2(Rational(5, 3))) == Rational(5, 3));
    for (long p : {2L, 3L, 5L, 7L}) {
        std::mt19937_64 g(p);
        CHECK(cocycle(w2(), w2(), p) == 1);
        for (int k = 0; k < 50; ++k) {
            Mat2 a = random_sl2(g, p, -3, 3);
            CHECK(cocycle(a, Mat2::identity(2), p) == 1);
            CHECK(cocycle(n2(random_with_valuation(g, p, -3, 3)), nbar2(random_with_valuation(g, p, -3, 3)), p) == 1);
            Rational x = random_with_valuation(g, p, -3, 3), y = random_with_valuation(g, p, -3, 3);
            MetaElement tt = meta_mul({t2(x), 1}, {t2(y), 1}, p);
            CHECK(tt.g == t2(x * y));
            CHECK(tt.zeta == hilbert_symbol(x, y, p));
        }
    }
}

TEST_CASE("cocycle identity and associativity") {
    for (long p : {2L, 3L, 5L, 7L}) {
        std::mt19937_64 g(100 + p);
        for (int k = 0; k < 1000; ++k) {
            Mat2 a = random_sl2(g, p, -3, 3), b = random_sl2(g, p, -3, 3), c = random_sl2(g, p, -3, 3);
            CHECK(cocycle(a, b, p) * cocycle(a * b, c, p) == cocycle(a, b * c, p) * cocycle(b, c, p));
            MetaElement A{a, 1}, B{b, -1}, C{c, 1};
            CHECK(meta_mul(meta_mul(A, B, p), C, p) == meta_mul(A, meta_mul(B, C, p), p));
        }
    }
}

TEST_CASE("Weil index") {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        AdditiveCharacter psi{p};
        CHECK(weil_index(psi, Rational(1)).value == Cyclotomic(1));
        // classical Gauss sum over Z/p: sum zeta_p^{u y^2} = (u/p) sqrt(p) (1 or i)
        Cyclotomic root = p % 4 == 1 ? Cyclotomic(1) : Cyclotomic::zeta(4, 1);
        for (long u = 1; u < p; ++u) {
            std::vector<long long> counts(p, 0);
            for (long y = 0; y < p; ++y) ++counts[u * y * y % p];
            Cyclotomic gauss = Cyclotomic::from_root_counts(p, counts);
            int leg = legendre(Integer(u), p);
            CHECK(gauss * gauss == Cyclotomic(Rational(p)) * root * root);
            CHECK(weil_index(psi, Rational(p * u)).value == Cyclotomic(Rational(leg)) * root);
            CHECK(weil_index(psi, Rational(u)).value == Cyclotomic(1));
        }
        std::mt19937_64 g(p);
        for (int k = 0; k < 10; ++k) {
            Rational a = random_with_valuation(g, p, -3, 3), u = random_with_valuation(g, p, -2, 2);
            CHECK(weil_index(psi, a).value == weil_index(psi, a * u * u).value);
            // higher summation levels agree
            if (p <= 5) CHECK(weil_index(psi, a, 3).value == weil_index(psi, a).value);
        }
        CHECK(mu_psi(psi, Rational(1)) == Cyclotomic(1));
    }
    CHECK_THROWS_AS(weil_index(AdditiveCharacter{2}, Rational(1)), UnsupportedPrime);
    CHECK_THROWS_AS(weil_index(AdditiveCharacter{3}, Rational(3), 0), LevelError);
}

TEST_CASE("mu_psi is genuine on the torus") {
    for (long p : {3L, 5L, 7L})
        for (int s : {1, -1}) {
            AdditiveCharacter psi{p, 0, s};
            auto reps = square_class_reps(p);
            for (const auto& a : reps) {
                CHECK(mu_psi(psi, a) * mu_psi(psi, a) == Cyclotomic(Rational(hilbert_symbol(a, a, p))));
                for (const auto& b : reps)
                    CHECK(mu_psi(psi, a) * mu_psi(psi, b) ==
                          mu_psi(psi, a * b) * Cyclotomic(Rational(hilbert_symbol(a, b, p))));
            }
        }
}

TEST_CASE("step functions and the Fourier transform") {
    for (long p : {3L, 5L, 7L}) {
        AdditiveCharacter psi{p};
        StepFunction one = StepFunction::indicator(p, Rational(0), 0);
        CHECK(fourier(one, psi) == one);
        StepFunction fine = one.refined(2);
        CHECK(fine.terms().size() == static_cast<size_t>(p * p));
        CHECK(fine == one);
        std::mt19937_64 g(p * 3);
        for (int k = 0; k < 10; ++k) {
            StepFunction f = random_step(g, p);
            StepFunction ff = fourier(fourier(f, psi), psi), refl(p, f.level());
            for (const auto& [x, c] : f.terms()) refl.add(-x, c);
            CHECK(ff == refl);
            CHECK(f + f.scaled(Cyclotomic(-1)) == StepFunction(p, 0));
        }
        for (long m : {1L, 2L}) {
            StepFunction phi = StepFunction::indicator(p, Rational(1), m);
            StepFunction ph = fourier(phi, psi);
            for (long v = -m - 2; v <= 1; ++v) {
                Rational a = p_power(p, v) * 2;
                Cyclotomic expect = v >= -m ? psi(2 * a) * Cyclotomic(p_power(p, -m)) : Cyclotomic(0);
                CHECK(ph.value(a) == expect);
            }
        }
    }
}

TEST_CASE("Weil representation") {
    for (long p : {3L, 5L}) {
        for (int s : {1, -1}) {
            AdditiveCharacter psi{p, 0, s};
            std::mt19937_64 g(p * 7 + s);
            for (int k = 0; k < 25; ++k) {
                MetaElement a = random_meta(g, p), b = random_meta(g, p);
                StepFunction f = random_step(g, p);
                CHECK(weil_op(a, weil_op(b, f, psi), psi) == weil_op(meta_mul(a, b, p), f, psi));
            }
            StepFunction f = random_step(g, p);
            CHECK(weil_op({Mat2::identity(2), -1}, f, psi) == f.scaled(Cyclotomic(-1)));
            CHECK(weil_op({Mat2::identity(2), 1}, f, psi) == f);
            // generator formulas on the nose
            Rational b(1, p);
            StepFunction nf = weil_op({n2(b), 1}, f, psi);
            StepFunction fine = f.refined(4);
            for (const auto& [x, c] : fine.terms()) CHECK(nf.value(x) == c * psi(b * x * x));
        }
    }
}

TEST_CASE("indicator of 1 + p^m under omega_{psi^{-1}}") {
    for (long p : {3L, 5L, 7L})
        for (long m : {1L, 2L}) {
            auto rep = check_indicator_identities(p, m, 10, 1);
            CHECK(rep.unipotent_upper);
            CHECK(rep.unipotent_lower);
            CHECK(rep.weyl);
            CHECK(rep.weyl_vanishes_outside);
        }
}
