#include "checks.hpp"

#include "so4lab/metaplectic.hpp"
#include "so4lab/padic.hpp"
#include "so4lab/so4.hpp"
#include "so4lab/wedge.hpp"
#include "so4lab/zeta.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

namespace so4lab::checks {

namespace {

// counts of passed / attempted sub-assertions, with the first failure kept
struct Tally {
    long total = 0, ok = 0;
    std::string first_failure;
    void check(bool c, const std::string& what) {
        ++total;
        if (c) ++ok;
        else if (first_failure.empty()) first_failure = what;
    }
    void fill(CheckReport& r) const {
        r.expected = std::to_string(total) + " of " + std::to_string(total);
        r.computed = std::to_string(ok) + " of " + std::to_string(total);
        r.pass = total > 0 && ok == total;
        if (!first_failure.empty()) r.computed = r.computed.get<std::string>() + "; first failure: " + first_failure;
    }
};

json prime_list(const std::vector<long>& ps) { return json(ps); }

CheckReport skip(const std::string& id, const std::string& anchor, const std::string& why) {
    CheckReport r{id, anchor};
    r.skipped = why;
    r.pass = true;
    return r;
}

Rational rnd(std::mt19937_64& g) {
    std::uniform_int_distribution<int> d(-9, 9), n(1, 5);
    return make_rational(d(g), n(g));
}
Rational rnd_nonzero(std::mt19937_64& g) {
    Rational r;
    do r = rnd(g); while (r == 0);
    return r;
}
QMat rnd_gl2(std::mt19937_64& g) {
    for (;;) {
        QMat h{{rnd(g), rnd(g)}, {rnd(g), rnd(g)}};
        if (h.det() != 0) return h;
    }
}
constexpr WeylWord kWords[] = {WeylWord::one, WeylWord::s_alpha, WeylWord::s_beta, WeylWord::s_alpha_s_beta};

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

// coordinates of sum c e_i ^ e_j, 1-based indices
std::vector<Rational> wedge_vec(std::initializer_list<std::tuple<int, int, int>> terms) {
    std::vector<Rational> v(6, Rational(0));
    for (auto [c, i, j] : terms) {
        auto [k, s] = wedge_slot(i - 1, j - 1);
        v[k] += c * s;
    }
    return v;
}

std::string at(long p, long m = -1, long i = -1) {
    std::string s = "p=" + std::to_string(p);
    if (m >= 0) s += " m=" + std::to_string(m);
    if (i >= 0) s += " i=" + std::to_string(i);
    return s;
}

long env_long(const char* name, const char* raw) {
    try {
        size_t used = 0;
        long v = std::stol(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(std::string(name) + ": not an integer: " + raw);
    }
}

}  // namespace

std::vector<long> SuiteConfig::odd_primes() const {
    std::vector<long> r;
    for (long p : primes)
        if (p != 2) r.push_back(p);
    return r;
}

json SuiteConfig::to_json() const {
    json grid = json::array();
    for (auto [m, i] : howe_grid) grid.push_back({m, i});
    return {{"primes", primes}, {"precision", precision}, {"order", order}, {"howe_grid", grid}, {"seed", seed}};
}

void SuiteConfig::validate() const {
    if (primes.empty()) throw ConfigError("primes: empty list");
    for (long p : primes)
        if (!is_prime(p)) throw ConfigError("primes: " + std::to_string(p) + " is not prime");
    if (order < 5) throw ConfigError("order: K = " + std::to_string(order) + " is below the minimum 5");
    if (precision < 1) throw ConfigError("precision: must be positive");
    for (auto [m, i] : howe_grid)
        if (m < 1 || i < m)
            throw ConfigError("howe_grid: (" + std::to_string(m) + "," + std::to_string(i) + ") needs i >= m >= 1");
}

void apply_json(SuiteConfig& cfg, const json& j) {
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
    try {
        for (const auto& [k, v] : j.items()) {
            if (k == "primes") cfg.primes = v.get<std::vector<long>>();
            else if (k == "precision") cfg.precision = v.get<long>();
            else if (k == "order") cfg.order = v.get<int>();
            else if (k == "seed") cfg.seed = v.get<std::uint64_t>();
            else if (k == "howe_grid") {
                cfg.howe_grid.clear();
                for (const auto& e : v) cfg.howe_grid.emplace_back(e.at(0).get<long>(), e.at(1).get<long>());
            } else throw ConfigError("config: unknown key " + k);
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

std::vector<long> parse_prime_list(const std::string& s) {
    std::vector<long> r;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) r.push_back(env_long("primes", tok.c_str()));
    return r;
}

std::vector<std::pair<long, long>> parse_grid(const std::string& s) {
    std::vector<std::pair<long, long>> r;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw ConfigError("howe_grid: expected m:i, got " + tok);
        r.emplace_back(env_long("howe_grid", tok.substr(0, colon).c_str()),
                       env_long("howe_grid", tok.substr(colon + 1).c_str()));
    }
    return r;
}

void apply_env(SuiteConfig& cfg) {
    if (const char* v = std::getenv("SO4LAB_PRIMES")) cfg.primes = parse_prime_list(v);
    if (const char* v = std::getenv("SO4LAB_PRECISION")) cfg.precision = env_long("SO4LAB_PRECISION", v);
    if (const char* v = std::getenv("SO4LAB_ORDER")) cfg.order = static_cast<int>(env_long("SO4LAB_ORDER", v));
    if (const char* v = std::getenv("SO4LAB_HOWE_GRID")) cfg.howe_grid = parse_grid(v);
    if (const char* v = std::getenv("SO4LAB_SEED"))
        cfg.seed = static_cast<std::uint64_t>(env_long("SO4LAB_SEED", v));
}

json CheckReport::to_json() const {
    json j{{"id", id}, {"anchor", anchor}, {"parameters", parameters}};
    if (!skipped.empty()) {
        j["skipped"] = skipped;
    } else {
        j["expected"] = expected;
        j["computed"] = computed;
    }
    j["pass"] = pass;
    return j;
}

std::string exact_str(const Rational& r, long p) {
    if (r == 0) return "0";
    long e = valuation(r, p);
    Rational u = r / p_power(p, e);
    std::string base = std::to_string(p) + "^" + std::to_string(e);
    if (e == 0) return to_string(u);
    if (u == 1) return base;
    return base + "*" + to_string(u);
}

std::string exact_str(const Cyclotomic& c, long p) {
    if (c.is_rational()) return exact_str(c.to_rational(), p);
    return c.str();
}

CheckReport wedge_split() {
    CheckReport r{"wedge.split", "exterior square split into self-dual halves"};
    Tally t;
    QMat rho = star_rho();
    t.check(rho * rho == QMat::identity(6), "rho^2 = id");
    auto sp = split_eigenspaces(rho);
    t.check(sp.plus.size() == 3, "dim plus = 3");
    t.check(sp.minus.size() == 3, "dim minus = 3");
    std::vector<std::vector<Rational>> want{wedge_vec({{1, 1, 3}}), wedge_vec({{1, 1, 4}, {1, 3, 2}}),
                                            wedge_vec({{1, 2, 4}})};
    t.check(same_span(sp.plus, want), "span of the plus half");
    std::vector<std::vector<Rational>> cols;
    for (int j = 0; j < 3; ++j) cols.push_back(plus_basis().column(j));
    t.check(cols == want, "plus basis columns");

    using RF = RationalFunction2;
    Mat<RF> w = wedge_plus_matrix(torus(RF::a(), RF::b()));
    Mat<RF> diag(3, 3);
    diag(0, 0) = RF::a() / RF::b();
    diag(1, 1) = RF(1);
    diag(2, 2) = RF::b() / RF::a();
    t.check(w == diag, "torus acts by diag(a/b, 1, b/a)");
    t.fill(r);
    r.parameters = {{"basis", "e1^e3, e1^e4 + e3^e2, e2^e4"}};
    return r;
}

CheckReport wedge_intertwiner() {
    CheckReport r{"wedge.intertwiner", "outer twist of the minus half is the plus half"};
    Tally t;
    auto gens = intertwiner_generators();
    Rep3 plus = [](const QMat& g) { return wedge_plus_matrix(g); };
    Rep3 minus = [](const QMat& g) { return wedge_minus_matrix(g); };
    Rep3 minus_c = [](const QMat& g) { return wedge_minus_matrix(outer_conj(g)); };
    auto T = find_intertwiner(minus_c, plus, gens);
    t.check(T.has_value(), "intertwiner exists");
    if (T) {
        t.check(T->det() != 0, "intertwiner invertible");
        for (size_t k = 0; k < gens.size(); ++k)
            t.check(*T * minus_c(gens[k]) == plus(gens[k]) * *T, "generator " + std::to_string(k));
    }
    t.check(!find_intertwiner(plus, minus, gens).has_value(), "no intertwiner plus -> minus");
    t.fill(r);
    r.parameters = {{"generators", gens.size()}};
    return r;
}

CheckReport cs_identity(int K) {
    CheckReport r{"zeta.cs_identity", "unramified zeta integral equals the L-ratio"};
    Tally t;
    auto s = SatakeParams::symbolic();
    auto series = unramified_zeta_series(s, K);
    t.check(series == cs_closed_form(s, K), "series = (1+t)/((1-a/b t)(1-b/a t))");
    t.check(series == lratio_series(s, K), "series = L(s, wedge_+ x chi eta)/L(2s, eta^2)");
    t.fill(r);
    r.parameters = {{"order", K}};
    return r;
}

CheckReport hilbert_grid(const std::vector<long>& primes) {
    CheckReport r{"padic.hilbert", "Hilbert symbol on square classes"};
    Tally t;
    for (long p : primes) {
        int depth = p == 2 ? 5 : 3;
        auto reps = square_class_reps(p);
        for (const auto& a : reps) {
            t.check(hilbert_symbol(a, -a, p) == 1, at(p) + " (a,-a) a=" + to_string(a));
            for (const auto& b : reps) {
                std::string ab = at(p) + " a=" + to_string(a) + " b=" + to_string(b);
                t.check(hilbert_symbol(a, b, p) == hilbert_oracle(a, b, p, depth), "oracle " + ab);
                for (const auto& c : reps)
                    t.check(hilbert_symbol(a, b * c, p) == hilbert_symbol(a, b, p) * hilbert_symbol(a, c, p),
                            "bimultiplicative " + ab);
            }
        }
    }
    t.fill(r);
    r.parameters = {{"primes", prime_list(primes)}};
    return r;
}

CheckReport cocycle_identity(const std::vector<long>& primes, int triples, std::uint64_t seed) {
    if (primes.empty()) return skip("meta.cocycle", "metaplectic 2-cocycle", "no odd prime configured");
    CheckReport r{"meta.cocycle", "metaplectic 2-cocycle"};
    Tally t;
    for (long p : primes) {
        std::mt19937_64 g(seed * 1000 + p);
        for (int k = 0; k < triples; ++k) {
            Mat2 a = random_sl2(g, p, -3, 3), b = random_sl2(g, p, -3, 3), c = random_sl2(g, p, -3, 3);
            t.check(cocycle(a, b, p) * cocycle(a * b, c, p) == cocycle(a, b * c, p) * cocycle(b, c, p),
                    at(p) + " triple " + std::to_string(k));
        }
    }
    t.fill(r);
    r.parameters = {{"primes", prime_list(primes)}, {"triples_per_prime", triples}};
    return r;
}

CheckReport mu_law(const std::vector<long>& primes) {
    if (primes.empty()) return skip("meta.mu_law", "mu_psi character law", "no odd prime configured");
    CheckReport r{"meta.mu_law", "mu_psi character law"};
    Tally t;
    for (long p : primes)
        for (int s : {1, -1}) {
            AdditiveCharacter psi{p, 0, s};
            auto reps = square_class_reps(p);
            for (const auto& a : reps)
                for (const auto& b : reps)
                    t.check(mu_psi(psi, a) * mu_psi(psi, b) ==
                                mu_psi(psi, a * b) * Cyclotomic(Rational(hilbert_symbol(a, b, p))),
                            at(p) + " sign=" + std::to_string(s) + " a=" + to_string(a) + " b=" + to_string(b));
        }
    t.fill(r);
    r.parameters = {{"primes", prime_list(primes)}, {"psi_signs", {1, -1}}};
    return r;
}

CheckReport weil_representation(const std::vector<long>& primes, const std::vector<long>& ms, std::uint64_t seed) {
    if (primes.empty()) return skip("meta.weil_rep", "Weil representation", "no odd prime configured");
    CheckReport r{"meta.weil_rep", "Weil representation"};
    Tally t;
    for (long p : primes) {
        for (int s : {1, -1}) {
            AdditiveCharacter psi{p, 0, s};
            std::mt19937_64 g(seed * 1000 + p * 7 + s);
            for (int k = 0; k < 10; ++k) {
                MetaElement a = random_meta(g, p), b = random_meta(g, p);
                StepFunction f = random_step(g, p);
                t.check(weil_op(a, weil_op(b, f, psi), psi) == weil_op(meta_mul(a, b, p), f, psi),
                        at(p) + " product law");
            }
            StepFunction f = random_step(g, p);
            t.check(weil_op({Mat2::identity(2), -1}, f, psi) == f.scaled(Cyclotomic(-1)), at(p) + " genuine");
        }
        for (long m : ms) {
            auto rep = check_indicator_identities(p, m, 10, seed);
            t.check(rep.unipotent_upper, at(p, m) + " n(b) on phi^m");
            t.check(rep.unipotent_lower, at(p, m) + " nbar(x) on phi^m");
            t.check(rep.weyl, at(p, m) + " w2 on phi^m");
            t.check(rep.weyl_vanishes_outside, at(p, m) + " w2 support");
        }
    }
    t.fill(r);
    r.parameters = {{"primes", prime_list(primes)}, {"m", ms}};
    return r;
}

CheckReport intertwined_sections(const std::vector<long>& primes, const std::vector<long>& radii) {
    if (primes.empty()) return skip("zeta.intertwined", "intertwined section value", "no odd prime configured");
    CheckReport r{"zeta.intertwined", "intertwined section value"};
    json exp = json::array(), got = json::array();
    bool ok = true;
    for (long p : primes)
        for (long rad : radii) {
            EtaCharacter eta{p};
            long i0 = section_threshold(rad, eta);
            for (long i = i0; i <= i0 + 1; ++i)
                for (const Rational& x0 : {Rational(0), p_power(p, -rad), Rational(2 * p_power(p, -rad))}) {
                    Cyclotomic v = intertwined_section_value(i, eta, x0, rad).constant_at(p);
                    Cyclotomic want = FormalScalar::q_power(-3 * i).constant_at(p);
                    std::string tag = at(p, -1, i) + " r=" + std::to_string(rad) + " x0=" + to_string(x0) + ": ";
                    exp.push_back(tag + exact_str(want, p));
                    got.push_back(tag + exact_str(v, p));
                    ok = ok && v == want;
                }
        }
    r.parameters = {{"primes", prime_list(primes)}, {"radii", radii}, {"eta", "unramified"}};
    r.expected = exp;
    r.computed = got;
    r.pass = ok;
    return r;
}

CheckReport ramified_zeta(const std::vector<long>& primes, const std::vector<std::pair<long, long>>& grid) {
    if (primes.empty()) return skip("zeta.ramified", "ramified zeta value", "no odd prime configured");
    CheckReport r{"zeta.ramified", "ramified zeta value"};
    json exp = json::array(), got = json::array();
    bool ok = true;
    for (long p : primes)
        for (auto [m, i] : grid) {
            Cyclotomic v = ramified_zeta_value(m, i, p).constant_at(p);
            Cyclotomic want = FormalScalar::q_power(-3 * i - m).constant_at(p);
            exp.push_back(at(p, m, i) + ": " + exact_str(want, p));
            got.push_back(at(p, m, i) + ": " + exact_str(v, p));
            ok = ok && v == want;
        }
    json g = json::array();
    for (auto [m, i] : grid) g.push_back({m, i});
    r.parameters = {{"primes", prime_list(primes)}, {"grid_m_i", g}};
    r.expected = exp;
    r.computed = got;
    r.pass = ok;
    return r;
}

CheckReport howe_scaffolding(const std::vector<long>& primes, const std::vector<long>& ms, int pairs, long collisions,
                             std::uint64_t seed) {
    if (primes.empty()) return skip("so4.howe", "Howe characters and model Whittaker function", "no odd prime configured");
    CheckReport r{"so4.howe", "Howe characters and model Whittaker function"};
    Tally t;
    for (long p : primes)
        for (long m : ms) {
            HoweLevel L{p, m};
            std::mt19937_64 g(seed * 1000 + p * 10 + m);
            for (int k = 0; k < pairs; ++k) {
                QMat k1 = random_K(g, L), k2 = random_K(g, L);
                t.check(howe_character(L, k1 * k2, HoweCharacter::tau) ==
                            howe_character(L, k1, HoweCharacter::tau) * howe_character(L, k2, HoweCharacter::tau),
                        at(p, m) + " tau multiplicative");
                QMat u = random_U_m(g, L);
                t.check(howe_character(L, u, HoweCharacter::psi_m) == howe_character(L, u, HoweCharacter::psi_U),
                        at(p, m) + " psi_m = psi_U on U_m");
            }
            try {
                ModelHoweWhittaker W(L);
                t.check(W.certify(collisions, seed + p * 10 + m) == collisions, at(p, m) + " certificate count");
            } catch (const ModelInconsistency& e) {
                t.check(false, at(p, m) + " certificate: " + e.what());
            }
        }
    t.fill(r);
    r.parameters = {{"primes", prime_list(primes)}, {"m", ms}, {"pairs", pairs}, {"collisions", collisions}};
    return r;
}

CheckReport gso4_structure(int samples, std::uint64_t seed) {
    CheckReport r{"so4.gso4", "GSO4 as GL2 x GL2 mod the diagonal"};
    Tally t;
    std::mt19937_64 g(seed * 1000 + 23);
    for (int k = 0; k < samples; ++k) {
        QMat h1 = rnd_gl2(g), h2 = rnd_gl2(g);
        QMat A = iota_alpha(h1), B = iota_beta(h2);
        t.check(A * B == B * A, "images commute");
        t.check(classify(A).lambda == h1.det(), "lambda(iota_alpha(h)) = det h");
        t.check(classify(B).lambda == h2.det(), "lambda(iota_beta(h)) = det h");
        auto sp = gso4_split(A * B);
        t.check(iota_alpha(sp.h1) * iota_beta(sp.h2) == A * B, "split round trip");
        // (h1, h2) and the split differ by some (a, 1/a)
        Rational a;
        for (int i = 0; i < 2 && a == 0; ++i)
            for (int j = 0; j < 2; ++j)
                if (sp.h1(i, j) != 0) { a = h1(i, j) / sp.h1(i, j); break; }
        t.check(h1 == a * sp.h1 && h2 == (1 / a) * sp.h2, "split unique mod the diagonal");
        t.check(outer_c<Rational>() * A * outer_c<Rational>() == iota_beta(h1), "c iota_alpha(g) c = iota_beta(g)");
    }
    t.fill(r);
    r.parameters = {{"samples", samples}};
    return r;
}

CheckReport outer_shadow(const Rational& a, const Rational& b) {
    CheckReport r{"zeta.outer_shadow", "unramified L-factor separates a Satake parameter from its c-conjugate"};
    LFactor x = lfactor_wedge_plus(SatakeParams::numeric(a, b));
    LFactor y = lfactor_wedge_plus(SatakeParams::numeric(a, 1 / b));
    r.parameters = {{"a", to_string(a)}, {"b", to_string(b)}};
    r.expected = "inverse-root multisets differ";
    r.computed = x.str() + " vs " + y.str();
    r.pass = !same_inverse_roots(x, y);
    return r;
}

CheckReport bruhat_roundtrip(int samples, std::uint64_t seed) {
    CheckReport r{"so4.bruhat", "Bruhat decomposition of SO4"};
    Tally t;
    std::mt19937_64 g(seed * 1000 + 17);
    for (int k = 0; k < samples; ++k) {
        WeylWord w = kWords[k % 4];
        QMat x = torus(rnd_nonzero(g), rnd_nonzero(g)) * unipotent(rnd(g), rnd(g)) * weyl<Rational>(w) *
                 unipotent(rnd(g), rnd(g));
        auto f = bruhat_factor(x);
        t.check(f.w == w, std::string("cell of ") + weyl_name(w));
        t.check(f.b1 * weyl<Rational>(f.w) * f.u2 == x, "factorization multiplies back");
    }
    t.fill(r);
    r.parameters = {{"samples", samples}};
    return r;
}

CheckReport padic_precision(const std::vector<long>& primes, long N) {
    CheckReport r{"padic.precision", "Hilbert symbol at finite p-adic precision"};
    Tally t;
    for (long p : primes) {
        auto reps = square_class_reps(p);
        for (const auto& a : reps)
            for (const auto& b : reps) {
                auto pa = PadicNumber::from_rational(a, p, static_cast<int>(N));
                auto pb = PadicNumber::from_rational(b, p, static_cast<int>(N));
                t.check(hilbert_symbol(pa, pb) == hilbert_symbol(a, b, p), at(p) + " truncated inputs");
            }
    }
    t.fill(r);
    r.parameters = {{"primes", prime_list(primes)}, {"precision", N}};
    return r;
}

CheckReport unramified_factors(const std::vector<long>& primes, long kmax) {
    if (primes.empty()) return skip("zeta.unramified_factors", "torus factors of the unramified integral", "no odd prime configured");
    CheckReport r{"zeta.unramified_factors", "torus factors of the unramified integral"};
    Tally t;
    for (long p : primes) {
        auto rep = check_unramified_factors(p, kmax);
        t.check(rep.mu_trivial_on_units, at(p) + " mu(u) = 1");
        t.check(rep.mu_square_is_chi, at(p) + " mu(p^k)^2 = chi(p)^k");
        t.check(rep.weil_torus_value, at(p) + " Weil torus value");
        t.check(rep.chi_squared_trivial, at(p) + " chi(p)^2 = 1");
    }
    t.fill(r);
    r.parameters = {{"primes", prime_list(primes)}, {"kmax", kmax}};
    return r;
}

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    std::vector<long> odd = cfg.odd_primes();
    std::vector<long> hil{2};
    for (long p : odd) hil.push_back(p);
    // run in order; on one core a pool buys nothing
    std::vector<CheckReport> out{
        wedge_split(),
        wedge_intertwiner(),
        cs_identity(cfg.order),
        hilbert_grid(hil),
        padic_precision(hil, cfg.precision),
        cocycle_identity(odd, 1000, cfg.seed),
        mu_law(odd),
        weil_representation(odd, {1, 2}, cfg.seed),
        intertwined_sections(odd, {0, 1}),
        ramified_zeta(odd, cfg.howe_grid),
        howe_scaffolding(odd, {1, 2}, 100, 500, cfg.seed),
        gso4_structure(100, cfg.seed),
        bruhat_roundtrip(100, cfg.seed),
        outer_shadow(Rational(2), Rational(3)),
        unramified_factors(odd, 3),
    };
    std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
    return out;
}

json suite_json(const SuiteConfig& cfg, const std::vector<CheckReport>& reports) {
    json checks = json::array();
    for (const auto& r : reports) checks.push_back(r.to_json());
    return {{"version", "1.0"}, {"config", cfg.to_json()}, {"checks", checks}};
}

bool all_pass(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

}  // namespace so4lab::checks
