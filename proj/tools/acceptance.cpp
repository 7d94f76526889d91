// Runs the twelve acceptance criteria; one PASS/FAIL line each.
#include "checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace so4lab;
using namespace so4lab::checks;

namespace {

struct Criterion {
    const char* name;
    double budget_ms;
    std::function<CheckReport()> run;
};

}  // namespace

int main() {
    const std::uint64_t seed = 1;
    const std::vector<Criterion> criteria{
        {"exterior square split", 1000, [] { return wedge_split(); }},
        {"minus half twisted by c is the plus half", 1000, [] { return wedge_intertwiner(); }},
        {"unramified identity and L-ratio to order 30", 5000, [] { return cs_identity(30); }},
        {"Hilbert symbols p in {2,3,5,7}", 10000, [] { return hilbert_grid({2, 3, 5, 7}); }},
        {"2-cocycle on 1000 triples, p in {3,5}", 30000, [&] { return cocycle_identity({3, 5}, 1000, seed); }},
        {"mu_psi law, p in {3,5,7}", 30000, [] { return mu_law({3, 5, 7}); }},
        {"Weil representation and phi^m formulas", 30000, [&] { return weil_representation({3, 5}, {1, 2}, seed); }},
        {"intertwined section value q^-3i", 60000, [] { return intertwined_sections({3, 5, 7}, {0, 1}); }},
        {"ramified zeta value q^(-3i-m)", 60000,
         [] { return ramified_zeta({3, 5}, {{1, 2}, {1, 3}, {2, 2}, {2, 3}}); }},
        {"Howe characters and Whittaker certificate", 30000,
         [&] { return howe_scaffolding({3, 5}, {1, 2}, 100, 500, seed); }},
        {"GSO4 structure on 100 samples", 5000, [&] { return gso4_structure(100, seed); }},
        {"c-conjugate Satake parameters separated at (2,3)", 1000,
         [] { return outer_shadow(Rational(2), Rational(3)); }},
    };
    int failed = 0, n = 0;
    for (const auto& c : criteria) {
        ++n;
        auto t0 = std::chrono::steady_clock::now();
        CheckReport r;
        std::string err;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            err = e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        bool ok = err.empty() && r.pass && ms < c.budget_ms;
        if (!ok) ++failed;
        std::printf("%s %2d %s (%.0f ms, budget %.0f ms)", ok ? "PASS" : "FAIL", n, c.name, ms, c.budget_ms);
        if (!err.empty()) std::printf(": exception: %s", err.c_str());
        else if (!r.pass) std::printf(": %s", r.computed.dump().c_str());
        std::printf("\n");
    }
    std::printf("%d/%d criteria passed\n", n - failed, n);
    return failed ? 1 : 0;
}
