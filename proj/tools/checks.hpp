#pragma once
// Verification checks shared by the so4lab CLI and the acceptance runner.
#include "json.hpp"
#include "so4lab/cyclotomic.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace so4lab::checks {

using json = nlohmann::ordered_json;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
    std::vector<long> primes{3, 5, 7};
    long precision = 20;
    int order = 30;
    std::vector<std::pair<long, long>> howe_grid{{1, 2}, {1, 3}, {2, 2}, {2, 3}};  // (m, i)
    std::uint64_t seed = 1;

    std::vector<long> odd_primes() const;
    json to_json() const;
    // throws ConfigError
    void validate() const;
};

// merge a JSON object into cfg; unknown keys are errors
void apply_json(SuiteConfig& cfg, const json& j);
// SO4LAB_PRIMES, SO4LAB_PRECISION, SO4LAB_ORDER, SO4LAB_HOWE_GRID, SO4LAB_SEED
void apply_env(SuiteConfig& cfg);
std::vector<long> parse_prime_list(const std::string& s);            // "3,5,7"
std::vector<std::pair<long, long>> parse_grid(const std::string& s);  // "1:2,2:3"

struct CheckReport {
    std::string id;
    std::string anchor;
    json parameters = json::object();
    json expected;
    json computed;
    bool pass = false;
    std::string skipped;  // reason; empty if the check ran
    json to_json() const;
};

// "p^e*u/v" with u/v prime to p; "p^e" when u/v = 1, "u/v" when e = 0
std::string exact_str(const Rational& r, long p);
// rational values as above, anything else as a coefficient list
std::string exact_str(const Cyclotomic& c, long p);

CheckReport wedge_split();
CheckReport wedge_intertwiner();
CheckReport cs_identity(int K);
CheckReport hilbert_grid(const std::vector<long>& primes);
CheckReport cocycle_identity(const std::vector<long>& primes, int triples, std::uint64_t seed);
CheckReport mu_law(const std::vector<long>& primes);
CheckReport weil_representation(const std::vector<long>& primes, const std::vector<long>& ms, std::uint64_t seed);
CheckReport intertwined_sections(const std::vector<long>& primes, const std::vector<long>& radii);
CheckReport ramified_zeta(const std::vector<long>& primes, const std::vector<std::pair<long, long>>& grid);
CheckReport howe_scaffolding(const std::vector<long>& primes, const std::vector<long>& ms, int pairs, long collisions,
                             std::uint64_t seed);
CheckReport gso4_structure(int samples, std::uint64_t seed);
CheckReport outer_shadow(const Rational& a, const Rational& b);
CheckReport bruhat_roundtrip(int samples, std::uint64_t seed);
CheckReport padic_precision(const std::vector<long>& primes, long N);
CheckReport unramified_factors(const std::vector<long>& primes, long kmax);

// checks in id order; deterministic for a fixed config
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);
json suite_json(const SuiteConfig& cfg, const std::vector<CheckReport>& reports);
bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace so4lab::checks
