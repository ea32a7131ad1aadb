#ifndef STARKRANKIN_SCENARIO_HPP
#define STARKRANKIN_SCENARIO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "starkrankin/factors.hpp"

namespace starkrankin {

struct PrecisionSettings {
    long padic_digits = 30;
    long q_truncation = 200;
    long complex_bits = 256;
};

struct ScenarioInputs {
    std::optional<std::pair<Rat, Rat>> heegner_point;
    std::optional<PadicNumber> iterated_integral;
    std::optional<PadicNumber> unit_log;
};

// Input description of one verification run, loaded from JSON.
struct Scenario {
    std::vector<long> curve; // [a1, a2, a3, a4, a6]
    long conductor = 0;
    long D_K = 0;
    long c = 1;
    std::vector<long> psi_exponents;
    long p = 0;
    PrecisionSettings precision;
    ScenarioInputs inputs;
    unsigned long seed = 1;

    static Scenario from_json(const nlohmann::json &j);
    static Scenario load_file(const std::string &path);

    // the scenario as it will be echoed into reports (canonical key order)
    nlohmann::json echo_json() const;

    // validate and derive everything the factor layer needs
    FactorScenario build() const;
};

// exact rational <-> string ("a" or "a/b")
Rat parse_rational(const std::string &text);
std::string rational_to_string(const Rat &x);

// p-adic <-> JSON {"p", "val", "digits", "prec"}
nlohmann::json padic_to_json(const PadicNumber &x);
PadicNumber padic_from_json(const nlohmann::json &j);

} // namespace starkrankin

#endif
