#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "ramjump/jumps.hpp"
#include "ramjump/normalize.hpp"

namespace ramjump {

using Json = nlohmann::json;

// A parsed problem: owns the residue field that every series references.
struct Problem {
    std::unique_ptr<FqField> field;
    long long precision = 128;
    DefiningPair pair;
};

// Series wire format: list of [exponent, coeff] pairs, each coeff a length-d
// vector of integers mod p in the basis 1, g, ..., g^{d-1}.
Json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& j, const FqField& k);

Json rat_to_json(const Rat& r);

Json conditions_to_json(const ConditionsReport& rep);
Json profile_to_json(const JumpProfile& prof);
Json pair_to_json(const DefiningPair& pair);

// Input schema: {"p", "d", "modulus", "n", "a", "b", "precision"?, "seed"?}.
Problem problem_from_json(const Json& j, std::optional<long long> precision_override);
Problem problem_from_string(const std::string& text, std::optional<long long> precision_override);

} // namespace ramjump
