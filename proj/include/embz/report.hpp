#pragma once

#include <nlohmann/json.hpp>

#include "embz/oracle.hpp"
#include "embz/protocol.hpp"

namespace embz {

/// {command, params, seed, cases:[{word, lhs, rhs, equal}], pass,
///  counts:{exhaustive, random, failed}, counterexample, elapsed_ms}
/// Everything except elapsed_ms is a function of the inputs alone.
nlohmann::json to_json(const SuiteReport& r);
nlohmann::json to_json(const VerificationCase& c);

}  // namespace embz
