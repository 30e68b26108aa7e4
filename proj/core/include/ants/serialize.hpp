#pragma once

// Canonical JSON views of protocol state. Maps iterate in key order and
// amounts are decimal strings, so dump() output is byte-stable and hashable.

#include <nlohmann/json.hpp>

#include "ants/state.hpp"

namespace ants {

using OrderedJson = nlohmann::ordered_json;

OrderedJson to_json(const AntReview& review);
OrderedJson to_json(const GroupParams& params);
OrderedJson to_json(const GroupParams& params, const Note& note);
OrderedJson to_json(const VoteTally& tally);
OrderedJson to_json(const State& state);

/// Inverse of to_json(State). Throws std::invalid_argument.
State state_from_json(const nlohmann::json& json);
GroupParams params_from_json(const nlohmann::json& json);

/// sha256 of the compact canonical dump.
Hash32 digest_of(const State& state);

}  // namespace ants
