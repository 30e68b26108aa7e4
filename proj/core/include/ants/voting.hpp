#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <utility>

#include "ants/antsreview.hpp"
#include "ants/event.hpp"
#include "ants/types.hpp"

namespace ants {

struct State;

enum class VoteDirection { Up, Down };

std::optional<VoteDirection> parse_direction(std::string_view text);

struct VoteCount {
  std::uint64_t up = 0;
  std::uint64_t down = 0;

  /// max(up - down, 0)
  std::uint64_t score() const { return up > down ? up - down : 0; }

  friend bool operator==(const VoteCount&, const VoteCount&) = default;
};

struct VoteTally {
  AntReviewId antreview_id = 0;
  Amount pool;
  std::map<FulfillmentId, VoteCount> counts;
  std::set<std::pair<Address, FulfillmentId>> voted;
  bool finalized = false;
  std::map<FulfillmentId, Amount> payouts;

  friend bool operator==(const VoteTally&, const VoteTally&) = default;
};

using VotingRegistry = std::map<AntReviewId, VoteTally>;

/// Splits `pool` in proportion to `scores`: floor(pool * s_i / sum(s)), with
/// the rounding remainder going to the highest score (lowest id on ties).
/// Returns an empty map when every score is zero.
std::map<FulfillmentId, Amount> proportional_payouts(Amount pool,
                                                     const std::map<FulfillmentId, std::uint64_t>& scores);

namespace voting {

void open_voting(State& state, Tx& tx, AntReviewId id, Amount pool);
void vote(State& state, Tx& tx, AntReviewId id, FulfillmentId fulfillment_id, VoteDirection direction);
std::map<FulfillmentId, Amount> finalize_voting(State& state, Tx& tx, AntReviewId id);

/// Throws ProtocolError("no_tally").
const VoteTally& find_tally(const State& state, AntReviewId id);

}  // namespace voting
}  // namespace ants
