#include "ants/voting.hpp"

#include <string>

#include "ants/confidential.hpp"
#include "ants/state.hpp"

namespace ants {

std::optional<VoteDirection> parse_direction(std::string_view text) {
  if (text == "up") return VoteDirection::Up;
  if (text == "down") return VoteDirection::Down;
  return std::nullopt;
}

std::map<FulfillmentId, Amount> proportional_payouts(Amount pool,
                                                     const std::map<FulfillmentId, std::uint64_t>& scores) {
  BigInt total = 0;
  for (const auto& [id, score] : scores) total += score;
  if (total == 0) return {};

  BigInt pool_big = 0;
  {
    auto units = pool.units();
    pool_big = BigInt(static_cast<std::uint64_t>(units >> 64));
    pool_big <<= 64;
    pool_big += BigInt(static_cast<std::uint64_t>(units));
  }

  std::map<FulfillmentId, Amount> payouts;
  Amount distributed;
  FulfillmentId leader = scores.begin()->first;
  std::uint64_t best = 0;
  for (const auto& [id, score] : scores) {
    BigInt share = pool_big * score / total;
    // share <= pool, so it fits in 128 bits.
    auto hi = static_cast<std::uint64_t>(share >> 64);
    auto lo = static_cast<std::uint64_t>(share & BigInt("0xffffffffffffffff"));
    Amount amount{(static_cast<Amount::Rep>(hi) << 64) | lo};
    payouts[id] = amount;
    distributed = distributed.plus(amount);
    if (score > best) {
      best = score;
      leader = id;
    }
  }
  payouts[leader] = payouts[leader].plus(pool.minus(distributed));
  return payouts;
}

namespace voting {

namespace {
VoteTally& find_mut(State& state, AntReviewId id) {
  auto it = state.voting.find(id);
  if (it == state.voting.end()) throw ProtocolError("no_tally");
  return it->second;
}
}  // namespace

const VoteTally& find_tally(const State& state, AntReviewId id) {
  auto it = state.voting.find(id);
  if (it == state.voting.end()) throw ProtocolError("no_tally");
  return it->second;
}

void open_voting(State& state, Tx& tx, AntReviewId id, Amount pool) {
  state.roles.require_not_paused();
  auto& review = antsreview::find(state, id);
  if (!review.is_issuer(tx.sender())) throw ProtocolError("not_issuer");
  if (tx.now() < review.deadline) throw ProtocolError("before_deadline");
  if (review.fulfillments.empty()) throw ProtocolError("no_fulfillments");
  if (state.voting.contains(id)) throw ProtocolError("already_open");
  if (pool > review.balance) throw ProtocolError("exceeds_balance");

  review.balance = review.balance.minus(pool);
  VoteTally tally;
  tally.antreview_id = id;
  tally.pool = pool;
  for (const auto& f : review.fulfillments) tally.counts[f.id] = VoteCount{};
  state.voting.emplace(id, std::move(tally));
  tx.emit("VotingOpened", {{"id", std::to_string(id)},
                           {"pool", pool.str()},
                           {"fulfillments", std::to_string(review.fulfillments.size())}});
}

void vote(State& state, Tx& tx, AntReviewId id, FulfillmentId fulfillment_id, VoteDirection direction) {
  state.roles.require_not_paused();
  auto& tally = find_mut(state, id);
  if (tally.finalized) throw ProtocolError("tally_closed");
  const auto& review = antsreview::find(state, id);
  if (fulfillment_id >= review.fulfillments.size()) throw ProtocolError("unknown_fulfillment");
  if (review.fulfillments[fulfillment_id].reviewer == tx.sender()) throw ProtocolError("self_vote");
  if (!tally.voted.emplace(tx.sender(), fulfillment_id).second) throw ProtocolError("double_vote");

  auto& count = tally.counts[fulfillment_id];
  if (direction == VoteDirection::Up) {
    ++count.up;
  } else {
    ++count.down;
  }
  tx.emit("Voted", {{"id", std::to_string(id)},
                    {"fulfillment_id", std::to_string(fulfillment_id)},
                    {"voter", tx.sender().hex()},
                    {"direction", direction == VoteDirection::Up ? "up" : "down"}});
}

std::map<FulfillmentId, Amount> finalize_voting(State& state, Tx& tx, AntReviewId id) {
  state.roles.require_not_paused();
  auto& tally = find_mut(state, id);
  auto& review = antsreview::find(state, id);
  if (!review.is_issuer(tx.sender()) && !review.is_approver(tx.sender())) throw ProtocolError("not_authorized");
  if (tally.finalized) throw ProtocolError("already_finalized");

  std::map<FulfillmentId, std::uint64_t> scores;
  for (const auto& f : review.fulfillments) {
    auto it = tally.counts.find(f.id);
    scores[f.id] = it == tally.counts.end() ? 0 : it->second.score();
  }
  auto payouts = proportional_payouts(tally.pool, scores);

  std::string summary;
  if (payouts.empty()) {
    review.balance = review.balance.plus(tally.pool);
  } else {
    for (const auto& [fid, amount] : payouts) {
      if (!amount.is_zero()) state.token.move(tx, escrow_address(), review.fulfillments[fid].reviewer, amount);
      if (!summary.empty()) summary += ',';
      summary += std::to_string(fid) + ":" + amount.str();
    }
    review.total_paid = review.total_paid.plus(tally.pool);
  }
  tally.finalized = true;
  tally.payouts = payouts;
  tx.emit("VotingFinalized", {{"id", std::to_string(id)},
                              {"payouts", summary},
                              {"restored", payouts.empty() ? tally.pool.str() : "0"}});
  return payouts;
}

}  // namespace voting
}  // namespace ants
