#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "ants/event.hpp"
#include "ants/types.hpp"

namespace ants {

struct State;

using AntReviewId = std::uint64_t;
using FulfillmentId = std::uint64_t;

struct Contribution {
  Address contributor;
  Amount amount;
  bool refunded = false;

  friend bool operator==(const Contribution&, const Contribution&) = default;
};

struct ReviewVersion {
  ContentHash hash;
  Timestamp submitted = 0;

  friend bool operator==(const ReviewVersion&, const ReviewVersion&) = default;
};

struct Fulfillment {
  FulfillmentId id = 0;
  Address reviewer;
  std::vector<ReviewVersion> versions;
  bool accepted = false;
  Amount paid;

  friend bool operator==(const Fulfillment&, const Fulfillment&) = default;
};

struct AntReview {
  AntReviewId id = 0;
  std::vector<Address> issuers;  // insertion ordered, unique
  std::set<Address> approvers;
  ContentHash paper_hash;
  ContentHash requirements_hash;
  Timestamp deadline = 0;
  Amount balance;
  std::vector<Contribution> contributions;
  std::vector<Fulfillment> fulfillments;
  Amount total_paid;
  Amount total_withdrawn;

  bool is_issuer(const Address& who) const;
  bool is_approver(const Address& who) const { return approvers.contains(who); }
  bool is_reviewer(const Address& who) const;

  friend bool operator==(const AntReview&, const AntReview&) = default;
};

/// Bounty lifecycle. Every operation checks the circuit breaker first, then
/// authorization, then temporal and balance preconditions.
namespace antsreview {

struct IssueParams {
  std::vector<Address> issuers;
  Address approver;
  ContentHash paper_hash;
  ContentHash requirements_hash;
  Timestamp deadline = 0;
};

struct ChangeParams {
  std::vector<Address> issuers;
  ContentHash paper_hash;
  ContentHash requirements_hash;
  Timestamp deadline = 0;
};

AntReviewId issue_ant_review(State& state, Tx& tx, const IssueParams& params);
void change_ant_review(State& state, Tx& tx, AntReviewId id, const ChangeParams& params);
void add_approver(State& state, Tx& tx, AntReviewId id, const Address& who);
void remove_approver(State& state, Tx& tx, AntReviewId id, const Address& who);
void contribute(State& state, Tx& tx, AntReviewId id, Amount amount);
FulfillmentId fulfill_ant_review(State& state, Tx& tx, AntReviewId id, const ContentHash& review_hash);
void update_review(State& state, Tx& tx, AntReviewId id, FulfillmentId fulfillment_id, const ContentHash& new_hash);
void accept_ant_review(State& state, Tx& tx, AntReviewId id, FulfillmentId fulfillment_id, Amount amount);
void refund(State& state, Tx& tx, AntReviewId id, std::uint64_t contribution_index);
void withdraw_ant_review(State& state, Tx& tx, AntReviewId id, Amount amount);

/// Throws ProtocolError("unknown_antreview").
const AntReview& find(const State& state, AntReviewId id);
AntReview& find(State& state, AntReviewId id);

}  // namespace antsreview
}  // namespace ants
