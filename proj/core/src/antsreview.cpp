#include "ants/antsreview.hpp"

#include <algorithm>
#include <string>

#include "ants/poe.hpp"
#include "ants/state.hpp"

namespace ants {

bool AntReview::is_issuer(const Address& who) const {
  return std::find(issuers.begin(), issuers.end(), who) != issuers.end();
}

bool AntReview::is_reviewer(const Address& who) const {
  return std::any_of(fulfillments.begin(), fulfillments.end(),
                     [&](const Fulfillment& f) { return f.reviewer == who; });
}

namespace antsreview {

namespace {

std::vector<Address> normalize_issuers(const std::vector<Address>& issuers) {
  if (issuers.empty()) throw ProtocolError("empty_issuers");
  std::vector<Address> out;
  for (const auto& who : issuers) {
    if (who.is_zero()) throw ProtocolError("zero_address", "issuer");
    if (std::find(out.begin(), out.end(), who) == out.end()) out.push_back(who);
  }
  return out;
}

std::string join(const std::vector<Address>& addrs) {
  std::string out;
  for (const auto& a : addrs) {
    if (!out.empty()) out += ',';
    out += a.hex();
  }
  return out;
}

void require_issuer(const AntReview& review, const Address& who) {
  if (!review.is_issuer(who)) throw ProtocolError("not_issuer");
}

Fulfillment& find_fulfillment(AntReview& review, FulfillmentId id) {
  if (id >= review.fulfillments.size()) throw ProtocolError("unknown_fulfillment");
  return review.fulfillments[id];
}

void pay_out(State& state, Tx& tx, AntReview& review, const Address& to, Amount amount) {
  if (amount > review.balance) throw ProtocolError("exceeds_balance");
  state.token.move(tx, escrow_address(), to, amount);
  review.balance = review.balance.minus(amount);
}

}  // namespace

const AntReview& find(const State& state, AntReviewId id) {
  if (id >= state.antreviews.size()) throw ProtocolError("unknown_antreview", std::to_string(id));
  return state.antreviews[id];
}

AntReview& find(State& state, AntReviewId id) {
  if (id >= state.antreviews.size()) throw ProtocolError("unknown_antreview", std::to_string(id));
  return state.antreviews[id];
}

AntReviewId issue_ant_review(State& state, Tx& tx, const IssueParams& params) {
  state.roles.require_not_paused();
  state.roles.require_role(Role::Issuer, tx.sender());
  auto issuers = normalize_issuers(params.issuers);
  if (std::find(issuers.begin(), issuers.end(), tx.sender()) == issuers.end()) {
    throw ProtocolError("sender_not_issuer");
  }
  if (params.approver.is_zero()) throw ProtocolError("zero_address", "approver");
  if (params.deadline <= tx.now()) throw ProtocolError("invalid_deadline");

  AntReview review;
  review.id = state.antreviews.size();
  review.issuers = std::move(issuers);
  review.approvers.insert(params.approver);
  review.paper_hash = params.paper_hash;
  review.requirements_hash = params.requirements_hash;
  review.deadline = params.deadline;

  poe::notarize(state, tx, review.paper_hash);
  poe::notarize(state, tx, review.requirements_hash);
  tx.emit("AntReviewIssued", {{"id", std::to_string(review.id)},
                              {"issuers", join(review.issuers)},
                              {"approver", params.approver.hex()},
                              {"paper_hash", review.paper_hash.hex()},
                              {"requirements_hash", review.requirements_hash.hex()},
                              {"deadline", std::to_string(review.deadline)}});
  state.antreviews.push_back(std::move(review));
  return state.antreviews.back().id;
}

void change_ant_review(State& state, Tx& tx, AntReviewId id, const ChangeParams& params) {
  state.roles.require_not_paused();
  auto& review = find(state, id);
  require_issuer(review, tx.sender());
  auto issuers = normalize_issuers(params.issuers);
  for (const auto& who : issuers) {
    if (review.is_reviewer(who)) throw ProtocolError("conflict_of_interest", "issuer is a reviewer");
  }

  review.issuers = std::move(issuers);
  review.paper_hash = params.paper_hash;
  review.requirements_hash = params.requirements_hash;
  review.deadline = params.deadline;
  poe::notarize(state, tx, review.paper_hash);
  poe::notarize(state, tx, review.requirements_hash);
  tx.emit("AntReviewChanged", {{"id", std::to_string(id)},
                               {"issuers", join(review.issuers)},
                               {"paper_hash", review.paper_hash.hex()},
                               {"requirements_hash", review.requirements_hash.hex()},
                               {"deadline", std::to_string(review.deadline)},
                               {"fulfillments", std::to_string(review.fulfillments.size())}});
}

void add_approver(State& state, Tx& tx, AntReviewId id, const Address& who) {
  state.roles.require_not_paused();
  auto& review = find(state, id);
  require_issuer(review, tx.sender());
  if (who.is_zero()) throw ProtocolError("zero_address", "approver");
  if (review.is_reviewer(who)) throw ProtocolError("conflict_of_interest", "approver is a reviewer");
  review.approvers.insert(who);
  tx.emit("ApproverAdded", {{"id", std::to_string(id)}, {"approver", who.hex()}});
}

void remove_approver(State& state, Tx& tx, AntReviewId id, const Address& who) {
  state.roles.require_not_paused();
  auto& review = find(state, id);
  require_issuer(review, tx.sender());
  review.approvers.erase(who);
  tx.emit("ApproverRemoved", {{"id", std::to_string(id)}, {"approver", who.hex()}});
  bool pending = std::any_of(review.fulfillments.begin(), review.fulfillments.end(),
                             [](const Fulfillment& f) { return !f.accepted; });
  if (review.approvers.empty() && pending) tx.emit("WarnNoApprover", {{"id", std::to_string(id)}});
}

void contribute(State& state, Tx& tx, AntReviewId id, Amount amount) {
  state.roles.require_not_paused();
  auto& review = find(state, id);
  if (amount.is_zero()) throw ProtocolError("zero_amount");
  if (tx.now() >= review.deadline) throw ProtocolError("deadline_passed");

  const Address escrow = escrow_address();
  Amount allowed = state.token.allowance(tx.sender(), escrow);
  if (allowed < amount) throw ProtocolError("insufficient_allowance");
  state.token.move(tx, tx.sender(), escrow, amount);
  state.token.set_allowance(tx.sender(), escrow, allowed.minus(amount));

  review.balance = review.balance.plus(amount);
  review.contributions.push_back(Contribution{tx.sender(), amount, false});
  tx.emit("Contributed", {{"id", std::to_string(id)},
                          {"contributor", tx.sender().hex()},
                          {"amount", amount.str()},
                          {"index", std::to_string(review.contributions.size() - 1)}});
}

FulfillmentId fulfill_ant_review(State& state, Tx& tx, AntReviewId id, const ContentHash& review_hash) {
  state.roles.require_not_paused();
  auto& review = find(state, id);
  state.roles.require_role(Role::PeerReviewer, tx.sender());
  if (tx.now() >= review.deadline) throw ProtocolError("deadline_passed");
  if (review.is_issuer(tx.sender()) || review.is_approver(tx.sender())) {
    throw ProtocolError("conflict_of_interest");
  }

  Fulfillment fulfillment;
  fulfillment.id = review.fulfillments.size();
  fulfillment.reviewer = tx.sender();
  fulfillment.versions.push_back(ReviewVersion{review_hash, tx.now()});
  review.fulfillments.push_back(std::move(fulfillment));

  poe::notarize(state, tx, review_hash);
  tx.emit("Fulfilled", {{"id", std::to_string(id)},
                        {"fulfillment_id", std::to_string(review.fulfillments.back().id)},
                        {"reviewer", tx.sender().hex()},
                        {"review_hash", review_hash.hex()}});
  return review.fulfillments.back().id;
}

void update_review(State& state, Tx& tx, AntReviewId id, FulfillmentId fulfillment_id, const ContentHash& new_hash) {
  state.roles.require_not_paused();
  auto& review = find(state, id);
  auto& fulfillment = find_fulfillment(review, fulfillment_id);
  if (fulfillment.reviewer != tx.sender()) throw ProtocolError("not_reviewer");
  if (fulfillment.accepted) throw ProtocolError("already_accepted");
  if (tx.now() >= review.deadline) throw ProtocolError("deadline_passed");

  fulfillment.versions.push_back(ReviewVersion{new_hash, tx.now()});
  poe::notarize(state, tx, new_hash);
  tx.emit("ReviewUpdated", {{"id", std::to_string(id)},
                            {"fulfillment_id", std::to_string(fulfillment_id)},
                            {"review_hash", new_hash.hex()},
                            {"version", std::to_string(fulfillment.versions.size() - 1)}});
}

void accept_ant_review(State& state, Tx& tx, AntReviewId id, FulfillmentId fulfillment_id, Amount amount) {
  state.roles.require_not_paused();
  auto& review = find(state, id);
  if (!review.is_approver(tx.sender())) throw ProtocolError("not_approver");
  auto& fulfillment = find_fulfillment(review, fulfillment_id);
  if (fulfillment.accepted) throw ProtocolError("already_accepted");
  if (amount.is_zero()) throw ProtocolError("zero_amount");

  pay_out(state, tx, review, fulfillment.reviewer, amount);
  fulfillment.accepted = true;
  fulfillment.paid = amount;
  review.total_paid = review.total_paid.plus(amount);
  tx.emit("Accepted", {{"id", std::to_string(id)},
                       {"fulfillment_id", std::to_string(fulfillment_id)},
                       {"reviewer", fulfillment.reviewer.hex()},
                       {"amount", amount.str()}});
}

void refund(State& state, Tx& tx, AntReviewId id, std::uint64_t contribution_index) {
  state.roles.require_not_paused();
  auto& review = find(state, id);
  if (contribution_index >= review.contributions.size()) throw ProtocolError("unknown_contribution");
  auto& contribution = review.contributions[contribution_index];
  if (contribution.contributor != tx.sender()) throw ProtocolError("not_contributor");
  if (tx.now() < review.deadline) throw ProtocolError("before_deadline");
  if (!review.fulfillments.empty()) throw ProtocolError("has_fulfillments");
  if (contribution.refunded) throw ProtocolError("already_refunded");

  pay_out(state, tx, review, contribution.contributor, contribution.amount);
  contribution.refunded = true;
  tx.emit("Refunded", {{"id", std::to_string(id)},
                       {"index", std::to_string(contribution_index)},
                       {"contributor", contribution.contributor.hex()},
                       {"amount", contribution.amount.str()}});
}

void withdraw_ant_review(State& state, Tx& tx, AntReviewId id, Amount amount) {
  state.roles.require_not_paused();
  auto& review = find(state, id);
  require_issuer(review, tx.sender());
  if (tx.now() < review.deadline) throw ProtocolError("before_deadline");

  pay_out(state, tx, review, tx.sender(), amount);
  review.total_withdrawn = review.total_withdrawn.plus(amount);
  tx.emit("Withdrawn", {{"id", std::to_string(id)},
                        {"issuer", tx.sender().hex()},
                        {"amount", amount.str()},
                        {"balance", review.balance.str()}});
}

}  // namespace antsreview
}  // namespace ants
