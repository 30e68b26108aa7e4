#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ants/access.hpp"
#include "ants/antsreview.hpp"
#include "ants/confidential.hpp"
#include "ants/types.hpp"
#include "ants/voting.hpp"

namespace ants {

/// One protocol call per transaction.
namespace calls {

struct Transfer {
  static constexpr std::string_view kName = "transfer";
  Address to;
  Amount amount;
};
struct Approve {
  static constexpr std::string_view kName = "approve";
  Address spender;
  Amount amount;
};
struct TransferFrom {
  static constexpr std::string_view kName = "transfer_from";
  Address owner;
  Address to;
  Amount amount;
};
struct FaucetDrip {
  static constexpr std::string_view kName = "faucet_drip";
};
struct GrantRole {
  static constexpr std::string_view kName = "grant_role";
  Role role = Role::Issuer;
  Address who;
};
struct RevokeRole {
  static constexpr std::string_view kName = "revoke_role";
  Role role = Role::Issuer;
  Address who;
};
struct Pause {
  static constexpr std::string_view kName = "pause";
};
struct Unpause {
  static constexpr std::string_view kName = "unpause";
};
struct Notarize {
  static constexpr std::string_view kName = "notarize";
  ContentHash hash;
};
struct IssueAntReview {
  static constexpr std::string_view kName = "issue_ant_review";
  antsreview::IssueParams params;
};
struct ChangeAntReview {
  static constexpr std::string_view kName = "change_ant_review";
  AntReviewId id = 0;
  antsreview::ChangeParams params;
};
struct AddApprover {
  static constexpr std::string_view kName = "add_approver";
  AntReviewId id = 0;
  Address who;
};
struct RemoveApprover {
  static constexpr std::string_view kName = "remove_approver";
  AntReviewId id = 0;
  Address who;
};
struct Contribute {
  static constexpr std::string_view kName = "contribute";
  AntReviewId id = 0;
  Amount amount;
};
struct FulfillAntReview {
  static constexpr std::string_view kName = "fulfill_ant_review";
  AntReviewId id = 0;
  ContentHash review_hash;
};
struct UpdateReview {
  static constexpr std::string_view kName = "update_review";
  AntReviewId id = 0;
  FulfillmentId fulfillment_id = 0;
  ContentHash review_hash;
};
struct AcceptAntReview {
  static constexpr std::string_view kName = "accept_ant_review";
  AntReviewId id = 0;
  FulfillmentId fulfillment_id = 0;
  Amount amount;
};
struct Refund {
  static constexpr std::string_view kName = "refund";
  AntReviewId id = 0;
  std::uint64_t contribution_index = 0;
};
struct WithdrawAntReview {
  static constexpr std::string_view kName = "withdraw_ant_review";
  AntReviewId id = 0;
  Amount amount;
};
struct Shield {
  static constexpr std::string_view kName = "shield";
  Amount amount;
  BigInt randomness;
};
struct JoinSplit {
  static constexpr std::string_view kName = "join_split";
  JoinSplitRequest request;
};
struct Unshield {
  static constexpr std::string_view kName = "unshield";
  std::uint64_t note_id = 0;
  std::uint64_t value = 0;
  BigInt randomness;
};
struct OpenVoting {
  static constexpr std::string_view kName = "open_voting";
  AntReviewId id = 0;
  Amount pool;
};
struct Vote {
  static constexpr std::string_view kName = "vote";
  AntReviewId id = 0;
  FulfillmentId fulfillment_id = 0;
  VoteDirection direction = VoteDirection::Up;
};
struct FinalizeVoting {
  static constexpr std::string_view kName = "finalize_voting";
  AntReviewId id = 0;
};

}  // namespace calls

using ProtocolCall =
    std::variant<calls::Transfer, calls::Approve, calls::TransferFrom, calls::FaucetDrip, calls::GrantRole,
                 calls::RevokeRole, calls::Pause, calls::Unpause, calls::Notarize, calls::IssueAntReview,
                 calls::ChangeAntReview, calls::AddApprover, calls::RemoveApprover, calls::Contribute,
                 calls::FulfillAntReview, calls::UpdateReview, calls::AcceptAntReview, calls::Refund,
                 calls::WithdrawAntReview, calls::Shield, calls::JoinSplit, calls::Unshield, calls::OpenVoting,
                 calls::Vote, calls::FinalizeVoting>;

std::string_view call_name(const ProtocolCall& call);
bool is_protocol_call(std::string_view name);
std::vector<std::string_view> protocol_call_names();

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Address argument: 0x-hex, "$escrow", or an account seed.
Address resolve_address(std::string_view text);
/// Hash argument: 0x + 64 hex, or any other string, which is hashed as
/// UTF-8 content.
ContentHash resolve_hash(std::string_view text);
/// Amount argument: JSON unsigned integer or a string accepted by
/// Amount::parse.
Amount resolve_amount(const nlohmann::json& value);

/// Decodes {op, args} into a call. Deadlines may be written "+<seconds>",
/// relative to `now`. Throws DecodeError for unknown names or bad arguments.
ProtocolCall decode_call(std::string_view op, const nlohmann::json& args, Timestamp now);

}  // namespace ants
