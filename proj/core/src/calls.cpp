#include "ants/calls.hpp"

#include <algorithm>
#include <string>

#include "ants/state.hpp"

namespace ants {

namespace {

using json = nlohmann::json;

const json& require(const json& args, const char* key) {
  if (!args.is_object() || !args.contains(key)) throw DecodeError(std::string("missing argument '") + key + "'");
  return args.at(key);
}

std::string as_string(const json& value, const char* key) {
  if (!value.is_string()) throw DecodeError(std::string("argument '") + key + "' must be a string");
  return value.get<std::string>();
}

std::uint64_t as_u64(const json& value, const char* key) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0) return value.get<std::uint64_t>();
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (!s.empty() && s.size() <= 20 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      try {
        return std::stoull(s);
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw DecodeError(std::string("argument '") + key + "' must be an unsigned 64-bit integer");
}

Address address_arg(const json& args, const char* key) { return resolve_address(as_string(require(args, key), key)); }

ContentHash hash_arg(const json& args, const char* key) { return resolve_hash(as_string(require(args, key), key)); }

Amount amount_arg(const json& args, const char* key) { return resolve_amount(require(args, key)); }

std::uint64_t u64_arg(const json& args, const char* key) { return as_u64(require(args, key), key); }

BigInt bigint_arg(const json& args, const char* key) {
  const auto& value = require(args, key);
  if (value.is_number_unsigned() || (value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    return BigInt(value.get<std::uint64_t>());
  }
  try {
    return parse_bigint(as_string(value, key));
  } catch (const std::invalid_argument& e) {
    throw DecodeError(std::string("argument '") + key + "': " + e.what());
  }
}

Role role_arg(const json& args) {
  auto name = as_string(require(args, "role"), "role");
  auto role = parse_role(name);
  if (!role) throw DecodeError("unknown role '" + name + "'");
  return *role;
}

Timestamp deadline_arg(const json& args, Timestamp now) {
  const auto& value = require(args, "deadline");
  if (value.is_string() && value.get_ref<const std::string&>().starts_with("+")) {
    auto delta = as_u64(json(value.get_ref<const std::string&>().substr(1)), "deadline");
    if (delta > ~Timestamp{0} - now) throw DecodeError("deadline overflows");
    return now + delta;
  }
  return as_u64(value, "deadline");
}

std::vector<Address> issuers_arg(const json& args) {
  const auto& value = require(args, "issuers");
  if (!value.is_array()) throw DecodeError("argument 'issuers' must be an array");
  std::vector<Address> out;
  for (const auto& v : value) out.push_back(resolve_address(as_string(v, "issuers")));
  return out;
}

JoinSplitRequest join_split_arg(const json& args) {
  JoinSplitRequest req;
  const auto& inputs = require(args, "inputs");
  if (!inputs.is_array()) throw DecodeError("argument 'inputs' must be an array");
  for (const auto& v : inputs) req.input_note_ids.push_back(as_u64(v, "inputs"));
  const auto& outputs = require(args, "outputs");
  if (!outputs.is_array()) throw DecodeError("argument 'outputs' must be an array");
  for (const auto& out : outputs) {
    req.output_commitments.push_back(bigint_arg(out, "commitment"));
    req.output_owners.push_back(address_arg(out, "owner"));
  }
  if (args.contains("delta_r")) req.delta_r = bigint_arg(args, "delta_r");
  return req;
}

using Decoder = ProtocolCall (*)(const json&, Timestamp);

struct Entry {
  std::string_view name;
  Decoder decode;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> kEntries = {
      {calls::Transfer::kName,
       [](const json& a, Timestamp) -> ProtocolCall { return calls::Transfer{address_arg(a, "to"), amount_arg(a, "amount")}; }},
      {calls::Approve::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         return calls::Approve{address_arg(a, "spender"), amount_arg(a, "amount")};
       }},
      {calls::TransferFrom::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         return calls::TransferFrom{address_arg(a, "owner"), address_arg(a, "to"), amount_arg(a, "amount")};
       }},
      {calls::FaucetDrip::kName, [](const json&, Timestamp) -> ProtocolCall { return calls::FaucetDrip{}; }},
      {calls::GrantRole::kName,
       [](const json& a, Timestamp) -> ProtocolCall { return calls::GrantRole{role_arg(a), address_arg(a, "who")}; }},
      {calls::RevokeRole::kName,
       [](const json& a, Timestamp) -> ProtocolCall { return calls::RevokeRole{role_arg(a), address_arg(a, "who")}; }},
      {calls::Pause::kName, [](const json&, Timestamp) -> ProtocolCall { return calls::Pause{}; }},
      {calls::Unpause::kName, [](const json&, Timestamp) -> ProtocolCall { return calls::Unpause{}; }},
      {calls::Notarize::kName,
       [](const json& a, Timestamp) -> ProtocolCall { return calls::Notarize{hash_arg(a, "hash")}; }},
      {calls::IssueAntReview::kName,
       [](const json& a, Timestamp now) -> ProtocolCall {
         return calls::IssueAntReview{{issuers_arg(a), address_arg(a, "approver"), hash_arg(a, "paper_hash"),
                                       hash_arg(a, "requirements_hash"), deadline_arg(a, now)}};
       }},
      {calls::ChangeAntReview::kName,
       [](const json& a, Timestamp now) -> ProtocolCall {
         return calls::ChangeAntReview{u64_arg(a, "id"),
                                       {issuers_arg(a), hash_arg(a, "paper_hash"), hash_arg(a, "requirements_hash"),
                                        deadline_arg(a, now)}};
       }},
      {calls::AddApprover::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         return calls::AddApprover{u64_arg(a, "id"), address_arg(a, "who")};
       }},
      {calls::RemoveApprover::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         return calls::RemoveApprover{u64_arg(a, "id"), address_arg(a, "who")};
       }},
      {calls::Contribute::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         return calls::Contribute{u64_arg(a, "id"), amount_arg(a, "amount")};
       }},
      {calls::FulfillAntReview::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         return calls::FulfillAntReview{u64_arg(a, "id"), hash_arg(a, "review_hash")};
       }},
      {calls::UpdateReview::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         return calls::UpdateReview{u64_arg(a, "id"), u64_arg(a, "fulfillment_id"), hash_arg(a, "review_hash")};
       }},
      {calls::AcceptAntReview::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         return calls::AcceptAntReview{u64_arg(a, "id"), u64_arg(a, "fulfillment_id"), amount_arg(a, "amount")};
       }},
      {calls::Refund::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         return calls::Refund{u64_arg(a, "id"), u64_arg(a, "contribution_index")};
       }},
      {calls::WithdrawAntReview::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         return calls::WithdrawAntReview{u64_arg(a, "id"), amount_arg(a, "amount")};
       }},
      {calls::Shield::kName,
       [](const json& a, Timestamp) -> ProtocolCall { return calls::Shield{amount_arg(a, "amount"), bigint_arg(a, "r")}; }},
      {calls::JoinSplit::kName,
       [](const json& a, Timestamp) -> ProtocolCall { return calls::JoinSplit{join_split_arg(a)}; }},
      {calls::Unshield::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         return calls::Unshield{u64_arg(a, "note_id"), u64_arg(a, "v"), bigint_arg(a, "r")};
       }},
      {calls::OpenVoting::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         return calls::OpenVoting{u64_arg(a, "id"), amount_arg(a, "pool")};
       }},
      {calls::Vote::kName,
       [](const json& a, Timestamp) -> ProtocolCall {
         auto text = as_string(require(a, "direction"), "direction");
         auto direction = parse_direction(text);
         if (!direction) throw DecodeError("direction must be 'up' or 'down'");
         return calls::Vote{u64_arg(a, "id"), u64_arg(a, "fulfillment_id"), *direction};
       }},
      {calls::FinalizeVoting::kName,
       [](const json& a, Timestamp) -> ProtocolCall { return calls::FinalizeVoting{u64_arg(a, "id")}; }},
  };
  return kEntries;
}

}  // namespace

std::string_view call_name(const ProtocolCall& call) {
  return std::visit([](const auto& c) { return std::decay_t<decltype(c)>::kName; }, call);
}

bool is_protocol_call(std::string_view name) {
  const auto& entries = registry();
  return std::any_of(entries.begin(), entries.end(), [&](const Entry& e) { return e.name == name; });
}

std::vector<std::string_view> protocol_call_names() {
  std::vector<std::string_view> names;
  for (const auto& e : registry()) names.push_back(e.name);
  return names;
}

Address resolve_address(std::string_view text) {
  if (text == "$escrow") return escrow_address();
  if (text.starts_with("0x")) {
    auto addr = Address::parse(text);
    if (!addr) throw DecodeError("malformed address '" + std::string(text) + "'");
    return *addr;
  }
  if (text.empty()) throw DecodeError("empty address");
  return address_for_seed(text);
}

ContentHash resolve_hash(std::string_view text) {
  if (text.starts_with("0x")) {
    auto hash = ContentHash::parse(text);
    if (!hash) throw DecodeError("malformed hash '" + std::string(text) + "'");
    return *hash;
  }
  return ContentHash::of(text);
}

Amount resolve_amount(const nlohmann::json& value) {
  if (value.is_number_unsigned()) return Amount{value.get<std::uint64_t>()};
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0) return Amount{value.get<std::uint64_t>()};
  if (value.is_string()) {
    if (auto amount = Amount::parse(value.get_ref<const std::string&>())) return *amount;
  }
  throw DecodeError("malformed amount " + value.dump());
}

ProtocolCall decode_call(std::string_view op, const nlohmann::json& args, Timestamp now) {
  for (const auto& e : registry()) {
    if (e.name == op) {
      const json& a = args.is_null() ? json::object() : args;
      try {
        return e.decode(a, now);
      } catch (const json::exception& ex) {
        throw DecodeError(ex.what());
      }
    }
  }
  throw DecodeError("unknown_call '" + std::string(op) + "'");
}

}  // namespace ants
