#include "ants/env.hpp"

#include <stdexcept>
#include <type_traits>

#include "ants/serialize.hpp"

namespace ants {

Address escrow_address() {
  static const Address kEscrow = Address::from_digest(sha256(std::string_view{"ants-review/escrow"}));
  return kEscrow;
}

Address address_for_seed(std::string_view seed) { return Address::from_digest(sha256(seed)); }

namespace {

using json = nlohmann::json;

json dispatch(State& state, Tx& tx, const ProtocolCall& call) {
  return std::visit(
      [&](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, calls::Transfer>) {
          return token::transfer(state, tx, c.to, c.amount);
        } else if constexpr (std::is_same_v<T, calls::Approve>) {
          return token::approve(state, tx, c.spender, c.amount);
        } else if constexpr (std::is_same_v<T, calls::TransferFrom>) {
          return token::transfer_from(state, tx, c.owner, c.to, c.amount);
        } else if constexpr (std::is_same_v<T, calls::FaucetDrip>) {
          return token::faucet_drip(state, tx).str();
        } else if constexpr (std::is_same_v<T, calls::GrantRole>) {
          access::grant_role(state, tx, c.role, c.who);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::RevokeRole>) {
          access::revoke_role(state, tx, c.role, c.who);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::Pause>) {
          access::pause(state, tx);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::Unpause>) {
          access::unpause(state, tx);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::Notarize>) {
          auto rec = poe::notarize(state, tx, c.hash);
          return {{"hash", rec.hash.hex()}, {"first_seen", rec.first_seen}, {"submitter", rec.submitter.hex()}};
        } else if constexpr (std::is_same_v<T, calls::IssueAntReview>) {
          return antsreview::issue_ant_review(state, tx, c.params);
        } else if constexpr (std::is_same_v<T, calls::ChangeAntReview>) {
          antsreview::change_ant_review(state, tx, c.id, c.params);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::AddApprover>) {
          antsreview::add_approver(state, tx, c.id, c.who);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::RemoveApprover>) {
          antsreview::remove_approver(state, tx, c.id, c.who);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::Contribute>) {
          antsreview::contribute(state, tx, c.id, c.amount);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::FulfillAntReview>) {
          return antsreview::fulfill_ant_review(state, tx, c.id, c.review_hash);
        } else if constexpr (std::is_same_v<T, calls::UpdateReview>) {
          antsreview::update_review(state, tx, c.id, c.fulfillment_id, c.review_hash);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::AcceptAntReview>) {
          antsreview::accept_ant_review(state, tx, c.id, c.fulfillment_id, c.amount);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::Refund>) {
          antsreview::refund(state, tx, c.id, c.contribution_index);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::WithdrawAntReview>) {
          antsreview::withdraw_ant_review(state, tx, c.id, c.amount);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::Shield>) {
          return confidential::shield(state, tx, c.amount, c.randomness).id;
        } else if constexpr (std::is_same_v<T, calls::JoinSplit>) {
          json ids = json::array();
          for (const auto& note : confidential::join_split(state, tx, c.request)) ids.push_back(note.id);
          return ids;
        } else if constexpr (std::is_same_v<T, calls::Unshield>) {
          return confidential::unshield(state, tx, c.note_id, c.value, c.randomness).str();
        } else if constexpr (std::is_same_v<T, calls::OpenVoting>) {
          voting::open_voting(state, tx, c.id, c.pool);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::Vote>) {
          voting::vote(state, tx, c.id, c.fulfillment_id, c.direction);
          return nullptr;
        } else if constexpr (std::is_same_v<T, calls::FinalizeVoting>) {
          json out = json::object();
          for (const auto& [fid, amount] : voting::finalize_voting(state, tx, c.id)) {
            out[std::to_string(fid)] = amount.str();
          }
          return out;
        } else {
          static_assert(sizeof(T) == 0, "unhandled protocol call");
        }
      },
      call);
}

}  // namespace

Environment::Environment(const GenesisConfig& config) : store_(config.max_content_size) {
  config.params.validate();
  state_.now = config.genesis_time;
  state_.faucet.drip_amount = config.drip_amount;
  state_.faucet.cooldown = config.faucet_cooldown;
  state_.notes.params = config.params;
  deployer_ = create_account(config.deployer_seed);
  state_.roles.add(Role::Admin, deployer_);
  state_.roles.add(Role::Pauser, deployer_);
}

Address Environment::create_account(std::string_view seed) {
  Address addr = address_for_seed(seed);
  if (addr.is_zero() || addr == escrow_address()) throw ProtocolError("reserved_address");
  state_.accounts.emplace(addr, std::string(seed));
  return addr;
}

Timestamp Environment::advance_time(std::uint64_t delta) {
  if (delta > ~Timestamp{0} - state_.now) throw ProtocolError("time_overflow");
  state_.now += delta;
  return state_.now;
}

TxResult Environment::fail(const Address& sender, std::string_view name, const std::string& code) {
  Event error{tx_index_, "Error", {{"call", std::string(name)}, {"sender", sender.hex()}, {"error", code}}};
  log_.push_back(error);
  ++tx_index_;
  return TxResult{false, code, {std::move(error)}, nullptr};
}

TxResult Environment::execute(const Address& sender, const ProtocolCall& call) {
  if (!state_.accounts.contains(sender)) return fail(sender, call_name(call), "unknown_sender");

  State working = state_;
  Tx tx{TxContext{sender, state_.now, tx_index_}};
  json output;
  try {
    output = dispatch(working, tx, call);
  } catch (const ProtocolError& e) {
    return fail(sender, call_name(call), e.code());
  }

  state_ = std::move(working);
  auto events = tx.take_events();
  log_.insert(log_.end(), events.begin(), events.end());
  ++tx_index_;
  return TxResult{true, {}, std::move(events), std::move(output)};
}

TxResult Environment::execute(const Address& sender, std::string_view op, const nlohmann::json& args) {
  if (!is_protocol_call(op)) return fail(sender, op, "unknown_call");
  try {
    return execute(sender, decode_call(op, args, state_.now));
  } catch (const DecodeError&) {
    return fail(sender, op, "bad_args");
  }
}

Hash32 Environment::state_digest() const { return digest_of(state_); }

nlohmann::ordered_json Environment::snapshot() const {
  nlohmann::ordered_json blobs = nlohmann::ordered_json::object();
  for (const auto& [hash, blob] : store_.blobs()) blobs[hash.hex()] = to_hex(*blob);
  return {{"format", "ants-review-snapshot/1"},
          {"tx_index", tx_index_},
          {"deployer", deployer_.hex()},
          {"max_content_size", store_.max_size()},
          {"state", to_json(state_)},
          {"store", std::move(blobs)}};
}

Environment Environment::from_snapshot(const nlohmann::json& snapshot) {
  if (!snapshot.is_object() || snapshot.value("format", "") != "ants-review-snapshot/1") {
    throw std::invalid_argument("not an ants-review snapshot");
  }
  Environment env{RestoreTag{}};
  try {
    env.tx_index_ = snapshot.at("tx_index").get<std::uint64_t>();
    auto deployer = Address::parse(snapshot.at("deployer").get<std::string>());
    if (!deployer) throw std::invalid_argument("malformed deployer");
    env.deployer_ = *deployer;
    env.store_ = ContentStore(snapshot.at("max_content_size").get<std::size_t>());
    env.state_ = state_from_json(snapshot.at("state"));
    for (const auto& [key, hex] : snapshot.at("store").items()) {
      auto bytes = from_hex(hex.get<std::string>());
      if (!bytes) throw std::invalid_argument("malformed blob " + key);
      if (env.store_.put(*bytes).hex() != key) throw std::invalid_argument("blob does not match its hash " + key);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed snapshot: ") + e.what());
  }
  return env;
}

}  // namespace ants
