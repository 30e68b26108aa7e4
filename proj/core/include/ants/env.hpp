#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ants/calls.hpp"
#include "ants/event.hpp"
#include "ants/poe.hpp"
#include "ants/state.hpp"

namespace ants {

struct GenesisConfig {
  std::string deployer_seed = "deployer";
  Timestamp genesis_time = 0;
  Amount drip_amount = Amount::ants(1000);
  std::uint64_t faucet_cooldown = 86400;
  GroupParams params = GroupParams::standard();
  std::size_t max_content_size = ContentStore::kDefaultMaxSize;
};

struct TxResult {
  bool ok = false;
  std::string error;  // error code when !ok
  std::vector<Event> events;
  nlohmann::json output;
};

/// Deterministic simulated chain. Single-threaded; movable between threads.
class Environment {
 public:
  explicit Environment(const GenesisConfig& config = {});

  /// Registers sha256(seed)[0..20). Idempotent for the same seed. Throws
  /// ProtocolError("reserved_address") for the zero or escrow address.
  Address create_account(std::string_view seed);
  /// Throws ProtocolError("time_overflow") if now + delta overflows.
  Timestamp advance_time(std::uint64_t delta);

  /// Runs one call atomically. On failure the state is untouched and a single
  /// Error event is logged. tx_index advances either way.
  TxResult execute(const Address& sender, const ProtocolCall& call);
  /// Same, decoding `op`/`args` first; an unknown op logs Error
  /// "unknown_call" and malformed args log Error "bad_args".
  TxResult execute(const Address& sender, std::string_view op, const nlohmann::json& args);

  Hash32 state_digest() const;

  const State& state() const { return state_; }
  Timestamp now() const { return state_.now; }
  std::uint64_t tx_index() const { return tx_index_; }
  const std::vector<Event>& log() const { return log_; }
  const Address& deployer() const { return deployer_; }

  ContentStore& store() { return store_; }
  const ContentStore& store() const { return store_; }

  /// State, store blobs and tx counter. The event log is not included.
  nlohmann::ordered_json snapshot() const;
  /// Throws std::invalid_argument on malformed snapshots.
  static Environment from_snapshot(const nlohmann::json& snapshot);

 private:
  struct RestoreTag {};
  explicit Environment(RestoreTag) {}

  TxResult fail(const Address& sender, std::string_view name, const std::string& code);

  State state_;
  ContentStore store_;
  Address deployer_;
  std::uint64_t tx_index_ = 0;
  std::vector<Event> log_;
};

}  // namespace ants
