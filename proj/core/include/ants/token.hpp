#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "ants/event.hpp"
#include "ants/types.hpp"

namespace ants {

struct State;

/// The ANTS fungible token. Zero balances and zero allowances are never
/// stored, so two ledgers with the same observable balances compare equal.
class TokenLedger {
 public:
  static constexpr std::string_view kName = "Ants-Review";
  static constexpr std::string_view kSymbol = "ANTS";
  static constexpr int kDecimals = 18;

  using Balances = std::map<Address, Amount>;
  using Allowances = std::map<Address, std::map<Address, Amount>>;

  Amount balance_of(const Address& who) const;
  Amount allowance(const Address& owner, const Address& spender) const;
  Amount total_supply() const { return total_supply_; }
  const Balances& balances() const { return balances_; }
  const Allowances& allowances() const { return allowances_; }

  // Primitives used by the protocol modules. Each emits a Transfer event;
  // mint and burn use the zero address as the counterparty.
  void move(Tx& tx, const Address& from, const Address& to, Amount amount);
  void mint(Tx& tx, const Address& to, Amount amount);
  void burn(Tx& tx, const Address& from, Amount amount);
  void set_allowance(const Address& owner, const Address& spender, Amount amount);

  // Raw setters for snapshot restore only.
  void restore(Balances balances, Allowances allowances, Amount total_supply);

  friend bool operator==(const TokenLedger&, const TokenLedger&) = default;

 private:
  void credit(const Address& who, Amount amount);
  void debit(const Address& who, Amount amount);

  Balances balances_;
  Allowances allowances_;
  Amount total_supply_;
};

struct FaucetState {
  Amount drip_amount = Amount::ants(1000);
  std::uint64_t cooldown = 86400;
  std::map<Address, Timestamp> last_drip;

  friend bool operator==(const FaucetState&, const FaucetState&) = default;
};

namespace token {

bool transfer(State& state, Tx& tx, const Address& to, Amount amount);
bool approve(State& state, Tx& tx, const Address& spender, Amount amount);
bool transfer_from(State& state, Tx& tx, const Address& owner, const Address& to, Amount amount);
Amount faucet_drip(State& state, Tx& tx);

}  // namespace token
}  // namespace ants
