#include "ants/token.hpp"

#include "ants/state.hpp"

namespace ants {

Amount TokenLedger::balance_of(const Address& who) const {
  auto it = balances_.find(who);
  return it == balances_.end() ? Amount{} : it->second;
}

Amount TokenLedger::allowance(const Address& owner, const Address& spender) const {
  auto it = allowances_.find(owner);
  if (it == allowances_.end()) return Amount{};
  auto jt = it->second.find(spender);
  return jt == it->second.end() ? Amount{} : jt->second;
}

void TokenLedger::credit(const Address& who, Amount amount) {
  if (amount.is_zero()) return;
  if (who.is_zero()) throw ProtocolError("zero_address");
  auto& slot = balances_[who];
  slot = slot.plus(amount);
}

void TokenLedger::debit(const Address& who, Amount amount) {
  if (amount.is_zero()) return;
  auto it = balances_.find(who);
  if (it == balances_.end() || it->second < amount) throw ProtocolError("insufficient_balance");
  it->second = it->second.minus(amount);
  if (it->second.is_zero()) balances_.erase(it);
}

void TokenLedger::move(Tx& tx, const Address& from, const Address& to, Amount amount) {
  if (to.is_zero()) throw ProtocolError("zero_address", "recipient");
  if (balance_of(from) < amount) throw ProtocolError("insufficient_balance");
  debit(from, amount);
  credit(to, amount);
  tx.emit("Transfer", {{"from", from.hex()}, {"to", to.hex()}, {"amount", amount.str()}});
}

void TokenLedger::mint(Tx& tx, const Address& to, Amount amount) {
  total_supply_ = total_supply_.plus(amount);
  credit(to, amount);
  tx.emit("Transfer", {{"from", Address::zero().hex()}, {"to", to.hex()}, {"amount", amount.str()}});
}

void TokenLedger::burn(Tx& tx, const Address& from, Amount amount) {
  if (balance_of(from) < amount) throw ProtocolError("insufficient_balance");
  debit(from, amount);
  total_supply_ = total_supply_.minus(amount);
  tx.emit("Transfer", {{"from", from.hex()}, {"to", Address::zero().hex()}, {"amount", amount.str()}});
}

void TokenLedger::set_allowance(const Address& owner, const Address& spender, Amount amount) {
  if (amount.is_zero()) {
    auto it = allowances_.find(owner);
    if (it == allowances_.end()) return;
    it->second.erase(spender);
    if (it->second.empty()) allowances_.erase(it);
    return;
  }
  allowances_[owner][spender] = amount;
}

void TokenLedger::restore(Balances balances, Allowances allowances, Amount total_supply) {
  balances_ = std::move(balances);
  allowances_ = std::move(allowances);
  total_supply_ = total_supply;
}

namespace token {

namespace {
// Escrow is credited only by the bounty contract itself; a stray deposit
// would break the escrow == sum(bounty balances) identity.
void require_user_recipient(const Address& to) {
  if (to.is_zero()) throw ProtocolError("zero_address", "recipient");
  if (to == escrow_address()) throw ProtocolError("escrow_recipient");
}
}  // namespace

bool transfer(State& state, Tx& tx, const Address& to, Amount amount) {
  require_user_recipient(to);
  state.token.move(tx, tx.sender(), to, amount);
  return true;
}

bool approve(State& state, Tx& tx, const Address& spender, Amount amount) {
  if (spender.is_zero()) throw ProtocolError("zero_address", "spender");
  state.token.set_allowance(tx.sender(), spender, amount);
  tx.emit("Approval", {{"owner", tx.sender().hex()}, {"spender", spender.hex()}, {"amount", amount.str()}});
  return true;
}

bool transfer_from(State& state, Tx& tx, const Address& owner, const Address& to, Amount amount) {
  require_user_recipient(to);
  Amount allowed = state.token.allowance(owner, tx.sender());
  if (allowed < amount) throw ProtocolError("insufficient_allowance");
  state.token.move(tx, owner, to, amount);
  state.token.set_allowance(owner, tx.sender(), allowed.minus(amount));
  return true;
}

Amount faucet_drip(State& state, Tx& tx) {
  state.roles.require_not_paused();
  auto& faucet = state.faucet;
  if (auto it = faucet.last_drip.find(tx.sender()); it != faucet.last_drip.end()) {
    bool elapsed = tx.now() >= it->second && tx.now() - it->second >= faucet.cooldown;
    if (!elapsed) throw ProtocolError("cooldown");
  }
  state.token.mint(tx, tx.sender(), faucet.drip_amount);
  faucet.last_drip[tx.sender()] = tx.now();
  tx.emit("Drip", {{"to", tx.sender().hex()}, {"amount", faucet.drip_amount.str()}});
  return faucet.drip_amount;
}

}  // namespace token
}  // namespace ants
