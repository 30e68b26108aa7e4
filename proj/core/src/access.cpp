#include "ants/access.hpp"

#include "ants/state.hpp"

namespace ants {

std::string_view role_name(Role role) {
  switch (role) {
    case Role::Issuer: return "ISSUER";
    case Role::PeerReviewer: return "PEER_REVIEWER";
    case Role::Pauser: return "PAUSER";
    case Role::Admin: return "ADMIN";
  }
  return "UNKNOWN";
}

std::optional<Role> parse_role(std::string_view name) {
  for (Role role : kAllRoles) {
    if (role_name(role) == name) return role;
  }
  return std::nullopt;
}

bool RoleRegistry::has_role(Role role, const Address& who) const {
  if (who.is_zero()) return false;
  auto it = members_.find(role);
  return it != members_.end() && it->second.contains(who);
}

const std::set<Address>& RoleRegistry::members(Role role) const {
  static const std::set<Address> kEmpty;
  auto it = members_.find(role);
  return it == members_.end() ? kEmpty : it->second;
}

void RoleRegistry::add(Role role, const Address& who) { members_[role].insert(who); }

void RoleRegistry::remove(Role role, const Address& who) {
  auto it = members_.find(role);
  if (it == members_.end()) return;
  it->second.erase(who);
  if (it->second.empty()) members_.erase(it);
}

void RoleRegistry::require_not_paused() const {
  if (paused_) throw ProtocolError("paused");
}

void RoleRegistry::require_role(Role role, const Address& who) const {
  if (!has_role(role, who)) throw ProtocolError("missing_role", std::string(role_name(role)));
}

namespace access {

void grant_role(State& state, Tx& tx, Role role, const Address& who) {
  state.roles.require_role(Role::Admin, tx.sender());
  if (who.is_zero()) throw ProtocolError("zero_address");
  state.roles.add(role, who);
  tx.emit("RoleGranted", {{"role", std::string(role_name(role))}, {"who", who.hex()}, {"by", tx.sender().hex()}});
}

void revoke_role(State& state, Tx& tx, Role role, const Address& who) {
  state.roles.require_role(Role::Admin, tx.sender());
  state.roles.remove(role, who);
  tx.emit("RoleRevoked", {{"role", std::string(role_name(role))}, {"who", who.hex()}, {"by", tx.sender().hex()}});
  if (state.roles.members(Role::Admin).empty()) tx.emit("WarnNoAdmin", {});
}

void pause(State& state, Tx& tx) {
  state.roles.require_role(Role::Pauser, tx.sender());
  if (state.roles.paused()) throw ProtocolError("already_paused");
  state.roles.set_paused(true);
  tx.emit("Paused", {{"by", tx.sender().hex()}});
}

void unpause(State& state, Tx& tx) {
  state.roles.require_role(Role::Pauser, tx.sender());
  if (!state.roles.paused()) throw ProtocolError("not_paused");
  state.roles.set_paused(false);
  tx.emit("Unpaused", {{"by", tx.sender().hex()}});
}

}  // namespace access
}  // namespace ants
