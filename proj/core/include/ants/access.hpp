#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string_view>

#include "ants/event.hpp"
#include "ants/types.hpp"

namespace ants {

struct State;

enum class Role { Issuer, PeerReviewer, Pauser, Admin };

inline constexpr std::array<Role, 4> kAllRoles{Role::Issuer, Role::PeerReviewer, Role::Pauser, Role::Admin};

std::string_view role_name(Role role);
std::optional<Role> parse_role(std::string_view name);

class RoleRegistry {
 public:
  bool has_role(Role role, const Address& who) const;
  bool paused() const { return paused_; }
  const std::set<Address>& members(Role role) const;

  // Unchecked mutators; authorization lives in the access:: operations.
  void add(Role role, const Address& who);
  void remove(Role role, const Address& who);
  void set_paused(bool paused) { paused_ = paused; }

  /// Throws ProtocolError("paused") when the circuit breaker is engaged.
  void require_not_paused() const;
  void require_role(Role role, const Address& who) const;

  friend bool operator==(const RoleRegistry&, const RoleRegistry&) = default;

 private:
  std::map<Role, std::set<Address>> members_;
  bool paused_ = false;
};

namespace access {

void grant_role(State& state, Tx& tx, Role role, const Address& who);
void revoke_role(State& state, Tx& tx, Role role, const Address& who);
void pause(State& state, Tx& tx);
void unpause(State& state, Tx& tx);

}  // namespace access
}  // namespace ants
