#pragma once

#include <map>
#include <string>
#include <vector>

#include "ants/access.hpp"
#include "ants/antsreview.hpp"
#include "ants/confidential.hpp"
#include "ants/poe.hpp"
#include "ants/token.hpp"
#include "ants/types.hpp"
#include "ants/voting.hpp"

namespace ants {

/// Everything a transaction may touch. Transactions run against a copy and
/// the copy replaces the live state only on success.
struct State {
  Timestamp now = 0;
  std::map<Address, std::string> accounts;  // address -> seed
  TokenLedger token;
  FaucetState faucet;
  RoleRegistry roles;
  PoERegistry poe;
  std::vector<AntReview> antreviews;
  NoteRegistry notes;
  VotingRegistry voting;

  friend bool operator==(const State&, const State&) = default;
};

/// The engine-owned account holding every escrowed ANTS. It is not
/// reachable through create_account.
Address escrow_address();

/// First 20 bytes of sha256(seed). Pure; does not register the account.
Address address_for_seed(std::string_view seed);

}  // namespace ants
