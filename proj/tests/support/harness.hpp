#pragma once

// Test-side helpers: a thin driver over Environment plus an invariant checker
// that recomputes every accounting identity from raw state.

#include <string>
#include <vector>

#include "ants/env.hpp"
#include "ants/serialize.hpp"

namespace ants::testing {

class Harness {
 public:
  explicit Harness(const GenesisConfig& config = {}) : env(config) {}

  Address acct(const std::string& seed) { return env.create_account(seed); }

  TxResult as(const std::string& seed, const ProtocolCall& call) { return env.execute(acct(seed), call); }

  void grant(Role role, const std::string& seed) { must(as("deployer", calls::GrantRole{role, acct(seed)})); }

  /// Faucet drip + escrow approval of `allowance`.
  void fund(const std::string& seed, Amount allowance = Amount{}) {
    must(as(seed, calls::FaucetDrip{}));
    if (!allowance.is_zero()) must(as(seed, calls::Approve{escrow_address(), allowance}));
  }

  /// Issuer role + issue with a single issuer and approver.
  AntReviewId issue(const std::string& issuer, const std::string& approver, Timestamp deadline_delta) {
    grant(Role::Issuer, issuer);
    auto r = as(issuer, calls::IssueAntReview{{{acct(issuer)},
                                               acct(approver),
                                               ContentHash::of("paper:" + issuer),
                                               ContentHash::of("requirements:" + issuer),
                                               env.now() + deadline_delta}});
    must(r);
    return r.output.get<AntReviewId>();
  }

  Amount balance(const std::string& seed) const { return env.state().token.balance_of(address_for_seed(seed)); }
  Amount escrow() const { return env.state().token.balance_of(escrow_address()); }
  const AntReview& review(AntReviewId id) const { return env.state().antreviews.at(id); }
  Hash32 digest() const { return env.state_digest(); }

  static void must(const TxResult& r);

  Environment env;
};

/// Returns a description of every violated accounting identity; empty when
/// the state is consistent.
std::vector<std::string> check_invariants(const State& state);

}  // namespace ants::testing
