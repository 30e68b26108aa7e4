#include <gtest/gtest.h>

#include "harness.hpp"

namespace ants {
namespace {

using testing::Harness;

class TokenTest : public ::testing::Test {
 protected:
  void SetUp() override {
    GenesisConfig config;
    config.drip_amount = Amount{100};
    config.faucet_cooldown = 1000;
    h = std::make_unique<Harness>(config);
    h->fund("alice");
  }

  Amount supply() const { return h->env.state().token.total_supply(); }

  std::unique_ptr<Harness> h;
};

TEST_F(TokenTest, Metadata) {
  EXPECT_EQ(TokenLedger::kName, "Ants-Review");
  EXPECT_EQ(TokenLedger::kSymbol, "ANTS");
  EXPECT_EQ(TokenLedger::kDecimals, 18);
}

TEST_F(TokenTest, TransferFullBalance) {
  ASSERT_TRUE(h->as("alice", calls::Transfer{h->acct("bob"), Amount{100}}).ok);
  EXPECT_EQ(h->balance("alice"), Amount{});
  EXPECT_EQ(h->balance("bob"), Amount{100});
  EXPECT_FALSE(h->env.state().token.balances().contains(h->acct("alice")));
}

TEST_F(TokenTest, TransferZeroEmitsEvent) {
  auto r = h->as("alice", calls::Transfer{h->acct("bob"), Amount{}});
  ASSERT_TRUE(r.ok);
  ASSERT_EQ(r.events.size(), 1u);
  EXPECT_EQ(r.events[0].name, "Transfer");
  EXPECT_EQ(h->balance("alice"), Amount{100});
}

TEST_F(TokenTest, TransferBoundaryAndZeroRecipient) {
  h->as("alice", calls::Transfer{h->acct("bob"), Amount{50}});
  auto before = h->digest();
  EXPECT_EQ(h->as("alice", calls::Transfer{h->acct("bob"), Amount{51}}).error, "insufficient_balance");
  EXPECT_EQ(h->as("alice", calls::Transfer{Address::zero(), Amount{1}}).error, "zero_address");
  EXPECT_EQ(h->as("alice", calls::Transfer{escrow_address(), Amount{1}}).error, "escrow_recipient");
  EXPECT_EQ(h->digest(), before);
}

TEST_F(TokenTest, ApproveOverwrites) {
  h->as("alice", calls::Approve{h->acct("bob"), Amount{10}});
  h->as("alice", calls::Approve{h->acct("bob"), Amount{3}});
  EXPECT_EQ(h->env.state().token.allowance(h->acct("alice"), h->acct("bob")), Amount{3});
  h->as("alice", calls::Approve{h->acct("bob"), Amount{}});
  EXPECT_EQ(h->env.state().token.allowance(h->acct("alice"), h->acct("bob")), Amount{});
  EXPECT_TRUE(h->env.state().token.allowances().empty());
  EXPECT_EQ(h->as("alice", calls::Approve{Address::zero(), Amount{1}}).error, "zero_address");
}

TEST_F(TokenTest, TransferFromSpendsAllowance) {
  h->as("alice", calls::Approve{h->acct("bob"), Amount{10}});
  ASSERT_TRUE(h->as("bob", calls::TransferFrom{h->acct("alice"), h->acct("carol"), Amount{10}}).ok);
  EXPECT_EQ(h->env.state().token.allowance(h->acct("alice"), h->acct("bob")), Amount{});
  EXPECT_EQ(h->balance("carol"), Amount{10});
}

TEST_F(TokenTest, TransferFromBindingConstraints) {
  // allowance 10, balance 5, pull 6: balance binds
  h->as("alice", calls::Transfer{h->acct("dave"), Amount{95}});
  h->as("alice", calls::Approve{h->acct("bob"), Amount{10}});
  EXPECT_EQ(h->as("bob", calls::TransferFrom{h->acct("alice"), h->acct("bob"), Amount{6}}).error,
            "insufficient_balance");
  // allowance 5, pull 6: allowance binds
  h->as("dave", calls::Approve{h->acct("bob"), Amount{5}});
  EXPECT_EQ(h->as("bob", calls::TransferFrom{h->acct("dave"), h->acct("bob"), Amount{6}}).error,
            "insufficient_allowance");
}

TEST_F(TokenTest, FaucetDefaultsAndConservation) {
  Harness fresh;
  fresh.fund("x");
  EXPECT_EQ(fresh.balance("x"), Amount::ants(1000));
  EXPECT_EQ(fresh.env.state().token.total_supply(), Amount::ants(1000));
  Amount::Rep sum = 0;
  for (const auto& [who, amount] : fresh.env.state().token.balances()) sum += amount.units();
  EXPECT_EQ(Amount{sum}, fresh.env.state().token.total_supply());
  EXPECT_EQ(fresh.env.state().faucet.cooldown, 86400u);
}

TEST_F(TokenTest, FaucetCooldownBoundary) {
  h->env.advance_time(999);
  auto r = h->as("alice", calls::FaucetDrip{});
  EXPECT_EQ(r.error, "cooldown");
  h->env.advance_time(1);
  ASSERT_TRUE(h->as("alice", calls::FaucetDrip{}).ok);
  EXPECT_EQ(supply(), Amount{200});
  EXPECT_EQ(h->env.state().faucet.last_drip.at(h->acct("alice")), 1000u);
}

}  // namespace
}  // namespace ants
