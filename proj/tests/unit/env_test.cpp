#include <gtest/gtest.h>

#include "ants/env.hpp"
#include "ants/serialize.hpp"
#include "harness.hpp"

namespace ants {
namespace {

using testing::Harness;

TEST(Env, CreateAccountIsDeterministic) {
  Environment env;
  auto a = env.create_account("alice");
  EXPECT_EQ(a, env.create_account("alice"));
  EXPECT_NE(a, env.create_account("bob"));
  EXPECT_EQ(env.state().accounts.at(a), "alice");
}

TEST(Env, EscrowSeedIsReserved) {
  Environment env;
  EXPECT_THROW(env.create_account("ants-review/escrow"), ProtocolError);
}

TEST(Env, AdvanceTime) {
  GenesisConfig config;
  config.genesis_time = 1000;
  Environment env(config);
  EXPECT_EQ(env.advance_time(0), 1000u);
  EXPECT_EQ(env.advance_time(86400), 87400u);

  Environment late(config);
  late.advance_time(~std::uint64_t{0} - 1000);
  EXPECT_EQ(late.now(), ~std::uint64_t{0});
  EXPECT_THROW(late.advance_time(1), ProtocolError);
  EXPECT_EQ(late.now(), ~std::uint64_t{0});
}

TEST(Env, TxIndexSequencing) {
  Harness h;
  h.as("alice", calls::FaucetDrip{});
  h.as("alice", calls::FaucetDrip{});  // cooldown error still consumes an index
  h.as("alice", calls::Approve{escrow_address(), Amount{1}});
  std::vector<std::uint64_t> seen;
  for (const auto& e : h.env.log()) {
    if (seen.empty() || seen.back() != e.tx_index) seen.push_back(e.tx_index);
  }
  EXPECT_EQ(seen, (std::vector<std::uint64_t>{0, 1, 2}));
  EXPECT_EQ(h.env.tx_index(), 3u);
}

TEST(Env, FailedCallIsAtomic) {
  Harness h;
  auto id = h.issue("alice", "ted", 1000);
  h.fund("carol", Amount::ants(100));
  Harness::must(h.as("carol", calls::Contribute{id, Amount::ants(100)}));
  auto before = h.digest();
  auto log_size = h.env.log().size();

  auto r = h.as("ted", calls::AcceptAntReview{id, 0, Amount::ants(1)});  // no fulfillment
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.error, "unknown_fulfillment");
  EXPECT_EQ(h.digest(), before);
  ASSERT_EQ(h.env.log().size(), log_size + 1);
  EXPECT_EQ(h.env.log().back().name, "Error");
  EXPECT_EQ(*h.env.log().back().attribute("error"), "unknown_fulfillment");
}

TEST(Env, DigestStableAndSensitive) {
  Environment a, b;
  EXPECT_EQ(a.state_digest(), b.state_digest());
  auto genesis = a.state_digest();
  a.execute(a.deployer(), calls::FaucetDrip{});
  EXPECT_NE(a.state_digest(), genesis);
}

TEST(Env, UnknownCallAndSender) {
  Environment env;
  auto r = env.execute(env.deployer(), "mint_everything", nlohmann::json::object());
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.error, "unknown_call");

  auto bad = env.execute(env.deployer(), "transfer", nlohmann::json{{"to", "0x12"}});
  EXPECT_EQ(bad.error, "bad_args");

  auto stranger = env.execute(address_for_seed("nobody"), calls::FaucetDrip{});
  EXPECT_EQ(stranger.error, "unknown_sender");
  EXPECT_EQ(env.tx_index(), 3u);
}

TEST(Env, EventLineIsCanonical) {
  Event e{7, "Transfer", {{"from", "a"}, {"to", "b"}, {"amount", "1"}}};
  EXPECT_EQ(e.to_json_line(),
            R"({"tx_index":7,"name":"Transfer","attributes":{"from":"a","to":"b","amount":"1"}})");
}

TEST(Env, IdenticalRunsGiveIdenticalLogs) {
  auto run = [] {
    Harness h;
    auto id = h.issue("alice", "ted", 500);
    h.fund("carol", Amount::ants(10));
    h.as("carol", calls::Contribute{id, Amount::ants(10)});
    h.env.advance_time(600);
    h.as("carol", calls::Refund{id, 0});
    std::string out;
    for (const auto& e : h.env.log()) out += e.to_json_line() + "\n";
    return std::make_pair(out, h.digest());
  };
  EXPECT_EQ(run(), run());
}

TEST(Env, SnapshotRoundTripPreservesDigest) {
  Harness h;
  auto id = h.issue("alice", "ted", 500);
  h.fund("carol", Amount::ants(10));
  h.as("carol", calls::Contribute{id, Amount::ants(10)});
  h.as("carol", calls::Shield{Amount{5}, BigInt(9)});
  h.env.store().put(std::string_view{"some paper"});

  auto restored = Environment::from_snapshot(nlohmann::json::parse(h.env.snapshot().dump()));
  EXPECT_EQ(restored.state_digest(), h.digest());
  EXPECT_EQ(restored.state(), h.env.state());
  EXPECT_EQ(restored.tx_index(), h.env.tx_index());
  EXPECT_TRUE(restored.store().contains(ContentHash::of("some paper")));
}

TEST(Env, SnapshotRejectsTamperedBlob) {
  Environment env;
  auto hash = env.store().put(std::string_view{"x"});
  auto snap = nlohmann::json::parse(env.snapshot().dump());
  snap["store"][hash.hex()] = "0x79";
  EXPECT_THROW(Environment::from_snapshot(snap), std::invalid_argument);
}

}  // namespace
}  // namespace ants
