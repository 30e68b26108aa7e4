#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ants/scenario.hpp"
#include "ants/serialize.hpp"

namespace ants {
namespace {

struct Run {
  RunOutcome outcome;
  std::string log;
  Hash32 digest;
};

Run run(const std::string& script, bool strict = false) {
  Environment env;
  std::istringstream in(script);
  std::ostringstream log;
  auto outcome = ScenarioRunner(env, RunOptions{strict}).run(in, log);
  return Run{outcome, log.str(), env.state_digest()};
}

const char* kFlow = R"(
# issuer funds a bounty, a reviewer is paid
{"as":"deployer","op":"grant_role","args":{"role":"ISSUER","who":"alice"}}
{"as":"deployer","op":"grant_role","args":{"role":"PEER_REVIEWER","who":"bob"}}
{"as":"alice","op":"faucet_drip"}
{"as":"alice","op":"approve","args":{"spender":"$escrow","amount":"100 ANTS"}}
{"as":"alice","op":"issue_ant_review","args":{"issuers":["alice"],"approver":"ted","paper_hash":"paper","requirements_hash":"reqs","deadline":"+1000"}}
{"as":"alice","op":"contribute","args":{"id":0,"amount":"100 ANTS"}}
{"as":"bob","op":"fulfill_ant_review","args":{"id":0,"review_hash":"review"}}
{"as":"ted","op":"accept_ant_review","args":{"id":0,"fulfillment_id":0,"amount":"60 ANTS"}}
{"op":"assert_event","match":{"name":"Accepted","attributes":{"reviewer":"@bob"}}}
{"op":"assert_state","path":"balance/bob","equals":"60000000000000000000"}
{"op":"assert_state","path":"/antreviews/0/balance","equals":"40000000000000000000"}
)";

TEST(Scenario, EmptyFileIsGenesis) {
  auto r = run("");
  EXPECT_EQ(r.outcome.exit_code, 0);
  EXPECT_TRUE(r.log.empty());
  EXPECT_EQ(r.digest, Environment().state_digest());
}

TEST(Scenario, FlowPasses) {
  auto r = run(kFlow, true);
  EXPECT_EQ(r.outcome.exit_code, 0) << r.outcome.message;
  EXPECT_NE(r.log.find("\"name\":\"Accepted\""), std::string::npos);
}

TEST(Scenario, Deterministic) {
  auto a = run(kFlow);
  auto b = run(kFlow);
  EXPECT_EQ(a.log, b.log);
  EXPECT_EQ(a.digest, b.digest);
}

TEST(Scenario, ParseErrorsExitTwoWithLine) {
  auto r = run("\n{\"op\":\"advance_time\",\"delta\":1}\nnot json\n");
  EXPECT_EQ(r.outcome.exit_code, 2);
  EXPECT_EQ(r.outcome.line, 3u);
  EXPECT_EQ(run(R"({"op":"teleport"})").outcome.exit_code, 2);
  EXPECT_EQ(run(R"({"as":"a","op":"transfer","args":{"to":"b"}})").outcome.exit_code, 2);
  EXPECT_EQ(run(R"({"op":"advance_time","delta":-1})").outcome.exit_code, 2);
}

TEST(Scenario, FailedAssertExitsOne) {
  auto r = run(R"({"op":"assert_state","path":"now","equals":5})");
  EXPECT_EQ(r.outcome.exit_code, 1);
  EXPECT_EQ(run(R"({"op":"assert_event","match":{"name":"Accepted"}})").outcome.exit_code, 1);
  EXPECT_EQ(run(R"({"op":"assert_state","path":"nowhere","equals":5})").outcome.exit_code, 1);
}

TEST(Scenario, ProtocolErrorsAreDataUnlessStrict) {
  const std::string script = R"({"as":"bob","op":"transfer","args":{"to":"alice","amount":1}})";
  auto lenient = run(script);
  EXPECT_EQ(lenient.outcome.exit_code, 0);
  EXPECT_NE(lenient.log.find("\"insufficient_balance\""), std::string::npos);
  EXPECT_EQ(run(script, true).outcome.exit_code, 1);
}

TEST(Scenario, MetaOps) {
  auto r = run(R"({"op":"create_account","seed":"zed"}
{"op":"advance_time","delta":42}
{"op":"put","content":"abc"}
{"op":"assert_state","path":"now","equals":42}
{"op":"assert_state","path":"total_supply","equals":"0"}
{"op":"assert_state","path":"/accounts/0xae8f5080a348fbfeb2c776957979728034cdf3ee","equals":"zed"})");
  EXPECT_EQ(r.outcome.exit_code, 0) << r.outcome.message;
}

TEST(Scenario, ReservedSeedIsMetaFailure) {
  EXPECT_EQ(run(R"({"op":"create_account","seed":"ants-review/escrow"})").outcome.exit_code, 1);
}

TEST(Scenario, CorpusMatchesGoldenDigests) {
  std::ifstream golden(std::string(ANTS_SCENARIO_DIR) + "/golden_digests.txt");
  ASSERT_TRUE(golden);
  std::string name, digest;
  int count = 0;
  while (golden >> name >> digest) {
    std::ifstream file(std::string(ANTS_SCENARIO_DIR) + "/" + name);
    ASSERT_TRUE(file) << name;
    std::stringstream script;
    script << file.rdbuf();
    auto r = run(script.str());
    EXPECT_EQ(r.outcome.exit_code, 0) << name << ": " << r.outcome.message;
    EXPECT_EQ(to_hex(r.digest), digest) << name;
    ++count;
  }
  EXPECT_GE(count, 6);
}

}  // namespace
}  // namespace ants
