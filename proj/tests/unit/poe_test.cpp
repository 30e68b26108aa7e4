#include <gtest/gtest.h>

#include <filesystem>

#include "ants/poe.hpp"
#include "harness.hpp"

namespace ants {
namespace {

using testing::Harness;

TEST(ContentStore, EmptyContentHash) {
  ContentStore store;
  EXPECT_EQ(store.put(std::string_view{}).hex(),
            "0xe3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(ContentStore, PutIsIdempotentAndRoundTrips) {
  ContentStore store;
  auto a = store.put("paper v1");
  auto b = store.put("paper v1");
  EXPECT_EQ(a, b);
  EXPECT_EQ(store.size(), 1u);
  const auto& blob = store.get(a);
  EXPECT_EQ(std::string(blob.begin(), blob.end()), "paper v1");
  EXPECT_EQ(a, ContentHash::of("paper v1"));
}

TEST(ContentStore, UnknownHash) {
  ContentStore store;
  try {
    store.get(ContentHash::of("missing"));
    FAIL();
  } catch (const ProtocolError& e) {
    EXPECT_EQ(e.code(), "not_found");
  }
}

TEST(ContentStore, SizeLimit) {
  ContentStore store(8);
  EXPECT_NO_THROW(store.put("12345678"));
  EXPECT_THROW(store.put("123456789"), ProtocolError);
  EXPECT_EQ(store.size(), 1u);
}

TEST(ContentStore, ExportImport) {
  auto dir = std::filesystem::temp_directory_path() / "ants_store_test";
  std::filesystem::remove_all(dir);
  ContentStore store;
  auto a = store.put("one");
  auto b = store.put(std::string(1000, '\0'));
  store.export_dir(dir);
  EXPECT_TRUE(std::filesystem::exists(dir / a.hex()));

  ContentStore other;
  auto added = other.import_dir(dir);
  EXPECT_EQ(added.size(), 2u);
  EXPECT_EQ(other.get(b), store.get(b));
  std::filesystem::remove_all(dir);
}

TEST(Notarize, FirstSeenIsImmutable) {
  Harness h;
  auto hash = ContentHash::of("paper");
  h.env.advance_time(500);
  auto r1 = h.as("alice", calls::Notarize{hash});
  ASSERT_TRUE(r1.ok);
  EXPECT_EQ(r1.events.size(), 1u);
  EXPECT_EQ(r1.events[0].name, "PoE");
  h.env.advance_time(400);
  auto r2 = h.as("bob", calls::Notarize{hash});
  ASSERT_TRUE(r2.ok);
  EXPECT_TRUE(r2.events.empty());
  EXPECT_EQ(r2.output["first_seen"], 500);
  auto record = poe::verify_existence(h.env.state(), hash);
  ASSERT_TRUE(record);
  EXPECT_EQ(record->first_seen, 500u);
  EXPECT_EQ(record->submitter, h.acct("alice"));
}

TEST(Notarize, UnknownHashHasNoRecord) {
  Harness h;
  EXPECT_FALSE(poe::verify_existence(h.env.state(), ContentHash::of("x")));
}

TEST(Notarize, WorksWhilePaused) {
  Harness h;
  h.as("deployer", calls::Pause{});
  EXPECT_TRUE(h.as("alice", calls::Notarize{ContentHash::of("x")}).ok);
}

}  // namespace
}  // namespace ants
