#include <gtest/gtest.h>

#include "ants/env.hpp"
#include "ants/hash.hpp"
#include "ants/types.hpp"

namespace ants {
namespace {

// Reference digests from Python's hashlib.
TEST(Sha256, KnownVectors) {
  EXPECT_EQ(to_hex(sha256(std::string_view{})), "0xe3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(to_hex(sha256(std::string_view{"abc"})),
            "0xba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Hex, RoundTripAndRejects) {
  Bytes raw{0x00, 0x01, 0xab, 0xff};
  EXPECT_EQ(to_hex(raw), "0x0001abff");
  EXPECT_EQ(from_hex("0x0001ABff"), raw);
  EXPECT_FALSE(from_hex("0x123"));
  EXPECT_FALSE(from_hex("zz"));
}

TEST(Address, DerivedFromSeedDigest) {
  EXPECT_EQ(address_for_seed("").hex(), "0xe3b0c44298fc1c149afbf4c8996fb92427ae41e4");
  EXPECT_EQ(address_for_seed("alice").hex(), "0x2bd806c97f0e00af1a1fc3328fa763a9269723c8");
  EXPECT_EQ(address_for_seed("alice"), address_for_seed("alice"));
  EXPECT_NE(address_for_seed("alice"), address_for_seed("bob"));
}

TEST(Address, ParseRequiresFullWidth) {
  auto a = address_for_seed("alice");
  EXPECT_EQ(Address::parse(a.hex()), a);
  EXPECT_FALSE(Address::parse("0x2bd806"));
  EXPECT_FALSE(Address::parse(a.hex().substr(2)));
  EXPECT_TRUE(Address::zero().is_zero());
}

TEST(Amount, ParseAndFormat) {
  EXPECT_EQ(Amount::parse("0"), Amount{});
  EXPECT_EQ(Amount::parse("1 ANTS"), Amount::ants(1));
  EXPECT_EQ(Amount::ants(1000).str(), "1000000000000000000000");
  EXPECT_EQ(Amount::max().str(), "340282366920938463463374607431768211455");
  EXPECT_EQ(Amount::parse("340282366920938463463374607431768211455"), Amount::max());
  EXPECT_FALSE(Amount::parse("340282366920938463463374607431768211456"));
  EXPECT_FALSE(Amount::parse("-1"));
  EXPECT_FALSE(Amount::parse(""));
  EXPECT_FALSE(Amount::parse("1e18"));
}

TEST(Amount, CheckedArithmetic) {
  EXPECT_EQ(Amount{5}.plus(Amount{7}), Amount{12});
  EXPECT_THROW(Amount::max().plus(Amount{1}), ProtocolError);
  EXPECT_THROW(Amount{5}.minus(Amount{6}), ProtocolError);
  EXPECT_EQ(Amount{5}.minus(Amount{5}), Amount{});
}

}  // namespace
}  // namespace ants
