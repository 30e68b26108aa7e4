#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "ants/hash.hpp"

namespace ants {

using Timestamp = std::uint64_t;

/// Raised by protocol operations. `code` is a stable snake_case identifier
/// that ends up in the Error event; the message is for humans.
class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(std::string code, const std::string& detail)
      : std::runtime_error(detail.empty() ? code : code + ": " + detail), code_(std::move(code)) {}
  explicit ProtocolError(std::string code) : ProtocolError(std::move(code), "") {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class Address {
 public:
  static constexpr std::size_t kSize = 20;
  using Raw = std::array<std::uint8_t, kSize>;

  constexpr Address() = default;
  constexpr explicit Address(const Raw& raw) : bytes_(raw) {}

  /// First 20 bytes of a 32-byte digest.
  static Address from_digest(const Hash32& digest);
  /// 0x + 40 hex characters.
  static std::optional<Address> parse(std::string_view hex);
  static constexpr Address zero() { return Address{}; }

  bool is_zero() const;
  const Raw& bytes() const { return bytes_; }
  std::string hex() const;

  friend auto operator<=>(const Address&, const Address&) = default;

 private:
  Raw bytes_{};
};

class ContentHash {
 public:
  constexpr ContentHash() = default;
  constexpr explicit ContentHash(const Hash32& digest) : digest_(digest) {}

  static ContentHash of(std::span<const std::uint8_t> content) { return ContentHash{sha256(content)}; }
  static ContentHash of(std::string_view content) { return ContentHash{sha256(content)}; }
  /// 0x + 64 hex characters.
  static std::optional<ContentHash> parse(std::string_view hex);

  const Hash32& digest() const { return digest_; }
  std::string hex() const { return to_hex(digest_); }

  friend auto operator<=>(const ContentHash&, const ContentHash&) = default;

 private:
  Hash32 digest_{};
};

/// ANTS base units (18 implied decimals). All arithmetic is checked and
/// throws ProtocolError on overflow or underflow, which aborts the enclosing
/// transaction.
class Amount {
 public:
  __extension__ typedef unsigned __int128 Rep;

  constexpr Amount() = default;
  constexpr explicit Amount(Rep units) : units_(units) {}

  static constexpr Amount ants(std::uint64_t whole) {
    return Amount{static_cast<Rep>(whole) * static_cast<Rep>(1'000'000'000'000'000'000ULL)};
  }
  static constexpr Amount max() { return Amount{~Rep{0}}; }

  /// Decimal integer of base units, optionally suffixed with " ANTS" to scale
  /// by 10^18.
  static std::optional<Amount> parse(std::string_view text);

  constexpr Rep units() const { return units_; }
  constexpr bool is_zero() const { return units_ == 0; }
  std::string str() const;

  Amount plus(Amount other) const;
  Amount minus(Amount other) const;

  friend constexpr auto operator<=>(const Amount&, const Amount&) = default;

 private:
  Rep units_ = 0;
};

}  // namespace ants
