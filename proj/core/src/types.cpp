#include "ants/types.hpp"

#include <algorithm>

namespace ants {

Address Address::from_digest(const Hash32& digest) {
  Raw raw{};
  std::copy_n(digest.begin(), kSize, raw.begin());
  return Address{raw};
}

std::optional<Address> Address::parse(std::string_view hex) {
  if (!hex.starts_with("0x") || hex.size() != 2 + 2 * kSize) return std::nullopt;
  auto bytes = from_hex(hex);
  if (!bytes) return std::nullopt;
  Raw raw{};
  std::copy(bytes->begin(), bytes->end(), raw.begin());
  return Address{raw};
}

bool Address::is_zero() const {
  return std::all_of(bytes_.begin(), bytes_.end(), [](std::uint8_t b) { return b == 0; });
}

std::string Address::hex() const { return to_hex(bytes_); }

std::optional<ContentHash> ContentHash::parse(std::string_view hex) {
  if (!hex.starts_with("0x") || hex.size() != 66) return std::nullopt;
  auto bytes = from_hex(hex);
  if (!bytes) return std::nullopt;
  Hash32 digest{};
  std::copy(bytes->begin(), bytes->end(), digest.begin());
  return ContentHash{digest};
}

std::optional<Amount> Amount::parse(std::string_view text) {
  Rep scale = 1;
  for (std::string_view suffix : {" ANTS", " ants"}) {
    if (text.ends_with(suffix)) {
      text.remove_suffix(suffix.size());
      scale = Amount::ants(1).units();
      break;
    }
  }
  if (text.empty() || text.size() > 39) return std::nullopt;
  Rep value = 0;
  constexpr Rep kMax = ~Rep{0};
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    Rep digit = static_cast<Rep>(c - '0');
    if (value > (kMax - digit) / 10) return std::nullopt;
    value = value * 10 + digit;
  }
  if (value != 0 && value > kMax / scale) return std::nullopt;
  return Amount{value * scale};
}

std::string Amount::str() const {
  if (units_ == 0) return "0";
  std::string out;
  for (Rep v = units_; v != 0; v /= 10) out += static_cast<char>('0' + static_cast<int>(v % 10));
  std::reverse(out.begin(), out.end());
  return out;
}

Amount Amount::plus(Amount other) const {
  Rep sum = units_ + other.units_;
  if (sum < units_) throw ProtocolError("arithmetic_overflow");
  return Amount{sum};
}

Amount Amount::minus(Amount other) const {
  if (other.units_ > units_) throw ProtocolError("arithmetic_underflow");
  return Amount{units_ - other.units_};
}

}  // namespace ants
