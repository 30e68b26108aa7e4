#pragma once

// Engine-wide 32-byte digest. Every content hash, account address and state
// digest is derived from SHA-256.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ants {

using Hash32 = std::array<std::uint8_t, 32>;
using Bytes = std::vector<std::uint8_t>;

Hash32 sha256(std::span<const std::uint8_t> data);
Hash32 sha256(std::string_view data);

/// Lowercase hex with a 0x prefix.
std::string to_hex(std::span<const std::uint8_t> data);

/// Accepts an optional 0x prefix; either case. Returns nullopt on odd length
/// or non-hex characters.
std::optional<Bytes> from_hex(std::string_view text);

}  // namespace ants
