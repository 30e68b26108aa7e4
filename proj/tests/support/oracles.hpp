#pragma once

// Reference computations that avoid the engine's own arithmetic paths: plain
// 64-bit modular exponentiation and a search-based proportional split.

#include <cstdint>
#include <map>

namespace ants::testing {

inline std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

/// g = 2, h = 4, p = 23.
inline std::uint64_t toy_commit(std::uint64_t v, std::uint64_t r) {
  return modpow(2, v, 23) * modpow(4, r, 23) % 23;
}

/// Largest x with x * total <= pool * score, found by bisection. Pools up to
/// 2^32 and score sums up to 2^31 stay inside 64 bits.
inline std::uint64_t proportional_share(std::uint64_t pool, std::uint64_t score, std::uint64_t total) {
  std::uint64_t lo = 0;
  std::uint64_t hi = pool;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (mid * total <= pool * score) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

/// Expected voting payouts; empty when every score is zero.
inline std::map<std::uint64_t, std::uint64_t> expected_payouts(std::uint64_t pool,
                                                               const std::map<std::uint64_t, std::uint64_t>& scores) {
  std::uint64_t total = 0;
  for (const auto& [id, score] : scores) total += score;
  std::map<std::uint64_t, std::uint64_t> out;
  if (total == 0) return out;
  std::uint64_t paid = 0;
  std::uint64_t best = scores.begin()->first;
  for (const auto& [id, score] : scores) {
    out[id] = proportional_share(pool, score, total);
    paid += out[id];
    if (score > scores.at(best)) best = id;
  }
  out[best] += pool - paid;
  return out;
}

}  // namespace ants::testing
