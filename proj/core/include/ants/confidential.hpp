#pragma once

// Value-hiding notes over Pedersen-style commitments C = g^v * h^r mod p in
// the prime-order-q subgroup of Z_p^*. This is a desk-scale stand-in for a
// zk-SNARK note system: conservation is checked through the commitment
// product, and there are no range proofs. Wraparound of v is prevented only by
// the v < 2^64 bound at shield/unshield and by q being large under the
// standard parameters.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "ants/event.hpp"
#include "ants/types.hpp"

namespace ants {

struct State;

using BigInt = boost::multiprecision::mpz_int;

struct GroupParams {
  BigInt p;
  BigInt q;
  BigInt g;
  BigInt h;

  /// 256-bit safe prime p = 2q + 1, g = 4, h = hash_to_group(g).
  static GroupParams standard();
  /// p = 23, q = 11, g = 2, h = 4. log_g(h) = 2 is public, so these are
  /// for exhaustive tests only.
  static GroupParams toy();

  /// Hashes "ants-review/h/<element_hex(g)>/<counter>" with SHA-256, reduces
  /// mod p and squares into the order-q subgroup, taking the first result
  /// other than 0 and 1.
  static BigInt hash_to_group(const BigInt& p, const BigInt& g);

  /// Throws std::invalid_argument unless q | p - 1, both are probable primes,
  /// g and h lie in the order-q subgroup and neither is 1.
  void validate() const;

  bool in_subgroup(const BigInt& element) const;
  /// Bytes needed to hold p.
  std::size_t element_width() const;
  /// 0x + fixed-width lowercase hex.
  std::string element_hex(const BigInt& element) const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Parses 0x-hex or decimal. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

BigInt commit(const GroupParams& params, const BigInt& value, const BigInt& randomness);
bool verify_commitment(const GroupParams& params, const BigInt& commitment, const BigInt& value,
                       const BigInt& randomness);

/// prod(inputs) == prod(outputs) * h^delta_r (mod p), with delta_r required
/// to be 0 mod q.
bool verify_join_split(const GroupParams& params, std::span<const BigInt> inputs,
                       std::span<const BigInt> outputs, const BigInt& delta_r);

struct Note {
  std::uint64_t id = 0;
  BigInt commitment;
  Address owner;
  bool spent = false;

  friend bool operator==(const Note&, const Note&) = default;
};

struct JoinSplitRequest {
  std::vector<std::uint64_t> input_note_ids;
  std::vector<BigInt> output_commitments;
  std::vector<Address> output_owners;
  BigInt delta_r = 0;
};

struct NoteRegistry {
  GroupParams params = GroupParams::standard();
  std::map<std::uint64_t, Note> notes;
  std::uint64_t next_id = 0;

  friend bool operator==(const NoteRegistry&, const NoteRegistry&) = default;
};

namespace confidential {

Note shield(State& state, Tx& tx, Amount amount, const BigInt& randomness);
std::vector<Note> join_split(State& state, Tx& tx, const JoinSplitRequest& request);
Amount unshield(State& state, Tx& tx, std::uint64_t note_id, std::uint64_t value, const BigInt& randomness);

/// Throws ProtocolError("unknown_note").
const Note& find_note(const State& state, std::uint64_t note_id);

}  // namespace confidential
}  // namespace ants
