#include "ants/confidential.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>

#include "ants/state.hpp"

namespace ants {

namespace {

constexpr const char* kStandardP = "0xc00000000000000000000000000000000000000000000000000000000000a0eb";

BigInt from_bytes(const Hash32& digest) {
  return BigInt(to_hex(digest));
}

std::string join_ids(const std::vector<std::uint64_t>& ids) {
  std::string out;
  for (auto id : ids) {
    if (!out.empty()) out += ',';
    out += std::to_string(id);
  }
  return out;
}

}  // namespace

GroupParams GroupParams::standard() {
  static const GroupParams kParams = [] {
    GroupParams params;
    params.p = BigInt(kStandardP);
    params.q = (params.p - 1) / 2;
    params.g = 4;
    params.h = hash_to_group(params.p, params.g);
    return params;
  }();
  return kParams;
}

GroupParams GroupParams::toy() { return GroupParams{23, 11, 2, 4}; }

BigInt GroupParams::hash_to_group(const BigInt& p, const BigInt& g) {
  GroupParams shape{p, 0, 0, 0};
  const std::string prefix = "ants-review/h/" + shape.element_hex(g) + "/";
  for (std::uint64_t counter = 0;; ++counter) {
    BigInt x = from_bytes(sha256(prefix + std::to_string(counter))) % p;
    BigInt h = boost::multiprecision::powm(x, BigInt(2), p);
    if (h > 1) return h;
  }
}

void GroupParams::validate() const {
  if (p < 5 || q < 2) throw std::invalid_argument("group parameters too small");
  if ((p - 1) % q != 0) throw std::invalid_argument("q does not divide p - 1");
  if (!boost::multiprecision::miller_rabin_test(p, 25)) throw std::invalid_argument("p is not prime");
  if (!boost::multiprecision::miller_rabin_test(q, 25)) throw std::invalid_argument("q is not prime");
  if (g == 1 || !in_subgroup(g)) throw std::invalid_argument("g is not a generator of the order-q subgroup");
  if (h == 1 || !in_subgroup(h)) throw std::invalid_argument("h is not a generator of the order-q subgroup");
}

bool GroupParams::in_subgroup(const BigInt& element) const {
  if (element < 1 || element >= p) return false;
  return boost::multiprecision::powm(element, q, p) == 1;
}

std::size_t GroupParams::element_width() const {
  return (boost::multiprecision::msb(p) + 8) / 8;
}

std::string GroupParams::element_hex(const BigInt& element) const {
  std::string digits = element.str(0, std::ios_base::hex);
  for (auto& c : digits) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::size_t width = std::max(element_width() * 2, digits.size() + digits.size() % 2);
  return "0x" + std::string(width - digits.size(), '0') + digits;
}

BigInt parse_bigint(std::string_view text) {
  bool hex = text.starts_with("0x") || text.starts_with("0X");
  std::string_view digits = hex ? text.substr(2) : text;
  if (digits.empty()) throw std::invalid_argument("empty integer");
  for (char c : digits) {
    bool ok = hex ? std::isxdigit(static_cast<unsigned char>(c)) != 0 : (c >= '0' && c <= '9');
    if (!ok) throw std::invalid_argument("malformed integer: " + std::string(text));
  }
  return BigInt(hex ? "0x" + std::string(digits) : std::string(digits));
}

BigInt commit(const GroupParams& params, const BigInt& value, const BigInt& randomness) {
  using boost::multiprecision::powm;
  BigInt gv = powm(params.g, value % params.q, params.p);
  BigInt hr = powm(params.h, randomness % params.q, params.p);
  return (gv * hr) % params.p;
}

bool verify_commitment(const GroupParams& params, const BigInt& commitment, const BigInt& value,
                       const BigInt& randomness) {
  return commit(params, value, randomness) == commitment;
}

bool verify_join_split(const GroupParams& params, std::span<const BigInt> inputs, std::span<const BigInt> outputs,
                       const BigInt& delta_r) {
  if (inputs.empty() || outputs.empty()) return false;
  if (delta_r % params.q != 0) return false;
  BigInt in = 1;
  for (const auto& c : inputs) in = (in * c) % params.p;
  BigInt out = 1;
  for (const auto& c : outputs) out = (out * c) % params.p;
  return in == out;
}

namespace confidential {

namespace {
Note& find_mut(State& state, std::uint64_t note_id) {
  auto it = state.notes.notes.find(note_id);
  if (it == state.notes.notes.end()) throw ProtocolError("unknown_note", std::to_string(note_id));
  return it->second;
}

void require_scalar(const GroupParams& params, const BigInt& r) {
  if (r < 0 || r >= params.q) throw ProtocolError("bad_randomness");
}

constexpr Amount::Rep kValueBound = Amount::Rep{1} << 64;
}  // namespace

const Note& find_note(const State& state, std::uint64_t note_id) {
  auto it = state.notes.notes.find(note_id);
  if (it == state.notes.notes.end()) throw ProtocolError("unknown_note", std::to_string(note_id));
  return it->second;
}

Note shield(State& state, Tx& tx, Amount amount, const BigInt& randomness) {
  state.roles.require_not_paused();
  const auto& params = state.notes.params;
  if (amount.units() >= kValueBound) throw ProtocolError("value_out_of_range");
  require_scalar(params, randomness);

  state.token.burn(tx, tx.sender(), amount);
  Note note{state.notes.next_id++, commit(params, BigInt(static_cast<std::uint64_t>(amount.units())), randomness),
            tx.sender(), false};
  state.notes.notes.emplace(note.id, note);
  tx.emit("Shielded", {{"note_id", std::to_string(note.id)},
                       {"owner", note.owner.hex()},
                       {"commitment", params.element_hex(note.commitment)}});
  return note;
}

std::vector<Note> join_split(State& state, Tx& tx, const JoinSplitRequest& request) {
  state.roles.require_not_paused();
  const auto& params = state.notes.params;
  if (request.input_note_ids.empty() || request.output_commitments.empty()) {
    throw ProtocolError("empty_join_split");
  }
  if (request.output_commitments.size() != request.output_owners.size()) {
    throw ProtocolError("owner_count_mismatch");
  }

  std::set<std::uint64_t> seen;
  std::vector<BigInt> inputs;
  for (auto id : request.input_note_ids) {
    if (!seen.insert(id).second) throw ProtocolError("duplicate_input");
    const Note& note = find_note(state, id);
    if (note.owner != tx.sender()) throw ProtocolError("not_owner");
    if (note.spent) throw ProtocolError("spent");
    inputs.push_back(note.commitment);
  }
  for (std::size_t i = 0; i < request.output_commitments.size(); ++i) {
    if (!params.in_subgroup(request.output_commitments[i])) throw ProtocolError("bad_commitment");
    if (request.output_owners[i].is_zero()) throw ProtocolError("zero_address", "output owner");
  }
  if (request.delta_r % params.q != 0) throw ProtocolError("unbalanced_randomness");
  if (!verify_join_split(params, inputs, request.output_commitments, request.delta_r)) {
    throw ProtocolError("verification_failed");
  }

  for (auto id : request.input_note_ids) find_mut(state, id).spent = true;
  std::vector<Note> created;
  std::vector<std::uint64_t> output_ids;
  std::string commitments;
  for (std::size_t i = 0; i < request.output_commitments.size(); ++i) {
    Note note{state.notes.next_id++, request.output_commitments[i], request.output_owners[i], false};
    state.notes.notes.emplace(note.id, note);
    output_ids.push_back(note.id);
    if (!commitments.empty()) commitments += ',';
    commitments += params.element_hex(note.commitment);
    created.push_back(std::move(note));
  }
  tx.emit("JoinSplit", {{"inputs", join_ids(request.input_note_ids)},
                        {"outputs", join_ids(output_ids)},
                        {"commitments", commitments}});
  return created;
}

Amount unshield(State& state, Tx& tx, std::uint64_t note_id, std::uint64_t value, const BigInt& randomness) {
  state.roles.require_not_paused();
  const auto& params = state.notes.params;
  Note& note = find_mut(state, note_id);
  if (note.owner != tx.sender()) throw ProtocolError("not_owner");
  if (note.spent) throw ProtocolError("spent");
  require_scalar(params, randomness);
  if (!verify_commitment(params, note.commitment, BigInt(value), randomness)) {
    throw ProtocolError("opening_mismatch");
  }

  note.spent = true;
  Amount amount{static_cast<Amount::Rep>(value)};
  state.token.mint(tx, tx.sender(), amount);
  tx.emit("Unshielded", {{"note_id", std::to_string(note_id)}, {"owner", tx.sender().hex()}});
  return amount;
}

}  // namespace confidential
}  // namespace ants
