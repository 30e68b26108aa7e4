#include "ants/serialize.hpp"

#include <stdexcept>
#include <string>

namespace ants {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed state: " + what); }

Address addr_from(const json& j) {
  auto a = j.is_string() ? Address::parse(j.get<std::string>()) : std::nullopt;
  if (!a) bad("address " + j.dump());
  return *a;
}

ContentHash hash_from(const json& j) {
  auto h = j.is_string() ? ContentHash::parse(j.get<std::string>()) : std::nullopt;
  if (!h) bad("hash " + j.dump());
  return *h;
}

Amount amount_from(const json& j) {
  auto a = j.is_string() ? Amount::parse(j.get<std::string>()) : std::nullopt;
  if (!a) bad("amount " + j.dump());
  return *a;
}

BigInt bigint_from(const json& j) {
  if (!j.is_string()) bad("integer " + j.dump());
  return parse_bigint(j.get<std::string>());
}

std::uint64_t u64_from(const json& j, const std::string& key) {
  if (!j.is_number_unsigned()) bad(key);
  return j.get<std::uint64_t>();
}

// Both ordered_json and json parse into json for the inverse direction.
const json& at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing '") + key + "'");
  return j.at(key);
}

}  // namespace

OrderedJson to_json(const AntReview& review) {
  OrderedJson issuers = OrderedJson::array();
  for (const auto& a : review.issuers) issuers.push_back(a.hex());
  OrderedJson approvers = OrderedJson::array();
  for (const auto& a : review.approvers) approvers.push_back(a.hex());
  OrderedJson contributions = OrderedJson::array();
  for (const auto& c : review.contributions) {
    contributions.push_back({{"contributor", c.contributor.hex()}, {"amount", c.amount.str()}, {"refunded", c.refunded}});
  }
  OrderedJson fulfillments = OrderedJson::array();
  for (const auto& f : review.fulfillments) {
    OrderedJson versions = OrderedJson::array();
    for (const auto& v : f.versions) versions.push_back({{"hash", v.hash.hex()}, {"timestamp", v.submitted}});
    fulfillments.push_back({{"id", f.id},
                            {"reviewer", f.reviewer.hex()},
                            {"review_hashes", std::move(versions)},
                            {"accepted", f.accepted},
                            {"paid", f.paid.str()}});
  }
  return {{"id", review.id},
          {"issuers", std::move(issuers)},
          {"approvers", std::move(approvers)},
          {"paper_hash", review.paper_hash.hex()},
          {"requirements_hash", review.requirements_hash.hex()},
          {"deadline", review.deadline},
          {"balance", review.balance.str()},
          {"total_paid", review.total_paid.str()},
          {"total_withdrawn", review.total_withdrawn.str()},
          {"contributions", std::move(contributions)},
          {"fulfillments", std::move(fulfillments)}};
}

OrderedJson to_json(const GroupParams& params) {
  return {{"p", params.element_hex(params.p)},
          {"q", params.element_hex(params.q)},
          {"g", params.element_hex(params.g)},
          {"h", params.element_hex(params.h)}};
}

OrderedJson to_json(const GroupParams& params, const Note& note) {
  return {{"note_id", note.id},
          {"commitment", params.element_hex(note.commitment)},
          {"owner", note.owner.hex()},
          {"spent", note.spent}};
}

OrderedJson to_json(const VoteTally& tally) {
  OrderedJson counts = OrderedJson::object();
  for (const auto& [fid, c] : tally.counts) counts[std::to_string(fid)] = {{"up", c.up}, {"down", c.down}};
  OrderedJson voted = OrderedJson::array();
  for (const auto& [who, fid] : tally.voted) voted.push_back({who.hex(), fid});
  OrderedJson payouts = OrderedJson::object();
  for (const auto& [fid, amount] : tally.payouts) payouts[std::to_string(fid)] = amount.str();
  return {{"antreview_id", tally.antreview_id},
          {"pool", tally.pool.str()},
          {"finalized", tally.finalized},
          {"counts", std::move(counts)},
          {"voted", std::move(voted)},
          {"payouts", std::move(payouts)}};
}

OrderedJson to_json(const State& state) {
  OrderedJson accounts = OrderedJson::object();
  for (const auto& [addr, seed] : state.accounts) accounts[addr.hex()] = seed;

  OrderedJson balances = OrderedJson::object();
  for (const auto& [addr, amount] : state.token.balances()) balances[addr.hex()] = amount.str();
  OrderedJson allowances = OrderedJson::object();
  for (const auto& [owner, row] : state.token.allowances()) {
    OrderedJson r = OrderedJson::object();
    for (const auto& [spender, amount] : row) r[spender.hex()] = amount.str();
    allowances[owner.hex()] = std::move(r);
  }

  OrderedJson last_drip = OrderedJson::object();
  for (const auto& [addr, ts] : state.faucet.last_drip) last_drip[addr.hex()] = ts;

  OrderedJson members = OrderedJson::object();
  for (Role role : kAllRoles) {
    OrderedJson list = OrderedJson::array();
    for (const auto& a : state.roles.members(role)) list.push_back(a.hex());
    members[std::string(role_name(role))] = std::move(list);
  }

  OrderedJson poe = OrderedJson::object();
  for (const auto& [hash, rec] : state.poe) {
    poe[hash.hex()] = {{"first_seen", rec.first_seen}, {"submitter", rec.submitter.hex()}};
  }

  OrderedJson reviews = OrderedJson::array();
  for (const auto& r : state.antreviews) reviews.push_back(to_json(r));

  OrderedJson notes = OrderedJson::array();
  for (const auto& [id, note] : state.notes.notes) notes.push_back(to_json(state.notes.params, note));

  OrderedJson tallies = OrderedJson::object();
  for (const auto& [id, tally] : state.voting) tallies[std::to_string(id)] = to_json(tally);

  return {{"now", state.now},
          {"accounts", std::move(accounts)},
          {"token",
           {{"name", TokenLedger::kName},
            {"symbol", TokenLedger::kSymbol},
            {"decimals", TokenLedger::kDecimals},
            {"total_supply", state.token.total_supply().str()},
            {"balances", std::move(balances)},
            {"allowances", std::move(allowances)}}},
          {"faucet",
           {{"drip_amount", state.faucet.drip_amount.str()},
            {"cooldown", state.faucet.cooldown},
            {"last_drip", std::move(last_drip)}}},
          {"access", {{"paused", state.roles.paused()}, {"members", std::move(members)}}},
          {"poe", std::move(poe)},
          {"antreviews", std::move(reviews)},
          {"confidential",
           {{"params", to_json(state.notes.params)}, {"next_note_id", state.notes.next_id}, {"notes", std::move(notes)}}},
          {"voting", std::move(tallies)}};
}

GroupParams params_from_json(const json& j) {
  GroupParams params;
  params.p = bigint_from(at(j, "p"));
  params.q = j.contains("q") ? bigint_from(j.at("q")) : BigInt((params.p - 1) / 2);
  params.g = bigint_from(at(j, "g"));
  params.h = j.contains("h") ? bigint_from(j.at("h")) : GroupParams::hash_to_group(params.p, params.g);
  params.validate();
  return params;
}

State state_from_json(const json& j) {
  State s;
  s.now = u64_from(at(j, "now"), "now");
  for (const auto& [k, v] : at(j, "accounts").items()) s.accounts[addr_from(k)] = v.get<std::string>();

  const auto& tok = at(j, "token");
  TokenLedger::Balances balances;
  for (const auto& [k, v] : at(tok, "balances").items()) balances[addr_from(k)] = amount_from(v);
  TokenLedger::Allowances allowances;
  for (const auto& [owner, row] : at(tok, "allowances").items()) {
    for (const auto& [spender, v] : row.items()) allowances[addr_from(owner)][addr_from(spender)] = amount_from(v);
  }
  s.token.restore(std::move(balances), std::move(allowances), amount_from(at(tok, "total_supply")));

  const auto& faucet = at(j, "faucet");
  s.faucet.drip_amount = amount_from(at(faucet, "drip_amount"));
  s.faucet.cooldown = u64_from(at(faucet, "cooldown"), "cooldown");
  for (const auto& [k, v] : at(faucet, "last_drip").items()) s.faucet.last_drip[addr_from(k)] = u64_from(v, "last_drip");

  const auto& access = at(j, "access");
  s.roles.set_paused(at(access, "paused").get<bool>());
  for (const auto& [name, list] : at(access, "members").items()) {
    auto role = parse_role(name);
    if (!role) bad("role " + name);
    for (const auto& a : list) s.roles.add(*role, addr_from(a));
  }

  for (const auto& [k, v] : at(j, "poe").items()) {
    auto hash = hash_from(k);
    s.poe[hash] = PoERecord{hash, u64_from(at(v, "first_seen"), "first_seen"), addr_from(at(v, "submitter"))};
  }

  for (const auto& r : at(j, "antreviews")) {
    AntReview review;
    review.id = u64_from(at(r, "id"), "id");
    if (review.id != s.antreviews.size()) bad("antreview ids must be sequential");
    for (const auto& a : at(r, "issuers")) review.issuers.push_back(addr_from(a));
    for (const auto& a : at(r, "approvers")) review.approvers.insert(addr_from(a));
    review.paper_hash = hash_from(at(r, "paper_hash"));
    review.requirements_hash = hash_from(at(r, "requirements_hash"));
    review.deadline = u64_from(at(r, "deadline"), "deadline");
    review.balance = amount_from(at(r, "balance"));
    review.total_paid = amount_from(at(r, "total_paid"));
    review.total_withdrawn = amount_from(at(r, "total_withdrawn"));
    for (const auto& c : at(r, "contributions")) {
      review.contributions.push_back(
          Contribution{addr_from(at(c, "contributor")), amount_from(at(c, "amount")), at(c, "refunded").get<bool>()});
    }
    for (const auto& f : at(r, "fulfillments")) {
      Fulfillment ful;
      ful.id = u64_from(at(f, "id"), "fulfillment id");
      ful.reviewer = addr_from(at(f, "reviewer"));
      for (const auto& v : at(f, "review_hashes")) {
        ful.versions.push_back(ReviewVersion{hash_from(at(v, "hash")), u64_from(at(v, "timestamp"), "timestamp")});
      }
      ful.accepted = at(f, "accepted").get<bool>();
      ful.paid = amount_from(at(f, "paid"));
      review.fulfillments.push_back(std::move(ful));
    }
    s.antreviews.push_back(std::move(review));
  }

  const auto& conf = at(j, "confidential");
  s.notes.params = params_from_json(at(conf, "params"));
  s.notes.next_id = u64_from(at(conf, "next_note_id"), "next_note_id");
  for (const auto& n : at(conf, "notes")) {
    Note note{u64_from(at(n, "note_id"), "note_id"), bigint_from(at(n, "commitment")), addr_from(at(n, "owner")),
              at(n, "spent").get<bool>()};
    s.notes.notes.emplace(note.id, std::move(note));
  }

  for (const auto& [k, t] : at(j, "voting").items()) {
    VoteTally tally;
    tally.antreview_id = u64_from(at(t, "antreview_id"), "antreview_id");
    tally.pool = amount_from(at(t, "pool"));
    tally.finalized = at(t, "finalized").get<bool>();
    for (const auto& [fid, c] : at(t, "counts").items()) {
      tally.counts[std::stoull(fid)] = VoteCount{u64_from(at(c, "up"), "up"), u64_from(at(c, "down"), "down")};
    }
    for (const auto& pair : at(t, "voted")) {
      if (!pair.is_array() || pair.size() != 2) bad("voted entry");
      tally.voted.emplace(addr_from(pair[0]), u64_from(pair[1], "voted"));
    }
    for (const auto& [fid, amount] : at(t, "payouts").items()) tally.payouts[std::stoull(fid)] = amount_from(amount);
    s.voting.emplace(std::stoull(k), std::move(tally));
  }
  return s;
}

Hash32 digest_of(const State& state) { return sha256(to_json(state).dump()); }

}  // namespace ants
