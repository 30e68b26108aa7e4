#include "ants/poe.hpp"

#include <fstream>
#include <iterator>
#include <stdexcept>

#include "ants/state.hpp"

namespace ants {

ContentHash ContentStore::put(std::span<const std::uint8_t> content) {
  if (content.size() > max_size_) {
    throw ProtocolError("oversize", std::to_string(content.size()) + " > " + std::to_string(max_size_));
  }
  auto hash = ContentHash::of(content);
  if (!blobs_.contains(hash)) blobs_.emplace(hash, std::make_shared<const Bytes>(content.begin(), content.end()));
  return hash;
}

ContentHash ContentStore::put(std::string_view content) {
  return put(std::span{reinterpret_cast<const std::uint8_t*>(content.data()), content.size()});
}

const Bytes& ContentStore::get(const ContentHash& hash) const {
  auto it = blobs_.find(hash);
  if (it == blobs_.end()) throw ProtocolError("not_found", hash.hex());
  return *it->second;
}

void ContentStore::export_dir(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  for (const auto& [hash, blob] : blobs_) {
    std::ofstream out(dir / hash.hex(), std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(blob->data()), static_cast<std::streamsize>(blob->size()));
    if (!out) throw std::runtime_error("cannot write " + (dir / hash.hex()).string());
  }
}

std::vector<ContentHash> ContentStore::import_dir(const std::filesystem::path& dir) {
  std::vector<ContentHash> added;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    Bytes content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    added.push_back(put(content));
  }
  return added;
}

namespace poe {

PoERecord notarize(State& state, Tx& tx, const ContentHash& hash) {
  auto [it, inserted] = state.poe.try_emplace(hash, PoERecord{hash, tx.now(), tx.sender()});
  if (inserted) {
    tx.emit("PoE", {{"hash", hash.hex()}, {"first_seen", std::to_string(tx.now())}, {"submitter", tx.sender().hex()}});
  }
  return it->second;
}

std::optional<PoERecord> verify_existence(const State& state, const ContentHash& hash) {
  auto it = state.poe.find(hash);
  if (it == state.poe.end()) return std::nullopt;
  return it->second;
}

}  // namespace poe
}  // namespace ants
