#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ants/event.hpp"
#include "ants/types.hpp"

namespace ants {

struct State;

struct PoERecord {
  ContentHash hash;
  Timestamp first_seen = 0;
  Address submitter;

  friend bool operator==(const PoERecord&, const PoERecord&) = default;
};

/// Append-only hash -> first-seen registry.
using PoERegistry = std::map<ContentHash, PoERecord>;

/// Local content-addressed blob store. Blobs are immutable and shared, so
/// copying a store is cheap.
class ContentStore {
 public:
  static constexpr std::size_t kDefaultMaxSize = std::size_t{16} << 20;

  explicit ContentStore(std::size_t max_size = kDefaultMaxSize) : max_size_(max_size) {}

  /// Idempotent. Throws ProtocolError("oversize") past the configured limit.
  ContentHash put(std::span<const std::uint8_t> content);
  ContentHash put(std::string_view content);
  /// Throws ProtocolError("not_found").
  const Bytes& get(const ContentHash& hash) const;
  bool contains(const ContentHash& hash) const { return blobs_.contains(hash); }

  std::size_t size() const { return blobs_.size(); }
  std::size_t max_size() const { return max_size_; }
  const std::map<ContentHash, std::shared_ptr<const Bytes>>& blobs() const { return blobs_; }

  /// Writes one file per blob named by its 0x-hex hash.
  void export_dir(const std::filesystem::path& dir) const;
  /// Loads every regular file in `dir`; returns the hashes added.
  std::vector<ContentHash> import_dir(const std::filesystem::path& dir);

 private:
  std::size_t max_size_;
  std::map<ContentHash, std::shared_ptr<const Bytes>> blobs_;
};

namespace poe {

/// Creates the record on first sight; later calls return it unchanged.
PoERecord notarize(State& state, Tx& tx, const ContentHash& hash);
std::optional<PoERecord> verify_existence(const State& state, const ContentHash& hash);

}  // namespace poe
}  // namespace ants
