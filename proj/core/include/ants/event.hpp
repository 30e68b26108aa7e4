#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ants/types.hpp"

namespace ants {

using Attributes = std::vector<std::pair<std::string, std::string>>;

struct Event {
  std::uint64_t tx_index = 0;
  std::string name;
  Attributes attributes;

  /// One canonical JSON object: keys tx_index, name, attributes in that
  /// order, attributes in emission order. No trailing newline.
  std::string to_json_line() const;

  const std::string* attribute(std::string_view key) const;

  friend bool operator==(const Event&, const Event&) = default;
};

struct TxContext {
  Address sender;
  Timestamp now = 0;
  std::uint64_t tx_index = 0;
};

/// Per-transaction scratch: context plus the events emitted so far. Events
/// reach the environment log only when the transaction commits.
class Tx {
 public:
  explicit Tx(TxContext ctx) : ctx_(ctx) {}

  const TxContext& ctx() const { return ctx_; }
  const Address& sender() const { return ctx_.sender; }
  Timestamp now() const { return ctx_.now; }

  void emit(std::string name, Attributes attributes) {
    events_.push_back(Event{ctx_.tx_index, std::move(name), std::move(attributes)});
  }
  const std::vector<Event>& events() const { return events_; }
  std::vector<Event> take_events() { return std::move(events_); }

 private:
  TxContext ctx_;
  std::vector<Event> events_;
};

}  // namespace ants
