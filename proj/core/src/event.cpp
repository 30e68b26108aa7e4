#include "ants/event.hpp"

#include <nlohmann/json.hpp>

namespace ants {

std::string Event::to_json_line() const {
  nlohmann::ordered_json attrs = nlohmann::ordered_json::object();
  for (const auto& [key, value] : attributes) attrs[key] = value;
  nlohmann::ordered_json line;
  line["tx_index"] = tx_index;
  line["name"] = name;
  line["attributes"] = std::move(attrs);
  return line.dump();
}

const std::string* Event::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

}  // namespace ants
