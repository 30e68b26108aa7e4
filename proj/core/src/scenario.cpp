#include "ants/scenario.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "ants/serialize.hpp"

namespace ants {

namespace {

using json = nlohmann::json;

struct ScenarioError {
  int exit_code;
  std::string message;
};

[[noreturn]] void parse_error(const std::string& message) { throw ScenarioError{2, message}; }
[[noreturn]] void run_failure(const std::string& message) { throw ScenarioError{1, message}; }

std::string trim(const std::string& line) {
  auto begin = line.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  auto end = line.find_last_not_of(" \t\r\n");
  return line.substr(begin, end - begin + 1);
}

const json& field(const json& cmd, const char* key) {
  if (!cmd.contains(key)) parse_error(std::string("missing '") + key + "'");
  return cmd.at(key);
}

std::string string_field(const json& cmd, const char* key) {
  const auto& v = field(cmd, key);
  if (!v.is_string()) parse_error(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

// "@seed" in an expected attribute value stands for that account's address.
std::string expand(const std::string& value) {
  if (value.size() > 1 && value[0] == '@') return address_for_seed(value.substr(1)).hex();
  return value;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool event_matches(const Event& event, const json& match) {
  if (match.contains("name") && scalar_text(match.at("name")) != event.name) return false;
  if (match.contains("attributes")) {
    for (const auto& [key, expected] : match.at("attributes").items()) {
      const std::string* actual = event.attribute(key);
      if (actual == nullptr || *actual != expand(scalar_text(expected))) return false;
    }
  }
  return true;
}

bool values_equal(const json& actual, const json& expected) {
  if (actual == expected) return true;
  if (actual.is_primitive() && expected.is_primitive()) {
    return scalar_text(actual) == expand(scalar_text(expected));
  }
  return false;
}

}  // namespace

nlohmann::json query_state(const Environment& env, std::string_view path) {
  if (path.starts_with("balance/")) {
    return env.state().token.balance_of(resolve_address(path.substr(8))).str();
  }
  if (path == "total_supply") return env.state().token.total_supply().str();
  if (path == "now") return env.now();
  if (path == "escrow") return env.state().token.balance_of(escrow_address()).str();
  if (path == "digest") return to_hex(env.state_digest());
  if (path.starts_with("/")) {
    json doc = json::parse(to_json(env.state()).dump());
    try {
      return doc.at(json::json_pointer(std::string(path)));
    } catch (const json::exception& e) {
      throw std::invalid_argument("no state at '" + std::string(path) + "'");
    }
  }
  throw std::invalid_argument("unknown state path '" + std::string(path) + "'");
}

RunOutcome ScenarioRunner::run(std::istream& in, std::ostream& log) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.starts_with("#") || line.starts_with("//")) continue;
    try {
      json cmd;
      try {
        cmd = json::parse(line);
      } catch (const json::parse_error& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
      }
      if (!cmd.is_object()) parse_error("command must be a JSON object");
      const std::string op = string_field(cmd, "op");

      if (op == "create_account") {
        env_.create_account(string_field(cmd, "seed"));
      } else if (op == "advance_time") {
        const auto& delta = field(cmd, "delta");
        if (!delta.is_number_unsigned()) parse_error("'delta' must be an unsigned integer");
        env_.advance_time(delta.get<std::uint64_t>());
      } else if (op == "put") {
        if (cmd.contains("content_hex")) {
          auto bytes = from_hex(string_field(cmd, "content_hex"));
          if (!bytes) parse_error("malformed content_hex");
          env_.store().put(*bytes);
        } else {
          env_.store().put(string_field(cmd, "content"));
        }
      } else if (op == "assert_event") {
        const auto& match = field(cmd, "match");
        if (!match.is_object()) parse_error("'match' must be an object");
        bool found = false;
        for (const auto& event : env_.log()) found = found || event_matches(event, match);
        if (!found) run_failure("assert_event: no event matches " + match.dump());
      } else if (op == "assert_state") {
        const std::string path = string_field(cmd, "path");
        const auto& expected = field(cmd, "equals");
        json actual;
        try {
          actual = query_state(env_, path);
        } catch (const std::invalid_argument& e) {
          run_failure(std::string("assert_state: ") + e.what());
        } catch (const DecodeError& e) {
          parse_error(e.what());
        }
        if (!values_equal(actual, expected)) {
          run_failure("assert_state " + path + ": expected " + expected.dump() + ", got " + actual.dump());
        }
      } else if (is_protocol_call(op)) {
        const std::string as = string_field(cmd, "as");
        Address sender;
        try {
          sender = resolve_address(as);
        } catch (const DecodeError& e) {
          parse_error(e.what());
        }
        if (!as.starts_with("0x") && as != "$escrow" && !env_.state().accounts.contains(sender)) {
          env_.create_account(as);
        }
        ProtocolCall call;
        try {
          call = decode_call(op, cmd.value("args", json::object()), env_.now());
        } catch (const DecodeError& e) {
          parse_error(op + ": " + e.what());
        }
        auto result = env_.execute(sender, call);
        for (const auto& event : result.events) log << event.to_json_line() << '\n';
        if (options_.strict && !result.ok) run_failure("strict: " + op + " failed with " + result.error);
      } else {
        parse_error("unknown op '" + op + "'");
      }
    } catch (const ScenarioError& e) {
      return RunOutcome{e.exit_code, line_no, "line " + std::to_string(line_no) + ": " + e.message};
    } catch (const ProtocolError& e) {
      return RunOutcome{1, line_no, "line " + std::to_string(line_no) + ": " + e.what()};
    }
  }
  return RunOutcome{};
}

}  // namespace ants
