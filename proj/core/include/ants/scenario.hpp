#pragma once

#include <iosfwd>
#include <string>

#include "ants/env.hpp"

namespace ants {

struct RunOptions {
  /// Treat any Error event as a run failure.
  bool strict = false;
};

struct RunOutcome {
  /// 0 ok, 1 assertion or meta-op failure (or an Error event under strict),
  /// 2 parse error.
  int exit_code = 0;
  std::size_t line = 0;  // offending line, 1-based, when exit_code != 0
  std::string message;
};

/// Executes line-delimited JSON commands against an environment, streaming
/// each committed or error event to `log` as one canonical JSON line.
///
/// Each line is {"as": seed, "op": name, "args": {...}} for protocol calls,
/// or one of the meta-ops:
///   {"op":"create_account","seed":s}
///   {"op":"advance_time","delta":n}
///   {"op":"put","content":text} | {"op":"put","content_hex":hex}
///   {"op":"assert_event","match":{"name":n,"attributes":{k:v}}}
///   {"op":"assert_state","path":p,"equals":v}
/// Blank lines and lines starting with '#' or '//' are skipped. Unknown
/// senders are registered on first use.
class ScenarioRunner {
 public:
  ScenarioRunner(Environment& env, RunOptions options = {}) : env_(env), options_(options) {}

  RunOutcome run(std::istream& in, std::ostream& log);

 private:
  Environment& env_;
  RunOptions options_;
};

/// Resolves an assert_state path: "balance/<account>", "total_supply",
/// "now", or a JSON pointer into to_json(State). Throws std::invalid_argument
/// on unknown paths.
nlohmann::json query_state(const Environment& env, std::string_view path);

}  // namespace ants
