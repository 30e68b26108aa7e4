// antsreview: scenario runner and state inspector.
//
//   antsreview run scenario.jsonl [--out log] [--strict] [--save-state s.json]
//                                 [--state-file s.json] [--params params.json]
//   antsreview show antreview|balance|note|tally <id> --state-file s.json
//   antsreview put-file <path> --state-file s.json
//   antsreview get-file <hash> <path> --state-file s.json
//   antsreview shield|unshield|join-split ... --state-file s.json --as <seed>
//
// Exit codes: 0 ok, 1 assertion/protocol failure or unknown id, 2 parse or IO
// error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ants/confidential.hpp"
#include "ants/env.hpp"
#include "ants/scenario.hpp"
#include "ants/serialize.hpp"

namespace {

using nlohmann::json;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void io_error(const std::string& message) { throw CliError{2, message}; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) io_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    io_error(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  if (!out) io_error("cannot write " + path);
}

ants::GenesisConfig genesis(const std::string& params_path) {
  ants::GenesisConfig config;
  if (!params_path.empty()) {
    try {
      config.params = ants::params_from_json(read_json_file(params_path));
    } catch (const std::invalid_argument& e) {
      io_error(params_path + ": " + e.what());
    }
  }
  return config;
}

ants::Environment load(const std::string& state_file, const std::string& params_path, bool allow_missing) {
  if (allow_missing && !std::filesystem::exists(state_file)) return ants::Environment(genesis(params_path));
  try {
    return ants::Environment::from_snapshot(read_json_file(state_file));
  } catch (const std::invalid_argument& e) {
    io_error(state_file + ": " + e.what());
  }
}

void save(const ants::Environment& env, const std::string& path) { write_file(path, env.snapshot().dump() + "\n"); }

int print_result(const ants::TxResult& result) {
  for (const auto& event : result.events) std::cout << event.to_json_line() << '\n';
  return result.ok ? 0 : 1;
}

// Protocol call against a snapshot file, saved back on success.
int exec_on_state(const std::string& state_file, const std::string& as, std::string_view op, const json& args) {
  auto env = load(state_file, "", true);
  ants::Address sender = ants::resolve_address(as);
  if (!env.state().accounts.contains(sender)) env.create_account(as);
  ants::ProtocolCall call;
  try {
    call = ants::decode_call(op, args, env.now());
  } catch (const ants::DecodeError& e) {
    io_error(e.what());
  }
  int rc = print_result(env.execute(sender, call));
  save(env, state_file);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ants-Review protocol engine"};
  app.require_subcommand(1);

  std::string scenario_path, out_path, save_path, state_file, params_path;
  bool strict = false;
  auto* run = app.add_subcommand("run", "Execute a line-delimited JSON scenario");
  run->add_option("scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", out_path, "Write the event log here instead of stdout");
  run->add_flag("--strict", strict, "Fail the run on any protocol error");
  run->add_option("--save-state", save_path, "Write a snapshot after the run");
  run->add_option("--state-file", state_file, "Start from this snapshot instead of genesis");
  run->add_option("--params", params_path, "Confidential group parameters (JSON with p, g and optional q, h)");

  std::string what, id;
  auto* show = app.add_subcommand("show", "Print canonical JSON for part of a snapshot");
  show->add_option("what", what, "antreview | balance | note | tally")
      ->required()
      ->check(CLI::IsMember({"antreview", "balance", "note", "tally"}));
  show->add_option("id", id, "Identifier (account seed or 0x address for balance)")->required();
  show->add_option("--state-file", state_file, "Snapshot")->required();
  auto* show_antreview = app.add_subcommand("show-antreview", "Same as 'show antreview <id>'");
  show_antreview->add_option("id", id, "AntReview id")->required();
  show_antreview->add_option("--state-file", state_file, "Snapshot")->required();

  std::string file_path, hash_text;
  auto* put_file = app.add_subcommand("put-file", "Store a file in the content store and print its hash");
  put_file->add_option("path", file_path)->required();
  put_file->add_option("--state-file", state_file, "Snapshot (created if missing)")->required();

  auto* get_file = app.add_subcommand("get-file", "Write stored content to a file");
  get_file->add_option("hash", hash_text)->required();
  get_file->add_option("path", file_path)->required();
  get_file->add_option("--state-file", state_file, "Snapshot")->required();

  std::string dir;
  auto* export_store = app.add_subcommand("export-store", "Write every stored blob to <dir>/<hash>");
  export_store->add_option("dir", dir)->required();
  export_store->add_option("--state-file", state_file, "Snapshot")->required();
  auto* import_store = app.add_subcommand("import-store", "Load every file in <dir> into the content store");
  import_store->add_option("dir", dir)->required();
  import_store->add_option("--state-file", state_file, "Snapshot (created if missing)")->required();

  std::string as, amount, randomness, request_path;
  std::uint64_t note_id = 0, value = 0;
  auto* shield = app.add_subcommand("shield", "Convert public ANTS into a note");
  shield->add_option("amount", amount)->required();
  shield->add_option("r", randomness, "Blinding scalar in [0, q)")->required();
  shield->add_option("--as", as, "Sender seed")->required();
  shield->add_option("--state-file", state_file, "Snapshot")->required();

  auto* unshield = app.add_subcommand("unshield", "Open a note back into public ANTS");
  unshield->add_option("note_id", note_id)->required();
  unshield->add_option("v", value)->required();
  unshield->add_option("r", randomness)->required();
  unshield->add_option("--as", as, "Sender seed")->required();
  unshield->add_option("--state-file", state_file, "Snapshot")->required();

  auto* join_split = app.add_subcommand("join-split", "Spend notes into new notes; reads a request JSON");
  join_split->add_option("request", request_path, "{\"inputs\":[..],\"outputs\":[{\"commitment\",\"owner\"}]}")
      ->required();
  join_split->add_option("--as", as, "Sender seed")->required();
  join_split->add_option("--state-file", state_file, "Snapshot")->required();

  std::string commit_v;
  auto* commit = app.add_subcommand("commit", "Print the commitment g^v h^r mod p");
  commit->add_option("v", commit_v)->required();
  commit->add_option("r", randomness)->required();
  commit->add_option("--params", params_path, "Group parameters (default: standard)");

  auto* digest = app.add_subcommand("digest", "Print the state digest of a snapshot");
  digest->add_option("--state-file", state_file, "Snapshot")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      std::ifstream in(scenario_path);
      if (!in) io_error("cannot open " + scenario_path);
      auto env = state_file.empty() ? ants::Environment(genesis(params_path)) : load(state_file, params_path, false);

      std::ofstream out_file;
      if (!out_path.empty()) {
        out_file.open(out_path, std::ios::trunc);
        if (!out_file) io_error("cannot write " + out_path);
      }
      std::ostream& log = out_path.empty() ? std::cout : out_file;
      auto outcome = ants::ScenarioRunner(env, {strict}).run(in, log);
      log.flush();
      std::cout << ants::to_hex(env.state_digest()) << '\n';
      if (!save_path.empty()) save(env, save_path);
      if (outcome.exit_code != 0) std::cerr << scenario_path << ": " << outcome.message << '\n';
      return outcome.exit_code;
    }

    if (show_antreview->parsed()) what = "antreview";
    if (show->parsed() || show_antreview->parsed()) {
      auto env = load(state_file, "", false);
      const auto& state = env.state();
      try {
        if (what == "balance") {
          std::cout << json(state.token.balance_of(ants::resolve_address(id)).str()).dump() << '\n';
          return 0;
        }
        std::uint64_t key = std::stoull(id);
        if (what == "antreview") {
          std::cout << ants::to_json(ants::antsreview::find(state, key)).dump() << '\n';
        } else if (what == "note") {
          std::cout << ants::to_json(state.notes.params, ants::confidential::find_note(state, key)).dump() << '\n';
        } else {
          std::cout << ants::to_json(ants::voting::find_tally(state, key)).dump() << '\n';
        }
        return 0;
      } catch (const ants::ProtocolError& e) {
        std::cerr << e.what() << '\n';
        return 1;
      } catch (const std::logic_error&) {
        std::cerr << "bad id '" << id << "'\n";
        return 1;
      }
    }

    if (put_file->parsed()) {
      std::ifstream in(file_path, std::ios::binary);
      if (!in) io_error("cannot open " + file_path);
      ants::Bytes content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
      auto env = load(state_file, "", true);
      auto hash = env.store().put(content);
      save(env, state_file);
      std::cout << hash.hex() << '\n';
      return 0;
    }

    if (get_file->parsed()) {
      auto env = load(state_file, "", false);
      auto hash = ants::ContentHash::parse(hash_text);
      if (!hash) io_error("malformed hash " + hash_text);
      if (!env.store().contains(*hash)) {
        std::cerr << "not found: " << hash_text << '\n';
        return 1;
      }
      const auto& blob = env.store().get(*hash);
      write_file(file_path, std::string(blob.begin(), blob.end()));
      return 0;
    }

    if (export_store->parsed()) {
      load(state_file, "", false).store().export_dir(dir);
      return 0;
    }

    if (import_store->parsed()) {
      auto env = load(state_file, "", true);
      for (const auto& hash : env.store().import_dir(dir)) std::cout << hash.hex() << '\n';
      save(env, state_file);
      return 0;
    }

    if (shield->parsed()) {
      return exec_on_state(state_file, as, "shield", {{"amount", amount}, {"r", randomness}});
    }
    if (unshield->parsed()) {
      return exec_on_state(state_file, as, "unshield", {{"note_id", note_id}, {"v", value}, {"r", randomness}});
    }
    if (join_split->parsed()) {
      return exec_on_state(state_file, as, "join_split", read_json_file(request_path));
    }

    if (commit->parsed()) {
      auto params = genesis(params_path).params;
      std::cout << params.element_hex(ants::commit(params, ants::parse_bigint(commit_v), ants::parse_bigint(randomness)))
                << '\n';
      return 0;
    }

    if (digest->parsed()) {
      std::cout << ants::to_hex(load(state_file, "", false).state_digest()) << '\n';
      return 0;
    }
  } catch (const CliError& e) {
    std::cerr << "antsreview: " << e.message << '\n';
    return e.code;
  } catch (const ants::DecodeError& e) {
    std::cerr << "antsreview: " << e.what() << '\n';
    return 2;
  } catch (const ants::ProtocolError& e) {
    std::cerr << "antsreview: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "antsreview: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
