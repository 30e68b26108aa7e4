#pragma once

// Random operation sequences over every module, with a plaintext oracle for
// note values and per-step checks of the accounting identities.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "harness.hpp"

namespace ants::testing {

struct FuzzReport {
  std::size_t steps = 0;
  std::size_t committed = 0;
  std::size_t reverted = 0;
  std::map<std::string, std::size_t> committed_by_op;
  std::vector<std::string> violations;
};

class Fuzzer {
 public:
  explicit Fuzzer(std::uint64_t seed, const GenesisConfig& config = {});

  FuzzReport run(std::size_t steps);

  const Environment& env() const { return h_.env; }

 private:
  struct PlainNote {
    std::uint64_t value = 0;
    BigInt randomness;
    std::string owner;
    bool spent = false;
  };

  std::string pick_seed();
  Amount pick_amount();
  BigInt pick_scalar();
  std::uint64_t pick(std::uint64_t bound) { return bound == 0 ? 0 : rng_() % bound; }
  template <class T>
  const T& pick_from(const std::vector<T>& items) { return items[pick(items.size())]; }

  void step(FuzzReport& report);
  void confidential_step(FuzzReport& report, const std::string& sender);
  void record(FuzzReport& report, const std::string& what, bool condition);
  void check_after(FuzzReport& report, const std::string& op, const TxResult& result, const State& before);

  Harness h_;
  std::mt19937_64 rng_;
  std::vector<std::string> seeds_;
  std::map<std::uint64_t, PlainNote> notes_;
  Amount::Rep dripped_ = 0;
  Timestamp last_now_ = 0;
};

}  // namespace ants::testing
