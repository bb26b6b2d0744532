#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cremona/gallery.hpp"

namespace cremona {

struct RunConfig {
  std::uint32_t prime = 101;
  int extension_bound = 3;
  long long gb_pair_budget = 200000;
  /// Largest point set scanned exhaustively (also bounds extension-field searches).
  std::uint64_t enumeration_budget = 2000000;
  int trials = 0;  // 0 keeps the per-check trial counts
  std::uint64_t seed = 1;
  /// PAPER checks are repeated over this prime; 0 disables.
  std::uint32_t recheck_prime = 32003;
  /// Zero all timings so reports are byte-identical.
  bool deterministic = false;
  void validate() const;
};

enum class CheckStatus { Pass, Fail, Unknown };
const char* to_string(CheckStatus s);

struct CheckResult {
  CheckSpec spec;
  nlohmann::json actual;
  CheckStatus status = CheckStatus::Unknown;
  std::string note;
  long long millis = 0;
  /// Result on the recheck prime, when run.
  std::optional<nlohmann::json> recheck_actual;
  std::uint32_t recheck_prime = 0;
};

struct Report {
  std::string example;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  bool pass() const;
  bool any_unknown() const;
  /// 0 all pass, 1 a check failed, 2 unknown (budget) without failures.
  int exit_code() const;
  nlohmann::json to_json() const;
};

/// Runs one check on an instance; errors become Unknown (budget) or Fail.
CheckResult run_check(const ExampleInstance& inst, const CheckSpec& spec, const RunConfig& config);

/// Executes every check of the instance manifest; never throws on check errors.
Report verify_manifest(const ExampleInstance& inst, const RunConfig& config);

/// {"rank", "dim", "equations", "intersection"} with equations in symmetric representation.
nlohmann::json fiber_to_json(const FiberReport& fr, std::uint32_t p);

/// Field-free integer bookkeeping; never rerun on the recheck prime.
bool is_arithmetic_op(const std::string& op);

/// Names of the registered check operations.
std::vector<std::string> check_ops();

}  // namespace cremona
