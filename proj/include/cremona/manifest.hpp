#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cremona {

enum class Provenance { Paper, Derived, Trivial };
const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// One machine-checkable fact: run `op` with `args`, compare with `expected`.
struct CheckSpec {
  std::string name;
  std::string op;
  nlohmann::json args = nlohmann::json::object();
  nlohmann::json expected;
  /// Keys of the op result to compare; empty compares the whole result.
  std::vector<std::string> select;
  Provenance provenance = Provenance::Derived;
  std::string anchor;
  /// Rerun on the recheck prime (skipped for facts tied to one field).
  bool recheck = true;
};

struct Manifest {
  std::vector<CheckSpec> checks;
};

nlohmann::json to_json(const CheckSpec& c);
CheckSpec check_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Manifest& m);
Manifest manifest_from_json(const nlohmann::json& j);

/// Built-in manifest of a gallery example; UnknownId otherwise.
Manifest default_manifest(const std::string& id);

}  // namespace cremona
