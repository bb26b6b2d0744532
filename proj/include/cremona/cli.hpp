#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cremona/verify.hpp"

namespace cremona::cli {

enum ExitCode { Ok = 0, Failed = 1, Budget = 2, Usage = 3 };

/// Matrix file {"m", "n", "rows"}; coefficients reduced mod p. MalformedSpec on bad shape.
PolyMatrix matrix_from_json(const nlohmann::json& j, std::uint32_t p);

/// Colon separated coordinates, reduced mod p and normalized.
Point parse_point(const std::string& text, std::uint32_t p, int nvars);

/// Every numerical relation instance with its provenance and anchor, in a fixed order.
nlohmann::json relation_table();

/// Entry point of the command line tool; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cremona::cli
