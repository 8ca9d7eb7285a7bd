#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pathset::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one verb. `args` excludes the program name. A file argument of "-"
/// reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Report layout: `{"key": value, ...}` with ", " and ": " separators and
/// floats printed with 12 significant digits.
std::string format_report(const nlohmann::ordered_json& value);

}  // namespace pathset::cli
