#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qdent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Thrown for invalid parameters detected after flag parsing; maps to exit 2.
struct UsageError {
  std::string message;
};

// Thrown when output cannot be written; maps to exit 3.
struct IoError {
  std::string message;
};

// 15 significant digits, scientific notation.
std::string format_number(double value);

std::string utc_timestamp();

nlohmann::json manifest(const std::string& command, const nlohmann::json& parameters);

// '#'-prefixed manifest line followed by the column header.
std::string csv_preamble(const nlohmann::json& manifest, const std::vector<std::string>& columns);

// Writes `content` to `path`, or to stdout for "-". Throws IoError.
void write_output(const std::string& path, const std::string& content);

// "a..b" (inclusive), "a", or comma-separated lists of either. Throws UsageError.
std::vector<int> parse_int_range(const std::string& text);

}  // namespace qdent::cli
