#include "output.hpp"

#include <qdent/qdent.h>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qdent::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.14e", value);
  return buf;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json manifest(const std::string& command, const nlohmann::json& parameters) {
  return {{"command", command},
          {"parameters", parameters},
          {"tool_version", qdent_version()},
          {"timestamp", utc_timestamp()}};
}

std::string csv_preamble(const nlohmann::json& manifest, const std::vector<std::string>& columns) {
  std::string out = "# " + manifest.dump() + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out += ',';
    out += columns[i];
  }
  out += '\n';
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content << std::flush;
    if (!std::cout) throw IoError{"failed writing to standard output"};
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError{"cannot open " + path + " for writing"};
  file << content;
  file.close();
  if (!file) throw IoError{"failed writing " + path};
}

namespace {

int parse_int(std::string_view s, const std::string& whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError{"invalid integer range: " + whole};
  return value;
}

}  // namespace

std::vector<int> parse_int_range(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item, text));
      continue;
    }
    const int lo = parse_int(std::string_view(item).substr(0, dots), text);
    const int hi = parse_int(std::string_view(item).substr(dots + 2), text);
    if (hi < lo) throw UsageError{"empty range: " + text};
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  }
  if (out.empty()) throw UsageError{"empty range: " + text};
  return out;
}

}  // namespace qdent::cli
