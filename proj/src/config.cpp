// Copyright 2026 The xyquench Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xyquench/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "xyquench/errors.hpp"

namespace xyq {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw ConfigError("config key '" + std::string(key) + "': not a number: '" + std::string(text) + "'");
  }
  return v;
}

long parse_long(std::string_view key, std::string_view text) {
  text = trim(text);
  long v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("config key '" + std::string(key) + "': not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<double> parse_grid(std::string_view key, std::string_view spec) {
  const std::string k(key);
  spec = trim(spec);
  if (spec.empty()) throw ConfigError("config key '" + k + "': empty grid");
  std::vector<double> values;
  if (spec.find(':') != std::string_view::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw ConfigError("config key '" + k + "': grid spec must be min:max:steps");
    const double lo = parse_double(key, parts[0]);
    const double hi = parse_double(key, parts[1]);
    const long steps = parse_long(key, parts[2]);
    if (steps < 1) throw ConfigError("config key '" + k + "': empty grid (steps < 1)");
    if (hi < lo || (steps > 1 && hi == lo)) {
      throw ConfigError("config key '" + k + "': non-monotone grid (max must exceed min)");
    }
    if (steps == 1) return {lo};
    values.reserve(static_cast<std::size_t>(steps));
    for (long i = 0; i < steps; ++i) {
      values.push_back(i == steps - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (steps - 1));
    }
    return values;
  }
  for (auto part : split(spec, ',')) values.push_back(parse_double(key, part));
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) throw ConfigError("config key '" + k + "': non-monotone grid");
  }
  return values;
}

KeyValueConfig KeyValueConfig::from_string(std::string_view text, std::string_view origin) {
  KeyValueConfig cfg;
  int line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(origin) + ":" + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError(std::string(origin) + ":" + std::to_string(line_no) + ": empty key");
    cfg.set(std::string(key), std::string(trim(line.substr(eq + 1))));
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str(), path.string());
}

void KeyValueConfig::set(const std::string& key, const std::string& value) { entries_[key] = value; }

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  const auto v = get(key);
  return v ? parse_double(key, *v) : fallback;
}

int KeyValueConfig::get_int(const std::string& key, int fallback) const {
  const auto v = get(key);
  return v ? static_cast<int>(parse_long(key, *v)) : fallback;
}

std::vector<double> KeyValueConfig::get_grid(const std::string& key, const std::string& fallback) const {
  return parse_grid(key, get(key).value_or(fallback));
}

std::vector<int> KeyValueConfig::get_int_list(const std::string& key, const std::string& fallback) const {
  const auto text = get(key).value_or(fallback);
  std::vector<int> out;
  for (auto part : split(text, ',')) out.push_back(static_cast<int>(parse_long(key, part)));
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) throw ConfigError("config key '" + key + "': non-monotone list");
  }
  return out;
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  if (*v == "1" || *v == "true" || *v == "yes") return true;
  if (*v == "0" || *v == "false" || *v == "no") return false;
  throw ConfigError("config key '" + key + "': expected a boolean, got '" + *v + "'");
}

std::string KeyValueConfig::echo() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += "# " + k + "=" + v + "\n";
  return out;
}

std::string KeyValueConfig::checksum() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : echo()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace xyq
