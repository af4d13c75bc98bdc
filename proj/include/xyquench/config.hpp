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

#pragma once

// Flat key=value configuration. Files hold one assignment per line with '#'
// comments; command-line flags are applied on top and win.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xyq {

/// Parses "x", "min:max:steps" (steps = number of points, inclusive ends)
/// or a comma list "a,b,c". Values must be strictly increasing.
std::vector<double> parse_grid(std::string_view key, std::string_view spec);

class KeyValueConfig {
 public:
  static KeyValueConfig from_file(const std::filesystem::path& path);
  static KeyValueConfig from_string(std::string_view text, std::string_view origin = "<string>");

  void set(const std::string& key, const std::string& value);
  void erase(const std::string& key) { entries_.erase(key); }
  bool contains(const std::string& key) const { return entries_.contains(key); }
  std::optional<std::string> get(const std::string& key) const;

  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::vector<double> get_grid(const std::string& key, const std::string& fallback) const;
  std::vector<int> get_int_list(const std::string& key, const std::string& fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  /// Effective configuration as "# key=value" lines, sorted by key.
  std::string echo() const;
  /// FNV-1a hash of echo(), printed in output headers.
  std::string checksum() const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace xyq
