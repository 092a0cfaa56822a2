// Copyright 2026 The MERLAN Tools Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MERLAN_CONFIG_HPP
#define MERLAN_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "merlan/model.hpp"

namespace merlan {

// Tool configuration. The file format is one `key = value` per line with `#`
// comments:
//
//   modalities = temperature, movement
//   plausibility.color = image, video
//
// `modalities` extends the built-in set; each `plausibility.<attribute>` line
// replaces the modalities under which that attribute is considered meaningful.
struct Config {
  std::vector<Modality> extra_modalities;
  std::map<std::string, std::vector<Modality>, std::less<>> plausibility = default_plausibility();

  bool knows_modality(const Modality& m) const;

  static std::map<std::string, std::vector<Modality>, std::less<>> default_plausibility();
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Throws ConfigError.
Config parse_config(std::string_view text);

// Comma-separated modality names, as taken by --modalities.
std::vector<Modality> parse_modality_list(std::string_view text);

}  // namespace merlan

#endif  // MERLAN_CONFIG_HPP
