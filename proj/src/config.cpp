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

#include "merlan/config.hpp"

#include <algorithm>

namespace merlan {

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

bool Config::knows_modality(const Modality& m) const {
  return m.is_builtin() || std::find(extra_modalities.begin(), extra_modalities.end(), m) != extra_modalities.end();
}

std::map<std::string, std::vector<Modality>, std::less<>> Config::default_plausibility() {
  std::vector<Modality> visual = {Modality::image(), Modality::video()};
  return {
      {"brand", visual},
      {"color", visual},
      {"model", visual},
      {"volume", {Modality::audio()}},
  };
}

std::vector<Modality> parse_modality_list(std::string_view text) {
  std::vector<Modality> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(unquote(trim(text.substr(0, comma))));
    if (!item.empty()) out.push_back(Modality::parse(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Config parse_config(std::string_view text) {
  Config config;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    auto hash = line.find('#');
    line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));

    if (key == "modalities") {
      for (auto& m : parse_modality_list(value)) {
        if (!config.knows_modality(m)) config.extra_modalities.push_back(std::move(m));
      }
    } else if (key.starts_with("plausibility.")) {
      auto attribute = key.substr(std::string_view("plausibility.").size());
      if (!is_identifier(attribute)) throw ConfigError(line_no, "invalid attribute name '" + std::string(attribute) + "'");
      config.plausibility[std::string(attribute)] = parse_modality_list(value);
    } else {
      throw ConfigError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  return config;
}

}  // namespace merlan
