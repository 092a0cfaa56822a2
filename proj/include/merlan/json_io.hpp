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

// JSON wire formats.
//
// Detection snapshot:
//   {"timestamp": "2024-01-01T00:00:00Z",
//    "detections": [{"id": "d1", "entity": "person", "kind": "concrete",
//                    "modality": "image", "confidence": 0.83,
//                    "attributes": {"gender": "male"}}]}
//
// Machine output of the tools carries "schema_version": "1" at the top level.

#ifndef MERLAN_JSON_IO_HPP
#define MERLAN_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "merlan/codegen.hpp"
#include "merlan/eval.hpp"
#include "merlan/lexer.hpp"
#include "merlan/validator.hpp"

namespace merlan {

inline constexpr std::string_view kSchemaVersion = "1";

using Json = nlohmann::ordered_json;

// Snapshot that does not follow the schema; `field` is a path such as
// "detections[2].confidence".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Throws SchemaError (malformed JSON is reported against field "$").
DetectionSnapshot parse_snapshot(std::string_view text);
DetectionSnapshot snapshot_from_json(const Json& json);
Json snapshot_to_json(const DetectionSnapshot& snap);

Json trace_to_json(const TraceNode& node);

// {"<requirement>": {"satisfied": bool[, "trace": {...}]}, ...}
Json results_to_json(const std::vector<MatchResult>& results, bool with_trace);

Json diagnostic_to_json(const Diagnostic& d);
Json parse_diagnostic_to_json(const ParseDiagnostic& d, std::string_view code);

Json manifest_to_json(const Manifest& manifest);

}  // namespace merlan

#endif  // MERLAN_JSON_IO_HPP
