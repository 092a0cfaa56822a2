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

#include "merlan/json_io.hpp"

#include <set>

namespace merlan {

namespace {

const Json& require(const Json& obj, const std::string& path, std::string_view key) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) throw SchemaError(path + "." + std::string(key), "missing required field");
  return *it;
}

std::string require_string(const Json& obj, const std::string& path, std::string_view key) {
  const auto& v = require(obj, path, key);
  if (!v.is_string()) throw SchemaError(path + "." + std::string(key), "expected a string");
  return v.get<std::string>();
}

// Attribute values are compared as text; numbers are rendered without a
// trailing ".0" so that 30 and 30.0 read the same.
std::string scalar_text(const Json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return v.dump();
  if (v.is_number_float()) {
    auto text = v.dump();
    return canonical_decimal(text).value_or(text);
  }
  throw SchemaError(path, "attribute values must be strings, numbers or booleans");
}

Json span_to_json(const SourceSpan& span) {
  return Json{{"line", span.line}, {"column", span.column}, {"end_line", span.end_line}, {"end_column", span.end_column}};
}

}  // namespace

DetectionSnapshot snapshot_from_json(const Json& root) {
  if (!root.is_object()) throw SchemaError("$", "snapshot must be a JSON object");
  DetectionSnapshot snap;
  if (auto it = root.find("timestamp"); it != root.end() && !it->is_null()) {
    if (!it->is_string()) throw SchemaError("timestamp", "expected a string");
    snap.timestamp = it->get<std::string>();
  }
  auto dets = root.find("detections");
  if (dets == root.end()) throw SchemaError("detections", "missing required field");
  if (!dets->is_array()) throw SchemaError("detections", "expected an array");

  std::set<std::string, std::less<>> ids;
  for (std::size_t i = 0; i < dets->size(); ++i) {
    const auto& item = (*dets)[i];
    std::string path = "detections[" + std::to_string(i) + "]";
    if (!item.is_object()) throw SchemaError(path, "detection must be an object");

    Detection d;
    d.id = require_string(item, path, "id");
    if (d.id.empty()) throw SchemaError(path + ".id", "must not be empty");
    if (!ids.insert(d.id).second) throw SchemaError(path + ".id", "duplicate detection id '" + d.id + "'");
    d.entity = require_string(item, path, "entity");
    if (d.entity.empty()) throw SchemaError(path + ".entity", "must not be empty");

    auto kind = require_string(item, path, "kind");
    if (kind == "concrete") {
      d.kind = EntityKind::Concrete;
    } else if (kind == "abstract") {
      d.kind = EntityKind::Abstract;
    } else {
      throw SchemaError(path + ".kind", "expected \"concrete\" or \"abstract\", got \"" + kind + "\"");
    }

    auto modality = require_string(item, path, "modality");
    if (modality.empty()) throw SchemaError(path + ".modality", "must not be empty");
    d.modality = Modality::parse(modality);

    const auto& conf = require(item, path, "confidence");
    if (!conf.is_number()) throw SchemaError(path + ".confidence", "expected a number");
    d.confidence = conf.get<double>();
    if (!(d.confidence >= 0.0 && d.confidence <= 1.0)) {
      throw SchemaError(path + ".confidence", "must be within [0, 1]");
    }

    if (auto attrs = item.find("attributes"); attrs != item.end() && !attrs->is_null()) {
      if (!attrs->is_object()) throw SchemaError(path + ".attributes", "expected an object");
      for (const auto& [key, value] : attrs->items()) {
        d.attributes.emplace(key, scalar_text(value, path + ".attributes." + key));
      }
    }
    snap.detections.push_back(std::move(d));
  }
  return snap;
}

DetectionSnapshot parse_snapshot(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  return snapshot_from_json(root);
}

Json snapshot_to_json(const DetectionSnapshot& snap) {
  Json out = Json::object();
  if (snap.timestamp) out["timestamp"] = *snap.timestamp;
  Json dets = Json::array();
  for (const auto& d : snap.detections) {
    Json attrs = Json::object();
    for (const auto& [k, v] : d.attributes) attrs[k] = v;
    dets.push_back(Json{{"id", d.id},
                        {"entity", d.entity},
                        {"kind", std::string(to_string(d.kind))},
                        {"modality", d.modality.name()},
                        {"confidence", d.confidence},
                        {"attributes", attrs}});
  }
  out["detections"] = std::move(dets);
  return out;
}

Json trace_to_json(const TraceNode& node) {
  Json out = Json::object();
  out["satisfied"] = node.satisfied;
  if (node.is_leaf()) {
    const auto& leaf = *node.leaf;
    out["leaf"] = leaf.name;
    out["entity"] = leaf.entity;
    out["matched_count"] = leaf.matched_count();
    out["matched_detection_ids"] = leaf.matched_detection_ids;
    Json bound = Json::array();
    for (const auto& b : leaf.bound_attributes) {
      Json m = Json::object();
      for (const auto& [k, v] : b) m[k] = v;
      bound.push_back(std::move(m));
    }
    out["bound_attributes"] = std::move(bound);
    return out;
  }
  out["op"] = std::string(to_string(node.op));
  Json children = Json::array();
  for (const auto& child : node.children) children.push_back(trace_to_json(child));
  out["children"] = std::move(children);
  return out;
}

Json results_to_json(const std::vector<MatchResult>& results, bool with_trace) {
  Json out = Json::object();
  for (const auto& r : results) {
    Json entry{{"satisfied", r.satisfied}};
    if (with_trace) entry["trace"] = trace_to_json(r.trace);
    out[r.requirement] = std::move(entry);
  }
  return out;
}

Json diagnostic_to_json(const Diagnostic& d) {
  return Json{{"code", d.code},
              {"severity", std::string(to_string(d.severity))},
              {"message", d.message},
              {"line", d.span.line},
              {"column", d.span.column}};
}

Json parse_diagnostic_to_json(const ParseDiagnostic& d, std::string_view code) {
  return Json{{"code", std::string(code)},
              {"severity", std::string(to_string(d.severity))},
              {"message", d.message},
              {"line", d.span.line},
              {"column", d.span.column}};
}

Json manifest_to_json(const Manifest& manifest) {
  Json entities = Json::array();
  for (const auto& e : manifest.entities) {
    entities.push_back(
        Json{{"name", e.name}, {"kind", std::string(to_string(e.kind))}, {"variable", e.variable}, {"span", span_to_json(e.span)}});
  }
  Json requirements = Json::array();
  for (const auto& r : manifest.requirements) {
    requirements.push_back(Json{{"name", r.name}, {"variable", r.variable}, {"span", span_to_json(r.span)}});
  }
  return Json{{"schema_version", std::string(kSchemaVersion)}, {"entities", entities}, {"requirements", requirements}};
}

}  // namespace merlan
