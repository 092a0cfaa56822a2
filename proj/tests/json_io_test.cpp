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

#include <gtest/gtest.h>

#include "merlan/json_io.hpp"
#include "test_support.hpp"

namespace merlan {
namespace {

std::string field_of(const std::string& text) {
  try {
    parse_snapshot(text);
  } catch (const SchemaError& e) {
    return e.field();
  }
  return "<none>";
}

const char* kGood = R"({
  "timestamp": "2026-01-01T00:00:00Z",
  "detections": [
    {"id": "a", "entity": "person", "kind": "concrete", "modality": "Image", "confidence": 0.8,
     "attributes": {"gender": "male", "age": 30.0, "count": 2, "visible": true}},
    {"id": "b", "entity": "night", "kind": "abstract", "modality": "image", "confidence": 1}
  ]
})";

TEST(Snapshot, ParsesAndNormalizes) {
  auto snap = parse_snapshot(kGood);
  ASSERT_EQ(snap.detections.size(), 2u);
  EXPECT_EQ(*snap.timestamp, "2026-01-01T00:00:00Z");
  const auto& a = snap.detections[0];
  EXPECT_EQ(a.modality, Modality::image());
  EXPECT_EQ(a.attributes.at("age"), "30");
  EXPECT_EQ(a.attributes.at("count"), "2");
  EXPECT_EQ(a.attributes.at("visible"), "true");
  EXPECT_EQ(snap.detections[1].kind, EntityKind::Abstract);
  EXPECT_DOUBLE_EQ(snap.detections[1].confidence, 1.0);
}

TEST(Snapshot, RoundTrip) {
  auto snap = parse_snapshot(kGood);
  auto again = snapshot_from_json(snapshot_to_json(snap));
  EXPECT_EQ(snapshot_to_json(again), snapshot_to_json(snap));
}

TEST(SnapshotSchema, FieldPaths) {
  EXPECT_EQ(field_of("{"), "$");
  EXPECT_EQ(field_of("[]"), "$");
  EXPECT_EQ(field_of("{}"), "detections");
  EXPECT_EQ(field_of(R"({"detections": {}})"), "detections");
  EXPECT_EQ(field_of(R"({"timestamp": 5, "detections": []})"), "timestamp");
  EXPECT_EQ(field_of(R"({"detections": [1]})"), "detections[0]");
  const std::string base = R"("entity": "x", "kind": "concrete", "modality": "image")";
  EXPECT_EQ(field_of(R"({"detections": [{)" + base + R"(, "confidence": 0.5}]})"), "detections[0].id");
  EXPECT_EQ(field_of(R"({"detections": [{"id": "a", )" + base + R"(, "confidence": 1.5}]})"),
            "detections[0].confidence");
  EXPECT_EQ(field_of(R"({"detections": [{"id": "a", )" + base + R"(, "confidence": "high"}]})"),
            "detections[0].confidence");
  EXPECT_EQ(field_of(R"({"detections": [{"id": "a", )" + base + R"(, "confidence": 0.5}, {"id": "a", )" + base +
                     R"(, "confidence": 0.5}]})"),
            "detections[1].id");
  EXPECT_EQ(field_of(R"({"detections": [{"id": "a", "entity": "x", "kind": "thing", "modality": "image", )"
                     R"("confidence": 0.5}]})"),
            "detections[0].kind");
  EXPECT_EQ(field_of(R"({"detections": [{"id": "a", )" + base + R"(, "confidence": 0.5, "attributes": {"k": [1]}}]})"),
            "detections[0].attributes.k");
  EXPECT_EQ(field_of(R"({"detections": []})"), "<none>");
}

TEST(ResultsJson, TraceShape) {
  auto spec = testing::house_spec();
  auto snap = testing::snapshot({testing::detection("f", "fire", EntityKind::Concrete, "image", 0.9)});
  auto json = results_to_json(evaluate_all(spec, snap), true);
  EXPECT_EQ(json["requirement1"]["satisfied"], false);
  EXPECT_FALSE(json["requirement1"].contains("op"));
  const auto& trace = json["requirement2"]["trace"];
  EXPECT_EQ(trace["op"], "OR");
  EXPECT_EQ(trace["children"][0]["leaf"], "fire");
  EXPECT_EQ(trace["children"][0]["matched_count"], 1);
  EXPECT_EQ(trace["children"][0]["matched_detection_ids"][0], "f");
  auto plain = results_to_json(evaluate_all(spec, snap), false);
  EXPECT_FALSE(plain["requirement2"].contains("trace"));
  // declaration order preserved
  EXPECT_EQ(plain.begin().key(), "requirement1");
}

TEST(DiagnosticJson, Fields) {
  Diagnostic d{"E002", Severity::Error, "unknown entity", {4, 7, 4, 9}};
  auto j = diagnostic_to_json(d);
  EXPECT_EQ(j["code"], "E002");
  EXPECT_EQ(j["severity"], "error");
  EXPECT_EQ(j["line"], 4);
  EXPECT_EQ(j["column"], 7);
}

}  // namespace
}  // namespace merlan
