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

// Requirement evaluation against detection snapshots.
//
// A detection matches a simple requirement when it names the same entity, has
// the entity's kind, was observed in the requirement's modality, reaches the
// requirement's confidence (inclusive) and carries every effective constraint
// with an identical value. Extra detection attributes are ignored. A concrete
// requirement is satisfied when the number of matches fits its cardinality
// (default [1..*]); an abstract one when at least one detection matches. A
// detection may count towards any number of leaves.
//
// Complex nodes fold their children with AND/OR/NOT. Every child is evaluated,
// so the trace is always complete.

#ifndef MERLAN_EVAL_HPP
#define MERLAN_EVAL_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "merlan/model.hpp"

namespace merlan {

struct Detection {
  std::string id;
  std::string entity;
  EntityKind kind = EntityKind::Concrete;
  Modality modality;
  double confidence = 0.0;
  std::map<std::string, std::string, std::less<>> attributes;
};

struct DetectionSnapshot {
  std::optional<std::string> timestamp;  // carried for logs only
  std::vector<Detection> detections;
};

struct LeafTrace {
  std::string name;
  std::string entity;
  std::vector<std::string> matched_detection_ids;
  // Per matched detection, its values for the entity's placeholder keys.
  std::vector<std::map<std::string, std::string, std::less<>>> bound_attributes;

  std::size_t matched_count() const { return matched_detection_ids.size(); }
};

struct TraceNode {
  bool satisfied = false;
  BoolOp op = BoolOp::And;          // unused for leaves
  std::optional<LeafTrace> leaf;    // set for simple requirements
  std::vector<TraceNode> children;  // set for complex requirements

  bool is_leaf() const { return leaf.has_value(); }
};

struct MatchResult {
  std::string requirement;
  bool satisfied = false;
  TraceNode trace;
};

// The spec handed to the evaluator was never validated.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnknownRequirement : public std::out_of_range {
 public:
  explicit UnknownRequirement(const std::string& name)
      : std::out_of_range("unknown requirement '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// True when `value` (a detection attribute) equals the constraint literal.
// Numeric literals compare by canonical decimal text.
bool literal_matches(const Literal& literal, std::string_view value);

TraceNode match_leaf(const Specification& spec, const SimpleRequirement& leaf, const DetectionSnapshot& snap);

TraceNode evaluate_node(const Specification& spec, const RequirementNode& node, const DetectionSnapshot& snap);

MatchResult evaluate(const Specification& spec, std::string_view requirement, const DetectionSnapshot& snap);

// One result per top-level requirement, in declaration order.
std::vector<MatchResult> evaluate_all(const Specification& spec, const DetectionSnapshot& snap);

// evaluate_all over many snapshots. The OpenMP version splits the snapshots
// across threads (`threads` <= 0 uses the OpenMP default); output order always
// follows the input. evaluate_batch_serial is the single-threaded reference.
std::vector<std::vector<MatchResult>> evaluate_batch(const Specification& spec,
                                                     std::span<const DetectionSnapshot> snapshots, int threads = 0);
std::vector<std::vector<MatchResult>> evaluate_batch_serial(const Specification& spec,
                                                            std::span<const DetectionSnapshot> snapshots);

}  // namespace merlan

#endif  // MERLAN_EVAL_HPP
