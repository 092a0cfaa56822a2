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

// Seeded generators of valid specifications and detection snapshots. Used by
// the property tests, the benchmark and `merlan-corpus`, which exports specs
// (.mln + generated code) and snapshots for differential testing against the
// Python runtime harness.

#ifndef MERLAN_RANDOM_CORPUS_HPP
#define MERLAN_RANDOM_CORPUS_HPP

#include <cstdint>
#include <random>

#include "merlan/eval.hpp"
#include "merlan/model.hpp"

namespace merlan {

struct SpecShape {
  int max_depth = 5;          // root is depth 1
  int max_leaves = 6;         // per top-level requirement
  int max_requirements = 3;
  int max_concrete_entities = 4;
  int max_abstract_entities = 3;
};

struct SnapshotShape {
  int max_detections = 10;
};

// Random tree over existing entities; every leaf is fully specified and the
// tree respects `shape`.
RequirementNode random_requirement_tree(std::mt19937_64& rng, const Specification& entities, const SpecShape& shape);

// A specification that passes validation with zero errors.
Specification random_specification(std::mt19937_64& rng, const SpecShape& shape = {});

// Detections biased towards the spec's entities, modalities, confidence
// grid and attribute values so that leaves flip between satisfied and not.
DetectionSnapshot random_snapshot(std::mt19937_64& rng, const Specification& spec, const SnapshotShape& shape = {});

}  // namespace merlan

#endif  // MERLAN_RANDOM_CORPUS_HPP
