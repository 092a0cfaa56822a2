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

#include "merlan/random_corpus.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace merlan {

namespace {

constexpr std::array<std::string_view, 4> kModalities = {"image", "audio", "video", "text"};
constexpr std::array<std::string_view, 5> kConfidenceGrid = {"0", "0.25", "0.5", "0.75", "1"};
constexpr std::array<std::string_view, 3> kStringValues = {"red", "blue", "male"};
constexpr std::array<std::string_view, 3> kNumberValues = {"1", "2.5", "30"};
constexpr std::array<std::string_view, 4> kAttributeKeys = {"color", "size", "gender", "age"};

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <std::size_t N>
std::string_view pick(std::mt19937_64& rng, const std::array<std::string_view, N>& items) {
  return items[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(N) - 1))];
}

Literal random_value(std::mt19937_64& rng) {
  if (chance(rng, 0.6)) return std::string(pick(rng, kStringValues));
  return *Decimal::parse(pick(rng, kNumberValues));
}

EntityDef random_entity(std::mt19937_64& rng, std::string name, EntityKind kind) {
  EntityDef e;
  e.name = std::move(name);
  e.kind = kind;
  int attrs = uniform(rng, 0, 2);
  std::vector<std::string_view> keys(kAttributeKeys.begin(), kAttributeKeys.end());
  std::shuffle(keys.begin(), keys.end(), rng);
  for (int i = 0; i < attrs; ++i) {
    AttributeDecl a;
    a.key = std::string(keys[static_cast<std::size_t>(i)]);
    if (chance(rng, 0.35)) a.value = random_value(rng);
    e.attributes.push_back(std::move(a));
  }
  return e;
}

Cardinality random_cardinality(std::mt19937_64& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0:
      return Cardinality::exact(static_cast<std::uint64_t>(uniform(rng, 1, 3)));  // [0] has no target encoding
    case 1: {
      auto lo = static_cast<std::uint64_t>(uniform(rng, 0, 2));
      return Cardinality::interval(lo, lo + static_cast<std::uint64_t>(uniform(rng, 1, 2)));
    }
    default:
      return Cardinality::at_least(static_cast<std::uint64_t>(uniform(rng, 0, 2)));
  }
}

class TreeBuilder {
 public:
  TreeBuilder(std::mt19937_64& rng, const Specification& spec, const SpecShape& shape)
      : rng_(rng), shape_(shape) {
    for (const auto& e : spec.entities) (e.kind == EntityKind::Concrete ? concrete_ : abstract_).push_back(&e);
  }

  RequirementNode build() { return node(1, shape_.max_leaves); }

 private:
  // `budget` is the number of leaves this subtree may use (>= 1).
  RequirementNode node(int depth, int budget) {
    if (depth >= shape_.max_depth || budget == 1 || chance(rng_, 0.35)) return RequirementNode::leaf(leaf());
    int op = uniform(rng_, 0, 4);
    if (op == 0) return RequirementNode::negate(node(depth + 1, budget));
    int children = uniform(rng_, 1, std::min(3, budget));
    std::vector<RequirementNode> kids;
    int remaining = budget;
    for (int i = 0; i < children; ++i) {
      int left_for_rest = children - i - 1;
      int share = i + 1 == children ? remaining : uniform(rng_, 1, remaining - left_for_rest);
      kids.push_back(node(depth + 1, share));
      remaining -= share;
    }
    return op <= 2 ? RequirementNode::all_of(std::move(kids)) : RequirementNode::any_of(std::move(kids));
  }

  SimpleRequirement leaf() {
    bool abstract = !abstract_.empty() && (concrete_.empty() || chance(rng_, 0.3));
    const auto& pool = abstract ? abstract_ : concrete_;
    const EntityDef& entity = *pool[static_cast<std::size_t>(uniform(rng_, 0, static_cast<int>(pool.size()) - 1))];

    SimpleRequirement req;
    req.kind = abstract ? RequirementKind::Abstract : RequirementKind::Concrete;
    req.entity = entity.name;
    req.name = "leaf" + std::to_string(next_leaf_++);
    req.modality = Modality::parse(pick(rng_, kModalities));
    req.confidence = *Decimal::parse(pick(rng_, kConfidenceGrid));
    if (!abstract && chance(rng_, 0.6)) req.cardinality = random_cardinality(rng_);

    for (const auto& attr : entity.attributes) {
      if (!chance(rng_, 0.4)) continue;
      // Fixed attributes may only be restated with the same value.
      Literal value = attr.value ? *attr.value : random_value(rng_);
      req.constraints.push_back({attr.key, std::move(value), {}});
    }
    if (chance(rng_, 0.1)) req.constraints.push_back({"extra", random_value(rng_), {}});
    if (chance(rng_, 0.5)) {
      req.key_order = {"entity", "name", "confidence", "modality"};
    } else {
      req.key_order = {"entity", "name", "modality", "confidence"};
    }
    for (const auto& c : req.constraints) req.key_order.push_back(c.key);
    return req;
  }

  std::mt19937_64& rng_;
  const SpecShape& shape_;
  std::vector<const EntityDef*> concrete_;
  std::vector<const EntityDef*> abstract_;
  int next_leaf_ = 0;
};

}  // namespace

RequirementNode random_requirement_tree(std::mt19937_64& rng, const Specification& entities, const SpecShape& shape) {
  return TreeBuilder(rng, entities, shape).build();
}

Specification random_specification(std::mt19937_64& rng, const SpecShape& shape) {
  Specification spec;
  int concrete = uniform(rng, 1, shape.max_concrete_entities);
  int abstract = uniform(rng, 0, shape.max_abstract_entities);
  for (int i = 0; i < concrete; ++i) {
    spec.entities.push_back(random_entity(rng, "thing" + std::to_string(i), EntityKind::Concrete));
  }
  for (int i = 0; i < abstract; ++i) {
    spec.entities.push_back(random_entity(rng, "state" + std::to_string(i), EntityKind::Abstract));
  }
  int requirements = uniform(rng, 1, shape.max_requirements);
  for (int i = 0; i < requirements; ++i) {
    spec.requirements.push_back({"requirement" + std::to_string(i + 1), random_requirement_tree(rng, spec, shape), {}});
  }
  return spec;
}

DetectionSnapshot random_snapshot(std::mt19937_64& rng, const Specification& spec, const SnapshotShape& shape) {
  DetectionSnapshot snap;
  int count = uniform(rng, 0, shape.max_detections);
  for (int i = 0; i < count; ++i) {
    Detection d;
    d.id = "d" + std::to_string(i + 1);
    if (spec.entities.empty() || chance(rng, 0.05)) {
      d.entity = "stranger";
      d.kind = EntityKind::Concrete;
    } else {
      const auto& e = spec.entities[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(spec.entities.size()) - 1))];
      d.entity = e.name;
      d.kind = chance(rng, 0.1) ? (e.kind == EntityKind::Concrete ? EntityKind::Abstract : EntityKind::Concrete) : e.kind;
      for (const auto& a : e.attributes) {
        if (chance(rng, 0.2)) continue;
        if (a.value && chance(rng, 0.6)) {
          d.attributes[a.key] = canonical_decimal(literal_to_string(*a.value)).value_or(literal_to_string(*a.value));
        } else {
          d.attributes[a.key] = literal_to_string(random_value(rng));
        }
      }
    }
    if (chance(rng, 0.1)) d.attributes["extra"] = literal_to_string(random_value(rng));
    d.modality = Modality::parse(pick(rng, kModalities));
    if (chance(rng, 0.7)) {
      d.confidence = Decimal::parse(pick(rng, kConfidenceGrid))->value();
    } else {
      d.confidence = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    }
    snap.detections.push_back(std::move(d));
  }
  return snap;
}

}  // namespace merlan
