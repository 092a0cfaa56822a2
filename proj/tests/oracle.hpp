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

// Test-only reference semantics. Deliberately shares no code with eval.cpp:
// leaves are matched by a direct linear scan written from the matching rules,
// and trees are decided by building the full truth table of the boolean
// formula over its leaves and looking up the row of the observed leaf
// verdicts.

#ifndef MERLAN_TESTS_ORACLE_HPP
#define MERLAN_TESTS_ORACLE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "merlan/eval.hpp"
#include "merlan/model.hpp"

namespace merlan::oracle {

// Strips a decimal string down to a comparable form without using
// canonical_decimal(): "2.50" -> "2.5", "30.0" -> "30", "007" -> "7".
inline std::string trim_number(std::string s) {
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  std::size_t lead = 0;
  while (lead + 1 < s.size() && s[lead] == '0' && s[lead + 1] != '.') ++lead;
  return s.substr(lead);
}

inline bool value_equal(const Literal& want, const std::string& have) {
  if (std::holds_alternative<std::string>(want)) return std::get<std::string>(want) == have;
  return trim_number(std::get<Decimal>(want).text()) == trim_number(have);
}

// Linear recount of detections that satisfy every clause of a leaf.
inline std::vector<std::string> matching_ids(const Specification& spec, const SimpleRequirement& leaf,
                                             const DetectionSnapshot& snap) {
  const EntityDef* entity = nullptr;
  for (const auto& e : spec.entities) {
    if (e.name == *leaf.entity) entity = &e;
  }
  if (entity == nullptr) throw std::logic_error("oracle: unknown entity");

  // Required (key, value) pairs: fixed entity values (minus the abstract
  // description), plus every requirement-level constraint.
  std::vector<std::pair<std::string, Literal>> required;
  for (const auto& a : entity->attributes) {
    if (entity->kind == EntityKind::Abstract && a.key == "description") continue;
    if (a.value) required.emplace_back(a.key, *a.value);
  }
  for (const auto& c : leaf.constraints) {
    if (entity->kind == EntityKind::Abstract && c.key == "description" && entity->find_attribute("description")) {
      continue;
    }
    required.emplace_back(c.key, *c.value);
  }

  EntityKind wanted_kind = leaf.kind == RequirementKind::Concrete ? EntityKind::Concrete : EntityKind::Abstract;
  std::vector<std::string> ids;
  for (const auto& d : snap.detections) {
    bool ok = d.entity == entity->name;
    ok = ok && d.kind == wanted_kind;
    ok = ok && d.modality.name() == leaf.modality->name();
    ok = ok && d.confidence >= std::stod(leaf.confidence->text());
    for (const auto& [key, value] : required) {
      auto it = d.attributes.find(key);
      ok = ok && it != d.attributes.end() && value_equal(value, it->second);
    }
    if (ok) ids.push_back(d.id);
  }
  return ids;
}

inline bool leaf_verdict(const Specification& spec, const SimpleRequirement& leaf, const DetectionSnapshot& snap) {
  auto count = matching_ids(spec, leaf, snap).size();
  if (leaf.kind == RequirementKind::Abstract) return count >= 1;
  std::uint64_t lo = 1;
  bool bounded = false;
  std::uint64_t hi = 0;
  if (leaf.cardinality) {
    lo = leaf.cardinality->min();
    if (leaf.cardinality->max()) {
      bounded = true;
      hi = *leaf.cardinality->max();
    }
  }
  return count >= lo && (!bounded || count <= hi);
}

// Formula value for one assignment; leaf i takes bit i of `row`.
inline bool formula_value(const RequirementNode& node, std::uint32_t row, int& next_leaf) {
  if (node.is_leaf()) return ((row >> next_leaf++) & 1u) != 0;
  std::vector<bool> kids;
  for (const auto& child : node.complex().children) kids.push_back(formula_value(child, row, next_leaf));
  switch (node.complex().op) {
    case BoolOp::Not:
      return !kids.at(0);
    case BoolOp::And: {
      bool v = true;
      for (bool k : kids) v = v && k;
      return v;
    }
    case BoolOp::Or: {
      bool v = false;
      for (bool k : kids) v = v || k;
      return v;
    }
  }
  return false;
}

inline std::vector<bool> truth_table(const RequirementNode& node) {
  auto leaves = node.leaves().size();
  if (leaves > 20) throw std::logic_error("oracle: truth table too large");
  std::vector<bool> table(std::size_t{1} << leaves);
  for (std::uint32_t row = 0; row < table.size(); ++row) {
    int next = 0;
    table[row] = formula_value(node, row, next);
  }
  return table;
}

inline bool tree_verdict(const Specification& spec, const RequirementNode& node, const DetectionSnapshot& snap) {
  auto table = truth_table(node);
  std::uint32_t row = 0;
  auto leaves = node.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaf_verdict(spec, *leaves[i], snap)) row |= 1u << i;
  }
  return table[row];
}

}  // namespace merlan::oracle

#endif  // MERLAN_TESTS_ORACLE_HPP
