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

#include "merlan/eval.hpp"

#include <algorithm>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace merlan {

bool literal_matches(const Literal& literal, std::string_view value) {
  if (const auto* s = std::get_if<std::string>(&literal)) return *s == value;
  auto lhs = canonical_decimal(std::get<Decimal>(literal).text());
  auto rhs = canonical_decimal(value);
  return lhs && rhs && *lhs == *rhs;
}

namespace {

bool detection_matches(const EntityDef& entity, const SimpleRequirement& leaf,
                       const std::vector<Constraint>& constraints, const Detection& d) {
  if (d.entity != entity.name || d.kind != entity.kind) return false;
  if (d.modality != *leaf.modality) return false;
  if (d.confidence < leaf.confidence->value()) return false;
  return std::all_of(constraints.begin(), constraints.end(), [&](const Constraint& c) {
    auto it = d.attributes.find(c.key);
    return it != d.attributes.end() && literal_matches(c.value, it->second);
  });
}

}  // namespace

TraceNode match_leaf(const Specification& spec, const SimpleRequirement& leaf, const DetectionSnapshot& snap) {
  if (!leaf.entity || !leaf.modality || !leaf.confidence) {
    throw InternalError("requirement leaf is missing mandatory attributes; validate the specification first");
  }
  const EntityDef* entity = resolve_entity(spec, *leaf.entity);
  if (entity == nullptr) throw InternalError("unresolved entity '" + *leaf.entity + "'");
  std::vector<Constraint> constraints;
  try {
    constraints = effective_constraints(spec, leaf);
  } catch (const ConflictError& e) {
    throw InternalError(e.what());
  }

  LeafTrace trace;
  trace.name = leaf.name.value_or("");
  trace.entity = entity->name;
  for (const auto& d : snap.detections) {
    if (!detection_matches(*entity, leaf, constraints, d)) continue;
    trace.matched_detection_ids.push_back(d.id);
    auto& bound = trace.bound_attributes.emplace_back();
    for (const auto& attr : entity->attributes) {
      if (!attr.is_placeholder()) continue;
      auto it = d.attributes.find(attr.key);
      if (it != d.attributes.end()) bound.emplace(it->first, it->second);
    }
  }

  TraceNode node;
  auto count = trace.matched_count();
  node.satisfied = leaf.kind == RequirementKind::Concrete ? leaf.effective_cardinality().admits(count) : count >= 1;
  node.leaf = std::move(trace);
  return node;
}

TraceNode evaluate_node(const Specification& spec, const RequirementNode& node, const DetectionSnapshot& snap) {
  if (node.is_leaf()) return match_leaf(spec, node.simple(), snap);

  const auto& complex = node.complex();
  TraceNode out;
  out.op = complex.op;
  for (const auto& child : complex.children) out.children.push_back(evaluate_node(spec, child, snap));

  auto sat = [](const TraceNode& n) { return n.satisfied; };
  switch (complex.op) {
    case BoolOp::And:
      out.satisfied = std::all_of(out.children.begin(), out.children.end(), sat);
      break;
    case BoolOp::Or:
      out.satisfied = std::any_of(out.children.begin(), out.children.end(), sat);
      break;
    case BoolOp::Not:
      if (out.children.size() != 1) throw InternalError("NOT node must have exactly one child");
      out.satisfied = !out.children.front().satisfied;
      break;
  }
  return out;
}

MatchResult evaluate(const Specification& spec, std::string_view requirement, const DetectionSnapshot& snap) {
  const NamedRequirement* req = spec.find_requirement(requirement);
  if (req == nullptr) throw UnknownRequirement(std::string(requirement));
  MatchResult result;
  result.requirement = req->name;
  result.trace = evaluate_node(spec, req->root, snap);
  result.satisfied = result.trace.satisfied;
  return result;
}

std::vector<MatchResult> evaluate_all(const Specification& spec, const DetectionSnapshot& snap) {
  std::vector<MatchResult> out;
  out.reserve(spec.requirements.size());
  for (const auto& req : spec.requirements) {
    MatchResult result;
    result.requirement = req.name;
    result.trace = evaluate_node(spec, req.root, snap);
    result.satisfied = result.trace.satisfied;
    out.push_back(std::move(result));
  }
  return out;
}

std::vector<std::vector<MatchResult>> evaluate_batch_serial(const Specification& spec,
                                                            std::span<const DetectionSnapshot> snapshots) {
  std::vector<std::vector<MatchResult>> out;
  out.reserve(snapshots.size());
  for (const auto& snap : snapshots) out.push_back(evaluate_all(spec, snap));
  return out;
}

std::vector<std::vector<MatchResult>> evaluate_batch(const Specification& spec,
                                                     std::span<const DetectionSnapshot> snapshots, int threads) {
  std::vector<std::vector<MatchResult>> out(snapshots.size());
  std::exception_ptr failure;
  const auto n = static_cast<long>(snapshots.size());
#ifdef _OPENMP
  int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(team)
#endif
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = evaluate_all(spec, snapshots[static_cast<std::size_t>(i)]);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(merlan_batch_failure)
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  (void)threads;
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace merlan
