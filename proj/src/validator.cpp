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

#include "merlan/validator.hpp"

#include <algorithm>
#include <set>

namespace merlan {

std::size_t ValidationReport::count(std::string_view code) const {
  return static_cast<std::size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(), [&](const Diagnostic& d) { return d.code == code; }));
}

namespace {

class Validator {
 public:
  Validator(const Specification& spec, const Config& config) : spec_(spec), config_(config) {}

  ValidationReport run() {
    check_duplicates();
    for (const auto& req : spec_.requirements) {
      for (const auto* leaf : req.root.leaves()) check_leaf(req.name, *leaf);
    }
    std::stable_sort(report_.diagnostics.begin(), report_.diagnostics.end(), [](const Diagnostic& a, const Diagnostic& b) {
      if (a.span != b.span) return a.span < b.span;
      return a.code < b.code;
    });
    report_.ok = std::none_of(report_.diagnostics.begin(), report_.diagnostics.end(),
                              [](const Diagnostic& d) { return d.severity == Severity::Error; });
    return std::move(report_);
  }

 private:
  void emit(std::string code, Severity severity, std::string message, const SourceSpan& span) {
    report_.diagnostics.push_back({std::move(code), severity, std::move(message), span});
  }

  void check_duplicates() {
    std::set<std::string, std::less<>> seen;
    for (const auto& e : spec_.entities) {
      if (!seen.insert(e.name).second) {
        emit("E008", Severity::Error, "duplicate entity name '" + e.name + "'", e.span);
      }
    }
    seen.clear();
    for (const auto& r : spec_.requirements) {
      if (!seen.insert(r.name).second) {
        emit("E008", Severity::Error, "duplicate requirement name '" + r.name + "'", r.span);
      }
    }
  }

  void check_leaf(const std::string& owner, const SimpleRequirement& leaf) {
    std::string where = "requirement '" + owner + "'";
    if (leaf.name) where += ", leaf '" + *leaf.name + "'";

    for (auto [key, present] : {std::pair{kEntityKey, leaf.entity.has_value()},
                                std::pair{kNameKey, leaf.name.has_value()},
                                std::pair{kModalityKey, leaf.modality.has_value()},
                                std::pair{kConfidenceKey, leaf.confidence.has_value()}}) {
      if (!present) {
        emit("E001", Severity::Error, where + ": missing mandatory attribute '" + std::string(key) + "'", leaf.span);
      }
    }

    if (leaf.confidence && (leaf.confidence->value() < 0.0 || leaf.confidence->value() > 1.0)) {
      emit("E004", Severity::Error, where + ": confidence " + leaf.confidence->text() + " is outside [0, 1]",
           leaf.span);
    }

    if (leaf.cardinality) {
      if (leaf.kind == RequirementKind::Abstract) {
        emit("E006", Severity::Error, where + ": abstract requirements cannot have a cardinality", leaf.span);
      }
      if (!leaf.cardinality->well_formed()) {
        emit("E005", Severity::Error,
             where + ": cardinality " + leaf.cardinality->to_string() + " needs min < max", leaf.span);
      }
    }

    if (leaf.modality && !config_.knows_modality(*leaf.modality)) {
      emit("W001", Severity::Warning, where + ": unknown modality '" + leaf.modality->name() + "'", leaf.span);
    }

    if (leaf.kind == RequirementKind::Abstract && !leaf.constraints.empty()) {
      emit("I001", Severity::Info, where + ": abstract requirement constrains attributes", leaf.span);
    }

    if (!leaf.entity) return;
    const EntityDef* entity = resolve_entity(spec_, *leaf.entity);
    if (entity == nullptr) {
      emit("E002", Severity::Error, where + ": unknown entity '" + *leaf.entity + "'", leaf.span);
      return;
    }
    if (entity->kind != entity_kind_for(leaf.kind)) {
      emit("E003", Severity::Error,
           where + ": " + std::string(to_string(leaf.kind)) + " requirement references " +
               std::string(to_string(entity->kind)) + " entity '" + entity->name + "'",
           leaf.span);
    }

    try {
      (void)effective_constraints(spec_, leaf);
    } catch (const ConflictError& e) {
      emit("E007", Severity::Error, where + ": " + e.what(), leaf.span);
    }

    for (const auto& c : leaf.constraints) {
      if (entity->find_attribute(c.key) == nullptr) {
        emit("W002", Severity::Warning,
             where + ": attribute '" + c.key + "' is not declared on entity '" + entity->name + "'", c.span);
      }
    }

    if (leaf.modality) check_plausibility(where, *entity, leaf);
  }

  void check_plausibility(const std::string& where, const EntityDef& entity, const SimpleRequirement& leaf) {
    std::vector<std::string> keys;
    for (const auto& a : entity.attributes) keys.push_back(a.key);
    for (const auto& c : leaf.constraints) {
      if (std::find(keys.begin(), keys.end(), c.key) == keys.end()) keys.push_back(c.key);
    }
    for (const auto& key : keys) {
      auto it = config_.plausibility.find(key);
      if (it == config_.plausibility.end()) continue;
      const auto& allowed = it->second;
      if (std::find(allowed.begin(), allowed.end(), *leaf.modality) != allowed.end()) continue;
      emit("W003", Severity::Warning,
           where + ": attribute '" + key + "' is unlikely to be observable with modality '" + leaf.modality->name() +
               "'",
           leaf.span);
    }
  }

  const Specification& spec_;
  const Config& config_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate(const Specification& spec, const Config& config) { return Validator(spec, config).run(); }

}  // namespace merlan
