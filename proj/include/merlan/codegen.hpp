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

// Emits agent code (Python, for the BESSER Agentic Framework constructor API)
// from a validated specification:
//
//   # Entities
//   person = ConcreteEntity(name="person", attributes={"gender": None})
//   # Requirements
//   r = RequirementDefinition("r")
//   r.set(
//     OR([
//       ConcreteRequirement(name="p", concrete_entity=person, attributes={...}),
//       ...
//     ])
//   )
//
// Leaf attribute maps hold "min"/"max" (explicit cardinality only; an
// unbounded max is written as 0), then modality and confidence in source
// order, then requirement-level constraints.

#ifndef MERLAN_CODEGEN_HPP
#define MERLAN_CODEGEN_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "merlan/model.hpp"

namespace merlan {

class GenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ManifestEntity {
  std::string name;
  EntityKind kind = EntityKind::Concrete;
  std::string variable;
  SourceSpan span;

  friend bool operator==(const ManifestEntity&, const ManifestEntity&) = default;
};

struct ManifestRequirement {
  std::string name;
  std::string variable;
  SourceSpan span;

  friend bool operator==(const ManifestRequirement&, const ManifestRequirement&) = default;
};

struct Manifest {
  std::vector<ManifestEntity> entities;
  std::vector<ManifestRequirement> requirements;

  std::vector<std::string> requirement_names() const;
  bool empty() const { return entities.empty() && requirements.empty(); }
};

struct GeneratedCode {
  std::string code;
  Manifest manifest;
};

// Entity or requirement name as a Python identifier: keywords and runtime
// constructor names get a trailing underscore.
std::string target_identifier(std::string_view name);

// Python string literal.
std::string python_string(std::string_view text);

// Throws GenError when the specification has validation errors or two names
// map to the same variable.
std::string generate(const Specification& spec);
GeneratedCode generate_with_manifest(const Specification& spec);

}  // namespace merlan

#endif  // MERLAN_CODEGEN_HPP
