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

#ifndef MERLAN_VALIDATOR_HPP
#define MERLAN_VALIDATOR_HPP

#include <string>
#include <vector>

#include "merlan/config.hpp"
#include "merlan/lexer.hpp"
#include "merlan/model.hpp"

namespace merlan {

// Stable diagnostic codes.
//
//   E001  missing mandatory attribute (entity, name, modality, confidence)
//   E002  unresolved entity reference
//   E003  CONCRETE leaf on an abstract entity or ABSTRACT leaf on a concrete one
//   E004  confidence outside [0, 1]
//   E005  interval cardinality with min >= max
//   E006  cardinality on an abstract requirement
//   E007  requirement constraint contradicts a value fixed by the entity
//   E008  duplicate entity or requirement name
//   W001  modality neither built in nor configured
//   W002  constraint key not declared on the entity
//   W003  attribute unlikely to be observable in the leaf's modality
//   I001  abstract requirement carrying attribute constraints
struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  std::string message;
  SourceSpan span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;  // sorted by span, then code
  bool ok = true;                       // no Error-severity diagnostic

  std::size_t count(std::string_view code) const;
};

ValidationReport validate(const Specification& spec, const Config& config = {});

}  // namespace merlan

#endif  // MERLAN_VALIDATOR_HPP
