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

#ifndef MERLAN_PARSER_HPP
#define MERLAN_PARSER_HPP

#include <span>
#include <string_view>
#include <vector>

#include "merlan/lexer.hpp"
#include "merlan/model.hpp"

namespace merlan {

struct ParseResult {
  Specification spec;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const;
};

// Deepest AND/OR/NOT nesting the parser accepts.
inline constexpr int kMaxNestingDepth = 200;

// Recursive-descent parser over the token stream. Complex requirements own
// every requirement indented one level beneath the operator line; attribute
// lines of a simple requirement may sit at the keyword's level or one level
// deeper. Reserved attributes (entity, name, modality, confidence) are lifted
// into SimpleRequirement fields.
//
// Parsing stops at the first syntax error; `spec` is then empty.
ParseResult parse(std::span<const Token> tokens);

// tokenize + parse. Lexer errors are returned without attempting a parse.
ParseResult parse_source(std::string_view source);

}  // namespace merlan

#endif  // MERLAN_PARSER_HPP
