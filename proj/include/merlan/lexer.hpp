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

#ifndef MERLAN_LEXER_HPP
#define MERLAN_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "merlan/model.hpp"

namespace merlan {

enum class TokenKind {
  SectionKeyword,  // ENTITIES, CONCRETE, ABSTRACT, REQUIREMENTS
  Operator,        // AND, OR, NOT
  Ident,
  StringLit,
  NumberLit,
  Question,
  Dash,
  Colon,
  LBracket,
  RBracket,
  DotDot,
  Star,
  Newline,
  Indent,
  Dedent,
  Eof,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::Eof;
  // Keyword/identifier/number text; the unescaped contents for StringLit.
  std::string text;
  SourceSpan span;

  friend bool operator==(const Token&, const Token&) = default;
};

enum class Severity { Error, Warning, Info };

std::string_view to_string(Severity severity);

struct ParseDiagnostic {
  Severity severity = Severity::Error;
  std::string message;
  SourceSpan span;
};

struct LexResult {
  std::vector<Token> tokens;
  std::vector<ParseDiagnostic> diagnostics;
  int comment_count = 0;  // "//" comments skipped

  bool ok() const;
};

// CRLF and lone CR become LF.
std::string normalize_newlines(std::string_view source);

// Offside-rule tokenizer. Blank and comment-only lines produce no tokens. A
// colon that ends a non-attribute line ("ENTITIES:", "requirement1:", "car:")
// is dropped. The stream always ends with the Dedents that close every open
// block, then Eof.
LexResult tokenize(std::string_view source);

}  // namespace merlan

#endif  // MERLAN_LEXER_HPP
