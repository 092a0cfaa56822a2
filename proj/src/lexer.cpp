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

#include "merlan/lexer.hpp"

#include <algorithm>
#include <cctype>

namespace merlan {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::SectionKeyword: return "section keyword";
    case TokenKind::Operator: return "operator";
    case TokenKind::Ident: return "identifier";
    case TokenKind::StringLit: return "string";
    case TokenKind::NumberLit: return "number";
    case TokenKind::Question: return "'?'";
    case TokenKind::Dash: return "'-'";
    case TokenKind::Colon: return "':'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::DotDot: return "'..'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Newline: return "end of line";
    case TokenKind::Indent: return "indent";
    case TokenKind::Dedent: return "dedent";
    case TokenKind::Eof: return "end of file";
  }
  return "?";
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "?";
}

bool LexResult::ok() const {
  return std::none_of(diagnostics.begin(), diagnostics.end(),
                      [](const ParseDiagnostic& d) { return d.severity == Severity::Error; });
}

std::string normalize_newlines(std::string_view source) {
  std::string out;
  out.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i] == '\r') {
      out += '\n';
      if (i + 1 < source.size() && source[i + 1] == '\n') ++i;
    } else {
      out += source[i];
    }
  }
  return out;
}

namespace {

bool is_ident_start(char c) {
  auto u = static_cast<unsigned char>(c);
  return u < 0x80 && (std::isalpha(u) || u == '_');
}

bool is_ident_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return u < 0x80 && (std::isalnum(u) || u == '_');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

TokenKind keyword_kind(std::string_view word) {
  if (word == "ENTITIES" || word == "CONCRETE" || word == "ABSTRACT" || word == "REQUIREMENTS") {
    return TokenKind::SectionKeyword;
  }
  if (word == "AND" || word == "OR" || word == "NOT") return TokenKind::Operator;
  return TokenKind::Ident;
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  LexResult run() {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= src_.size()) {
      auto eol = src_.find('\n', pos);
      if (eol == std::string_view::npos) eol = src_.size();
      ++line_no;
      lex_line(src_.substr(pos, eol - pos), line_no);
      if (eol == src_.size()) break;
      pos = eol + 1;
    }
    SourceSpan end{line_no, 1, line_no, 1};
    while (indents_.size() > 1) {
      indents_.pop_back();
      out_.tokens.push_back({TokenKind::Dedent, "", end});
    }
    out_.tokens.push_back({TokenKind::Eof, "", end});
    return std::move(out_);
  }

 private:
  void error(std::string message, int line, int col, int end_col) {
    out_.diagnostics.push_back({Severity::Error, std::move(message), {line, col, line, end_col}});
  }

  void lex_line(std::string_view line, int line_no) {
    std::size_t i = 0;
    bool saw_space = false, saw_tab = false;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
      (line[i] == ' ' ? saw_space : saw_tab) = true;
      ++i;
    }
    // Blank or comment-only lines do not take part in the offside rule.
    if (i == line.size()) return;
    if (line.substr(i, 2) == "//") {
      ++out_.comment_count;
      return;
    }

    if (saw_space || saw_tab) {
      char used = saw_tab ? '\t' : ' ';
      if ((saw_space && saw_tab) || (indent_char_ != 0 && indent_char_ != used)) {
        error("inconsistent indentation: tabs and spaces are mixed", line_no, 1, static_cast<int>(i) + 1);
      } else if (indent_char_ == 0) {
        indent_char_ = used;
      }
    }

    auto width = static_cast<int>(i);
    SourceSpan at{line_no, width + 1, line_no, width + 1};
    if (width > indents_.back()) {
      indents_.push_back(width);
      out_.tokens.push_back({TokenKind::Indent, "", at});
    } else if (width < indents_.back()) {
      while (width < indents_.back()) {
        indents_.pop_back();
        out_.tokens.push_back({TokenKind::Dedent, "", at});
      }
      if (width != indents_.back()) {
        error("dedent does not match any enclosing indentation level", line_no, 1, width + 1);
        // Treat the line as opening a new level so the stream stays balanced.
        indents_.push_back(width);
        out_.tokens.push_back({TokenKind::Indent, "", at});
      }
    }

    std::size_t line_start = out_.tokens.size();
    while (i < line.size()) {
      char c = line[i];
      int col = static_cast<int>(i) + 1;
      auto push = [&](TokenKind kind, std::string text, std::size_t len) {
        out_.tokens.push_back({kind, std::move(text), {line_no, col, line_no, col + static_cast<int>(len)}});
        i += len;
      };
      if (c == ' ' || c == '\t') {
        ++i;
      } else if (line.substr(i, 2) == "//") {
        ++out_.comment_count;
        break;
      } else if (is_ident_start(c)) {
        std::size_t j = i;
        while (j < line.size() && is_ident_char(line[j])) ++j;
        std::string word(line.substr(i, j - i));
        push(keyword_kind(word), word, j - i);
      } else if (is_digit(c) || (c == '-' && i + 1 < line.size() && is_digit(line[i + 1]) &&
                                 out_.tokens.size() > line_start && out_.tokens.back().kind == TokenKind::Colon)) {
        std::size_t j = i + (c == '-' ? 1 : 0);
        while (j < line.size() && is_digit(line[j])) ++j;
        if (j + 1 < line.size() && line[j] == '.' && is_digit(line[j + 1])) {
          ++j;
          while (j < line.size() && is_digit(line[j])) ++j;
        }
        push(TokenKind::NumberLit, std::string(line.substr(i, j - i)), j - i);
      } else if (c == '"') {
        lex_string(line, i, line_no);
      } else if (c == '.' && i + 1 < line.size() && line[i + 1] == '.') {
        push(TokenKind::DotDot, "..", 2);
      } else if (c == '?') {
        push(TokenKind::Question, "?", 1);
      } else if (c == '-') {
        push(TokenKind::Dash, "-", 1);
      } else if (c == ':') {
        push(TokenKind::Colon, ":", 1);
      } else if (c == '[') {
        push(TokenKind::LBracket, "[", 1);
      } else if (c == ']') {
        push(TokenKind::RBracket, "]", 1);
      } else if (c == '*') {
        push(TokenKind::Star, "*", 1);
      } else {
        auto u = static_cast<unsigned char>(c);
        std::string shown = (u >= 0x20 && u < 0x7f) ? std::string(1, c) : "\\x" + hex(u);
        error("illegal character '" + shown + "'", line_no, col, col + 1);
        ++i;
      }
    }

    // Trailing colon on a header line ("ENTITIES:", "requirement1:", "car:").
    auto count = out_.tokens.size() - line_start;
    if (count >= 2 && out_.tokens.back().kind == TokenKind::Colon && out_.tokens[line_start].kind != TokenKind::Dash) {
      out_.tokens.pop_back();
    }
    if (out_.tokens.size() > line_start) {
      int col = static_cast<int>(line.size()) + 1;
      out_.tokens.push_back({TokenKind::Newline, "", {line_no, col, line_no, col}});
    }
  }

  void lex_string(std::string_view line, std::size_t& i, int line_no) {
    int col = static_cast<int>(i) + 1;
    std::string value;
    std::size_t j = i + 1;
    while (j < line.size() && line[j] != '"') {
      if (line[j] == '\\' && j + 1 < line.size()) {
        char e = line[j + 1];
        switch (e) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          default:
            error(std::string("unknown escape sequence '\\") + e + "'", line_no, static_cast<int>(j) + 1,
                  static_cast<int>(j) + 3);
            value += e;
        }
        j += 2;
      } else {
        value += line[j];
        ++j;
      }
    }
    if (j >= line.size()) {
      error("unterminated string literal", line_no, col, static_cast<int>(line.size()) + 1);
      i = line.size();
      return;
    }
    out_.tokens.push_back({TokenKind::StringLit, std::move(value), {line_no, col, line_no, static_cast<int>(j) + 2}});
    i = j + 1;
  }

  static std::string hex(unsigned char u) {
    static constexpr char kDigits[] = "0123456789abcdef";
    return {kDigits[u >> 4], kDigits[u & 0xf]};
  }

  std::string_view src_;
  LexResult out_;
  std::vector<int> indents_{0};
  char indent_char_ = 0;
};

}  // namespace

LexResult tokenize(std::string_view source) {
  auto normalized = normalize_newlines(source);
  return Lexer(normalized).run();
}

}  // namespace merlan
