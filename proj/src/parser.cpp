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

#include "merlan/parser.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace merlan {

bool ParseResult::ok() const {
  return std::none_of(diagnostics.begin(), diagnostics.end(),
                      [](const ParseDiagnostic& d) { return d.severity == Severity::Error; });
}

namespace {

struct ParseFailure {
  std::string message;
  SourceSpan span;
};

struct RawAttribute {
  std::string key;
  const Token* value;  // StringLit, NumberLit, Question or Ident
  SourceSpan span;
};

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  Specification run() {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::Eof) {
      throw ParseFailure{"token stream does not end with end of file", {}};
    }
    Specification spec;
    if (at_keyword("ENTITIES")) parse_entities(spec);
    if (at_keyword("REQUIREMENTS")) parse_requirements(spec);
    if (!at(TokenKind::Eof)) {
      if (at_keyword("ENTITIES")) fail("ENTITIES section must come before REQUIREMENTS");
      fail("expected ENTITIES or REQUIREMENTS section, found " + describe(peek()));
    }
    return spec;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_keyword(std::string_view word) const { return at(TokenKind::SectionKeyword) && peek().text == word; }

  const Token& advance() {
    const Token& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::string message) const { throw ParseFailure{std::move(message), peek().span}; }
  [[noreturn]] static void fail_at(std::string message, const SourceSpan& span) {
    throw ParseFailure{std::move(message), span};
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case TokenKind::SectionKeyword:
      case TokenKind::Operator:
      case TokenKind::Ident:
      case TokenKind::NumberLit:
        return "'" + t.text + "'";
      case TokenKind::StringLit:
        return "string \"" + t.text + "\"";
      default:
        return std::string(to_string(t.kind));
    }
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (!at(kind)) fail("expected " + std::string(what) + ", found " + describe(peek()));
    return advance();
  }

  void expect_newline() { expect(TokenKind::Newline, "end of line"); }

  // ---- entities ----------------------------------------------------------

  void parse_entities(Specification& spec) {
    advance();
    expect_newline();
    if (!at(TokenKind::Indent)) return;
    advance();
    while (!at(TokenKind::Dedent)) {
      if (at_keyword("CONCRETE")) {
        parse_entity_group(spec, EntityKind::Concrete);
      } else if (at_keyword("ABSTRACT")) {
        parse_entity_group(spec, EntityKind::Abstract);
      } else {
        fail("expected CONCRETE or ABSTRACT entity group, found " + describe(peek()));
      }
    }
    advance();
  }

  void parse_entity_group(Specification& spec, EntityKind kind) {
    advance();
    expect_newline();
    if (!at(TokenKind::Indent)) return;
    advance();
    while (!at(TokenKind::Dedent)) spec.entities.push_back(parse_entity(kind));
    advance();
  }

  EntityDef parse_entity(EntityKind kind) {
    const Token& name = expect(TokenKind::Ident, "entity name");
    expect_newline();
    EntityDef entity;
    entity.name = name.text;
    entity.kind = kind;
    entity.span = name.span;
    for (const auto& raw : parse_attribute_block()) {
      if (entity.find_attribute(raw.key) != nullptr) {
        fail_at("duplicate attribute '" + raw.key + "' on entity '" + entity.name + "'",
                entity.find_attribute(raw.key)->span);
      }
      AttributeDecl attr{raw.key, std::nullopt, raw.span};
      if (raw.value->kind != TokenKind::Question) attr.value = value_literal(raw);
      entity.attributes.push_back(std::move(attr));
      entity.span = SourceSpan::cover(entity.span, raw.span);
    }
    return entity;
  }

  // Attribute lines either sit one level deeper or at the current level.
  std::vector<RawAttribute> parse_attribute_block() {
    std::vector<RawAttribute> attrs;
    if (at(TokenKind::Indent) && peek(1).kind == TokenKind::Dash) {
      advance();
      while (at(TokenKind::Dash)) attrs.push_back(parse_attribute_line());
      if (!at(TokenKind::Dedent)) fail("expected attribute line starting with '-', found " + describe(peek()));
      advance();
      return attrs;
    }
    while (at(TokenKind::Dash)) attrs.push_back(parse_attribute_line());
    return attrs;
  }

  RawAttribute parse_attribute_line() {
    const Token& dash = advance();
    const Token& key = expect(TokenKind::Ident, "attribute name");
    expect(TokenKind::Colon, "':' after attribute name");
    const Token& value = peek();
    switch (value.kind) {
      case TokenKind::StringLit:
      case TokenKind::NumberLit:
      case TokenKind::Question:
      case TokenKind::Ident:
        advance();
        break;
      default:
        fail("expected attribute value (string, number or '?'), found " + describe(value));
    }
    expect_newline();
    return {key.text, &value, SourceSpan::cover(dash.span, value.span)};
  }

  static Literal value_literal(const RawAttribute& raw) {
    const Token& t = *raw.value;
    if (t.kind == TokenKind::StringLit) return t.text;
    if (t.kind == TokenKind::NumberLit) {
      auto d = Decimal::parse(t.text);
      if (!d) fail_at("malformed number '" + t.text + "'", t.span);
      return *d;
    }
    if (t.kind == TokenKind::Ident) {
      fail_at("bare identifier '" + t.text + "' is not a valid value for '" + raw.key + "'; quote it", t.span);
    }
    fail_at("'?' is not allowed here", t.span);
  }

  // ---- requirements ------------------------------------------------------

  void parse_requirements(Specification& spec) {
    advance();
    expect_newline();
    if (!at(TokenKind::Indent)) return;
    advance();
    while (!at(TokenKind::Dedent)) spec.requirements.push_back(parse_named_requirement());
    advance();
  }

  NamedRequirement parse_named_requirement() {
    const Token& name = expect(TokenKind::Ident, "requirement name");
    expect_newline();
    if (!at(TokenKind::Indent)) fail_at("requirement '" + name.text + "' has no body", name.span);
    advance();
    auto root = parse_requirement(1);
    if (!at(TokenKind::Dedent)) {
      fail("requirement '" + name.text + "' must hold exactly one requirement; combine several with AND or OR");
    }
    advance();
    auto span = SourceSpan::cover(name.span, root.span());
    return {name.text, std::move(root), span};
  }

  RequirementNode parse_requirement(int depth) {
    if (depth > kMaxNestingDepth) fail("requirements nested too deeply");
    if (at(TokenKind::Operator)) return parse_complex(depth);
    if (at_keyword("CONCRETE")) return parse_simple(RequirementKind::Concrete);
    if (at_keyword("ABSTRACT")) return parse_simple(RequirementKind::Abstract);
    fail("expected requirement (AND, OR, NOT, CONCRETE or ABSTRACT), found " + describe(peek()));
  }

  RequirementNode parse_complex(int depth) {
    const Token& op_token = advance();
    BoolOp op = op_token.text == "AND" ? BoolOp::And : op_token.text == "OR" ? BoolOp::Or : BoolOp::Not;
    expect_newline();
    std::vector<RequirementNode> children;
    if (at(TokenKind::Indent)) {
      advance();
      while (!at(TokenKind::Dedent)) children.push_back(parse_requirement(depth + 1));
      advance();
    }
    if (op == BoolOp::Not && children.size() != 1) {
      fail_at("NOT requires exactly one child requirement, found " + std::to_string(children.size()), op_token.span);
    }
    if (children.empty()) {
      fail_at(op_token.text + " requires at least one child requirement", op_token.span);
    }
    auto span = SourceSpan::cover(op_token.span, children.back().span());
    return RequirementNode(op, std::move(children), span);
  }

  std::uint64_t parse_bound() {
    const Token& t = peek();
    if (t.kind != TokenKind::NumberLit) fail("expected cardinality bound, found " + describe(t));
    if (t.text.find_first_not_of("0123456789") != std::string::npos) {
      fail("cardinality bound must be a non-negative integer, found '" + t.text + "'");
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{}) fail("cardinality bound '" + t.text + "' is out of range");
    advance();
    return value;
  }

  Cardinality parse_cardinality() {
    advance();  // '['
    std::uint64_t min = parse_bound();
    Cardinality card = Cardinality::exact(min);
    if (at(TokenKind::DotDot)) {
      advance();
      if (at(TokenKind::Star)) {
        advance();
        card = Cardinality::at_least(min);
      } else {
        card = Cardinality::interval(min, parse_bound());
      }
    }
    expect(TokenKind::RBracket, "']' closing the cardinality");
    return card;
  }

  RequirementNode parse_simple(RequirementKind kind) {
    const Token& keyword = advance();
    SimpleRequirement req;
    req.kind = kind;
    req.span = keyword.span;
    if (at(TokenKind::LBracket)) req.cardinality = parse_cardinality();
    expect_newline();

    auto attrs = parse_attribute_block();
    for (const auto& raw : attrs) {
      auto dup = std::find_if(attrs.begin(), attrs.end(), [&](const RawAttribute& a) { return a.key == raw.key; });
      if (&*dup != &raw) fail_at("duplicate '" + raw.key + "' attribute", dup->span);
      lift_attribute(req, raw);
      req.key_order.push_back(raw.key);
      req.span = SourceSpan::cover(req.span, raw.span);
    }
    return RequirementNode::leaf(std::move(req));
  }

  static void lift_attribute(SimpleRequirement& req, const RawAttribute& raw) {
    const Token& v = *raw.value;
    if (raw.key == kEntityKey) {
      if ((v.kind != TokenKind::Ident && v.kind != TokenKind::StringLit) || !is_identifier(v.text)) {
        fail_at("'entity' must name an entity", v.span);
      }
      req.entity = v.text;
    } else if (raw.key == kNameKey) {
      if (v.kind != TokenKind::StringLit) fail_at("'name' must be a quoted string", v.span);
      req.name = v.text;
    } else if (raw.key == kModalityKey) {
      if (v.kind != TokenKind::StringLit) fail_at("'modality' must be a quoted string", v.span);
      req.modality = Modality::parse(v.text);
    } else if (raw.key == kConfidenceKey) {
      if (v.kind != TokenKind::NumberLit) fail_at("'confidence' must be a number", v.span);
      auto d = Decimal::parse(v.text);
      if (!d) fail_at("malformed number '" + v.text + "'", v.span);
      req.confidence = *d;
    } else {
      if (v.kind == TokenKind::Question) {
        fail_at("requirement constraint '" + raw.key + "' needs a concrete value, not '?'", v.span);
      }
      req.constraints.push_back({raw.key, value_literal(raw), raw.span});
    }
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse(std::span<const Token> tokens) {
  ParseResult result;
  try {
    result.spec = Parser(tokens).run();
  } catch (const ParseFailure& failure) {
    result.spec = {};
    result.diagnostics.push_back({Severity::Error, failure.message, failure.span});
  }
  return result;
}

ParseResult parse_source(std::string_view source) {
  auto lexed = tokenize(source);
  if (!lexed.ok()) return {{}, std::move(lexed.diagnostics)};
  auto result = parse(lexed.tokens);
  result.diagnostics.insert(result.diagnostics.begin(), lexed.diagnostics.begin(), lexed.diagnostics.end());
  return result;
}

}  // namespace merlan
