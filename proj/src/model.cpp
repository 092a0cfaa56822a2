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

#include "merlan/model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace merlan {

bool SourceSpan::encloses(const SourceSpan& other) const {
  auto begin_le = line < other.line || (line == other.line && column <= other.column);
  auto end_ge = end_line > other.end_line || (end_line == other.end_line && end_column >= other.end_column);
  return begin_le && end_ge;
}

SourceSpan SourceSpan::cover(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan out = a;
  if (b.line < out.line || (b.line == out.line && b.column < out.column)) {
    out.line = b.line;
    out.column = b.column;
  }
  if (b.end_line > out.end_line || (b.end_line == out.end_line && b.end_column > out.end_column)) {
    out.end_line = b.end_line;
    out.end_column = b.end_column;
  }
  return out;
}

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Splits "[-]int[.frac]"; false when the text is not of that shape.
bool split_decimal(std::string_view text, bool& negative, std::string_view& int_part, std::string_view& frac_part) {
  negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto dot = text.find('.');
  int_part = text.substr(0, dot);
  frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (!is_digits(int_part)) return false;
  if (dot != std::string_view::npos && !is_digits(frac_part)) return false;
  return true;
}

}  // namespace

std::optional<Decimal> Decimal::parse(std::string_view text) {
  bool negative = false;
  std::string_view int_part, frac_part;
  if (text.empty() || text.front() == '+') return std::nullopt;
  if (!split_decimal(text, negative, int_part, frac_part)) return std::nullopt;
  Decimal d;
  d.text_ = std::string(text);
  // strtod is locale-sensitive only for the radix character; the C locale is
  // assumed throughout.
  d.value_ = std::strtod(d.text_.c_str(), nullptr);
  return d;
}

bool Decimal::is_integer() const { return text_.find('.') == std::string::npos; }

std::optional<std::string> canonical_decimal(std::string_view text) {
  bool negative = false;
  std::string_view int_part, frac_part;
  if (!split_decimal(text, negative, int_part, frac_part)) return std::nullopt;
  while (int_part.size() > 1 && int_part.front() == '0') int_part.remove_prefix(1);
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.remove_suffix(1);
  std::string out;
  bool zero = int_part == "0" && frac_part.empty();
  if (negative && !zero) out += '-';
  out += int_part;
  if (!frac_part.empty()) {
    out += '.';
    out += frac_part;
  }
  return out;
}

std::string literal_to_string(const Literal& literal) {
  if (const auto* s = std::get_if<std::string>(&literal)) return *s;
  return std::get<Decimal>(literal).text();
}

bool literals_equal(const Literal& a, const Literal& b) {
  if (a.index() != b.index()) return false;
  if (const auto* s = std::get_if<std::string>(&a)) return *s == std::get<std::string>(b);
  return canonical_decimal(std::get<Decimal>(a).text()) == canonical_decimal(std::get<Decimal>(b).text());
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!(std::isalpha(head) || head == '_') || head > 0x7f) return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return u < 0x80 && (std::isalnum(u) || u == '_');
  });
}

std::string_view to_string(EntityKind kind) { return kind == EntityKind::Concrete ? "concrete" : "abstract"; }

const AttributeDecl* EntityDef::find_attribute(std::string_view key) const {
  auto it = std::find_if(attributes.begin(), attributes.end(), [&](const AttributeDecl& a) { return a.key == key; });
  return it == attributes.end() ? nullptr : &*it;
}

Cardinality Cardinality::exact(std::uint64_t n) {
  Cardinality c;
  c.min_ = n;
  c.max_ = n;
  c.form_ = Form::Exact;
  return c;
}

Cardinality Cardinality::interval(std::uint64_t min, std::uint64_t max) {
  Cardinality c;
  c.min_ = min;
  c.max_ = max;
  c.form_ = Form::Interval;
  return c;
}

Cardinality Cardinality::at_least(std::uint64_t min) {
  Cardinality c;
  c.min_ = min;
  c.max_ = std::nullopt;
  c.form_ = Form::Unbounded;
  return c;
}

bool Cardinality::well_formed() const { return form_ != Form::Interval || min_ < *max_; }

bool Cardinality::admits(std::uint64_t count) const { return min_ <= count && (!max_ || count <= *max_); }

std::string Cardinality::to_string() const {
  switch (form_) {
    case Form::Exact:
      return "[" + std::to_string(min_) + "]";
    case Form::Interval:
      return "[" + std::to_string(min_) + ".." + std::to_string(*max_) + "]";
    case Form::Unbounded:
      break;
  }
  return "[" + std::to_string(min_) + "..*]";
}

Modality Modality::parse(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); });
  return Modality(std::move(lower));
}

bool Modality::is_builtin() const {
  static constexpr std::array<std::string_view, 4> kBuiltins = {"text", "audio", "image", "video"};
  return std::find(kBuiltins.begin(), kBuiltins.end(), name_) != kBuiltins.end();
}

std::string_view to_string(RequirementKind kind) { return kind == RequirementKind::Concrete ? "CONCRETE" : "ABSTRACT"; }

EntityKind entity_kind_for(RequirementKind kind) {
  return kind == RequirementKind::Concrete ? EntityKind::Concrete : EntityKind::Abstract;
}

bool is_reserved_key(std::string_view key) {
  return key == kEntityKey || key == kNameKey || key == kModalityKey || key == kConfidenceKey;
}

Cardinality SimpleRequirement::effective_cardinality() const {
  return cardinality.value_or(default_cardinality());
}

std::vector<std::string> SimpleRequirement::ordered_keys() const {
  auto is_set = [this](std::string_view key) {
    if (key == kEntityKey) return entity.has_value();
    if (key == kNameKey) return name.has_value();
    if (key == kModalityKey) return modality.has_value();
    if (key == kConfidenceKey) return confidence.has_value();
    return std::any_of(constraints.begin(), constraints.end(), [&](const AttributeDecl& a) { return a.key == key; });
  };
  std::vector<std::string> out;
  if (!key_order.empty()) {
    for (const auto& key : key_order) {
      if (is_set(key)) out.push_back(key);
    }
    // Keys added after parsing go last.
    for (const auto& c : constraints) {
      if (std::find(out.begin(), out.end(), c.key) == out.end()) out.push_back(c.key);
    }
    for (auto key : {kEntityKey, kNameKey, kModalityKey, kConfidenceKey}) {
      if (is_set(key) && std::find(out.begin(), out.end(), key) == out.end()) out.emplace_back(key);
    }
    return out;
  }
  for (auto key : {kEntityKey, kNameKey, kModalityKey, kConfidenceKey}) {
    if (is_set(key)) out.emplace_back(key);
  }
  for (const auto& c : constraints) out.push_back(c.key);
  return out;
}

std::string_view to_string(BoolOp op) {
  switch (op) {
    case BoolOp::And:
      return "AND";
    case BoolOp::Or:
      return "OR";
    case BoolOp::Not:
      break;
  }
  return "NOT";
}

RequirementNode::RequirementNode(SimpleRequirement leaf, SourceSpan span) : body_(std::move(leaf)), span_(span) {}

RequirementNode::RequirementNode(BoolOp op, std::vector<RequirementNode> children, SourceSpan span)
    : body_(Complex{op, std::move(children)}), span_(span) {}

RequirementNode RequirementNode::leaf(SimpleRequirement req) {
  auto span = req.span;
  return RequirementNode(std::move(req), span);
}

RequirementNode RequirementNode::all_of(std::vector<RequirementNode> children) {
  return RequirementNode(BoolOp::And, std::move(children), {});
}

RequirementNode RequirementNode::any_of(std::vector<RequirementNode> children) {
  return RequirementNode(BoolOp::Or, std::move(children), {});
}

RequirementNode RequirementNode::negate(RequirementNode child) {
  std::vector<RequirementNode> children;
  children.push_back(std::move(child));
  return RequirementNode(BoolOp::Not, std::move(children), {});
}

namespace {

template <typename Node, typename Leaf>
void collect_leaves(Node& node, std::vector<Leaf*>& out) {
  if (node.is_leaf()) {
    out.push_back(&node.simple());
    return;
  }
  for (auto& child : node.complex().children) collect_leaves(child, out);
}

}  // namespace

std::vector<const SimpleRequirement*> RequirementNode::leaves() const {
  std::vector<const SimpleRequirement*> out;
  collect_leaves(*this, out);
  return out;
}

std::vector<SimpleRequirement*> RequirementNode::leaves() {
  std::vector<SimpleRequirement*> out;
  collect_leaves(*this, out);
  return out;
}

bool RequirementNode::arity_ok() const {
  if (is_leaf()) return true;
  const auto& c = complex();
  if (c.op == BoolOp::Not ? c.children.size() != 1 : c.children.empty()) return false;
  return std::all_of(c.children.begin(), c.children.end(), [](const RequirementNode& n) { return n.arity_ok(); });
}

const NamedRequirement* Specification::find_requirement(std::string_view name) const {
  auto it = std::find_if(requirements.begin(), requirements.end(),
                         [&](const NamedRequirement& r) { return r.name == name; });
  return it == requirements.end() ? nullptr : &*it;
}

namespace {

void strip_spans(SimpleRequirement& leaf) {
  leaf.span = {};
  for (auto& c : leaf.constraints) c.span = {};
}

RequirementNode without_spans(const RequirementNode& node) {
  if (node.is_leaf()) {
    auto leaf = node.simple();
    strip_spans(leaf);
    return RequirementNode(std::move(leaf), {});
  }
  std::vector<RequirementNode> children;
  for (const auto& child : node.complex().children) children.push_back(without_spans(child));
  return RequirementNode(node.complex().op, std::move(children), {});
}

Specification without_spans(const Specification& spec) {
  Specification out;
  for (auto e : spec.entities) {
    e.span = {};
    for (auto& a : e.attributes) a.span = {};
    out.entities.push_back(std::move(e));
  }
  for (const auto& r : spec.requirements) out.requirements.push_back({r.name, without_spans(r.root), {}});
  return out;
}

}  // namespace

bool structurally_equal(const Specification& a, const Specification& b) { return without_spans(a) == without_spans(b); }

bool structurally_equal(const RequirementNode& a, const RequirementNode& b) {
  return without_spans(a) == without_spans(b);
}

const EntityDef* resolve_entity(const Specification& spec, std::string_view name) {
  auto it = std::find_if(spec.entities.begin(), spec.entities.end(), [&](const EntityDef& e) { return e.name == name; });
  return it == spec.entities.end() ? nullptr : &*it;
}

std::vector<Constraint> effective_constraints(const Specification& spec, const SimpleRequirement& leaf) {
  const EntityDef* entity = leaf.entity ? resolve_entity(spec, *leaf.entity) : nullptr;
  if (entity == nullptr) {
    throw std::invalid_argument("requirement entity '" + leaf.entity.value_or("") + "' does not resolve");
  }
  auto find_constraint = [&](std::string_view key) -> const AttributeDecl* {
    auto it = std::find_if(leaf.constraints.begin(), leaf.constraints.end(),
                           [&](const AttributeDecl& a) { return a.key == key; });
    return it == leaf.constraints.end() ? nullptr : &*it;
  };

  std::vector<Constraint> out;
  for (const auto& attr : entity->attributes) {
    if (entity->kind == EntityKind::Abstract && attr.key == "description") continue;
    const AttributeDecl* req_value = find_constraint(attr.key);
    if (attr.value && req_value && req_value->value && !literals_equal(*attr.value, *req_value->value)) {
      throw ConflictError(attr.key, "entity '" + entity->name + "' fixes '" + attr.key + "' to " +
                                        literal_to_string(*attr.value) + " but requirement constrains it to " +
                                        literal_to_string(*req_value->value));
    }
    if (attr.value) {
      out.push_back({attr.key, *attr.value});
    } else if (req_value && req_value->value) {
      out.push_back({attr.key, *req_value->value});
    }
  }
  for (const auto& c : leaf.constraints) {
    if (!c.value || entity->find_attribute(c.key) != nullptr) continue;
    out.push_back({c.key, *c.value});
  }
  return out;
}

}  // namespace merlan
