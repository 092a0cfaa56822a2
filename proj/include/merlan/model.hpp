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

// Metamodel types for MERLAN specifications: entities, attributes, simple and
// complex requirements, cardinalities and modalities.
//
// Everything here is a plain value type. A Specification produced by the
// parser may still violate semantic rules (missing mandatory attributes,
// duplicate names, ...); those are reported by the validator, which is why the
// mandatory fields of SimpleRequirement are optional at this level.

#ifndef MERLAN_MODEL_HPP
#define MERLAN_MODEL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace merlan {

struct SourceSpan {
  int line = 0;
  int column = 0;
  int end_line = 0;
  int end_column = 0;

  bool encloses(const SourceSpan& other) const;
  static SourceSpan cover(const SourceSpan& a, const SourceSpan& b);

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
  friend auto operator<=>(const SourceSpan&, const SourceSpan&) = default;
};

// A decimal number that remembers the exact text it was written with.
class Decimal {
 public:
  Decimal() = default;

  // Accepts [-]digits[.digits]. Returns nullopt for anything else.
  static std::optional<Decimal> parse(std::string_view text);

  const std::string& text() const { return text_; }
  double value() const { return value_; }
  bool is_integer() const;

  friend bool operator==(const Decimal& a, const Decimal& b) { return a.text_ == b.text_; }

 private:
  std::string text_ = "0";
  double value_ = 0.0;
};

// Canonical decimal text: no sign on zero, no leading zeros, no trailing
// fractional zeros ("007.50" -> "7.5", "30.0" -> "30"). Returns nullopt when
// `text` is not a decimal.
std::optional<std::string> canonical_decimal(std::string_view text);

using Literal = std::variant<std::string, Decimal>;

std::string literal_to_string(const Literal& literal);
bool literals_equal(const Literal& a, const Literal& b);

bool is_identifier(std::string_view text);

struct AttributeDecl {
  std::string key;
  std::optional<Literal> value;  // nullopt is a "?" placeholder
  SourceSpan span;

  bool is_placeholder() const { return !value.has_value(); }

  friend bool operator==(const AttributeDecl&, const AttributeDecl&) = default;
};

enum class EntityKind { Concrete, Abstract };

std::string_view to_string(EntityKind kind);

struct EntityDef {
  std::string name;
  EntityKind kind = EntityKind::Concrete;
  std::vector<AttributeDecl> attributes;
  SourceSpan span;

  const AttributeDecl* find_attribute(std::string_view key) const;

  friend bool operator==(const EntityDef&, const EntityDef&) = default;
};

class Cardinality {
 public:
  enum class Form { Exact, Interval, Unbounded };

  Cardinality() = default;

  static Cardinality exact(std::uint64_t n);
  static Cardinality interval(std::uint64_t min, std::uint64_t max);
  static Cardinality at_least(std::uint64_t min);

  std::uint64_t min() const { return min_; }
  std::optional<std::uint64_t> max() const { return max_; }
  Form form() const { return form_; }

  // False only for an interval written with min >= max.
  bool well_formed() const;
  bool admits(std::uint64_t count) const;

  // "[n]", "[m..n]" or "[m..*]".
  std::string to_string() const;

  friend bool operator==(const Cardinality&, const Cardinality&) = default;

 private:
  std::uint64_t min_ = 1;
  std::optional<std::uint64_t> max_;
  Form form_ = Form::Unbounded;
};

// Default when a concrete requirement gives no cardinality.
inline Cardinality default_cardinality() { return Cardinality::at_least(1); }

// Modalities are an open set: four built-ins plus names supplied by
// configuration. Stored lowercase.
class Modality {
 public:
  Modality() = default;

  static Modality parse(std::string_view text);
  static Modality text() { return Modality("text"); }
  static Modality audio() { return Modality("audio"); }
  static Modality image() { return Modality("image"); }
  static Modality video() { return Modality("video"); }

  const std::string& name() const { return name_; }
  bool is_builtin() const;

  friend bool operator==(const Modality&, const Modality&) = default;

 private:
  explicit Modality(std::string name) : name_(std::move(name)) {}

  std::string name_;
};

enum class RequirementKind { Concrete, Abstract };

std::string_view to_string(RequirementKind kind);
EntityKind entity_kind_for(RequirementKind kind);

inline constexpr std::string_view kEntityKey = "entity";
inline constexpr std::string_view kNameKey = "name";
inline constexpr std::string_view kModalityKey = "modality";
inline constexpr std::string_view kConfidenceKey = "confidence";

bool is_reserved_key(std::string_view key);

struct SimpleRequirement {
  RequirementKind kind = RequirementKind::Concrete;
  std::optional<std::string> entity;
  std::optional<std::string> name;
  std::optional<Modality> modality;
  std::optional<Decimal> confidence;
  std::optional<Cardinality> cardinality;
  std::vector<AttributeDecl> constraints;
  // Attribute keys (reserved and constraint) in the order they were written.
  // Empty for requirements built in code; see ordered_keys().
  std::vector<std::string> key_order;
  SourceSpan span;

  // Cardinality to evaluate against: the explicit one or [1..*].
  Cardinality effective_cardinality() const;

  // key_order when present, else entity, name, modality, confidence followed
  // by constraint keys. Only keys that are actually set are returned.
  std::vector<std::string> ordered_keys() const;

  friend bool operator==(const SimpleRequirement&, const SimpleRequirement&) = default;
};

enum class BoolOp { And, Or, Not };

std::string_view to_string(BoolOp op);

class RequirementNode {
 public:
  struct Complex {
    BoolOp op = BoolOp::And;
    std::vector<RequirementNode> children;

    friend bool operator==(const Complex&, const Complex&) = default;
  };

  RequirementNode(SimpleRequirement leaf, SourceSpan span);
  RequirementNode(BoolOp op, std::vector<RequirementNode> children, SourceSpan span);

  static RequirementNode leaf(SimpleRequirement req);
  static RequirementNode all_of(std::vector<RequirementNode> children);
  static RequirementNode any_of(std::vector<RequirementNode> children);
  static RequirementNode negate(RequirementNode child);

  bool is_leaf() const { return std::holds_alternative<SimpleRequirement>(body_); }
  const SimpleRequirement& simple() const { return std::get<SimpleRequirement>(body_); }
  const Complex& complex() const { return std::get<Complex>(body_); }
  SimpleRequirement& simple() { return std::get<SimpleRequirement>(body_); }
  Complex& complex() { return std::get<Complex>(body_); }
  const SourceSpan& span() const { return span_; }

  // Pre-order traversal of the leaves.
  std::vector<const SimpleRequirement*> leaves() const;
  std::vector<SimpleRequirement*> leaves();

  // Arity rules: NOT has exactly one child, AND/OR at least one.
  bool arity_ok() const;

  friend bool operator==(const RequirementNode&, const RequirementNode&) = default;

 private:
  std::variant<SimpleRequirement, Complex> body_;
  SourceSpan span_;
};

struct NamedRequirement {
  std::string name;
  RequirementNode root;
  SourceSpan span;

  friend bool operator==(const NamedRequirement&, const NamedRequirement&) = default;
};

// A parsed script. Names are meant to be unique but the parser keeps
// duplicates so that the validator can report them.
struct Specification {
  std::vector<EntityDef> entities;
  std::vector<NamedRequirement> requirements;

  const NamedRequirement* find_requirement(std::string_view name) const;
  bool empty() const { return entities.empty() && requirements.empty(); }

  friend bool operator==(const Specification&, const Specification&) = default;
};

// Span-insensitive comparison; what "structurally equal" means for round trips.
bool structurally_equal(const Specification& a, const Specification& b);
bool structurally_equal(const RequirementNode& a, const RequirementNode& b);

const EntityDef* resolve_entity(const Specification& spec, std::string_view name);

class ConflictError : public std::runtime_error {
 public:
  ConflictError(std::string key, const std::string& message)
      : std::runtime_error(message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct Constraint {
  std::string key;
  Literal value;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Entity-fixed attribute values merged with requirement-level constraints.
// Order: entity attributes first (source order), then ad-hoc requirement keys.
// For abstract entities the "description" attribute is an instruction to the
// recognizer, not a constraint, and is left out.
//
// Throws ConflictError when the entity fixes a key to one value and the
// requirement asks for another; std::invalid_argument when the leaf's entity
// does not resolve.
std::vector<Constraint> effective_constraints(const Specification& spec, const SimpleRequirement& leaf);

}  // namespace merlan

#endif  // MERLAN_MODEL_HPP
