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

#include "merlan/codegen.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "merlan/validator.hpp"

namespace merlan {

std::vector<std::string> Manifest::requirement_names() const {
  std::vector<std::string> out;
  for (const auto& r : requirements) out.push_back(r.name);
  return out;
}

namespace {

constexpr std::array<std::string_view, 35> kPythonKeywords = {
    "False", "None",   "True",    "and",      "as",       "assert", "async",  "await",    "break",
    "class", "continue", "def",   "del",      "elif",     "else",   "except", "finally",  "for",
    "from",  "global", "if",      "import",   "in",       "is",     "lambda", "nonlocal", "not",
    "or",    "pass",   "raise",   "return",   "try",      "while",  "with",   "yield"};

constexpr std::array<std::string_view, 8> kRuntimeNames = {
    "ConcreteEntity", "AbstractEntity", "RequirementDefinition", "ConcreteRequirement",
    "AbstractRequirement", "AND", "OR", "NOT"};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& names, std::string_view name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

std::string target_identifier(std::string_view name) {
  std::string out;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    out += (u < 0x80 && (std::isalnum(u) || c == '_')) ? c : '_';
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out.front()))) out.insert(out.begin(), '_');
  if (contains(kPythonKeywords, out) || contains(kRuntimeNames, out)) out += '_';
  return out;
}

std::string python_string(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

namespace {

std::string python_literal(const Literal& value) {
  if (const auto* s = std::get_if<std::string>(&value)) return python_string(*s);
  return std::get<Decimal>(value).text();
}

class Generator {
 public:
  explicit Generator(const Specification& spec) : spec_(spec) {}

  GeneratedCode run() {
    auto report = validate(spec_);
    if (!report.ok) {
      const auto& first = *std::find_if(report.diagnostics.begin(), report.diagnostics.end(),
                                        [](const Diagnostic& d) { return d.severity == Severity::Error; });
      throw GenError("specification is not valid (" + first.code + ": " + first.message + ")");
    }

    GeneratedCode out;
    for (const auto& e : spec_.entities) {
      auto variable = claim(e.name, "entity");
      entity_vars_[e.name] = variable;
      out.manifest.entities.push_back({e.name, e.kind, variable, e.span});
    }
    for (const auto& r : spec_.requirements) {
      out.manifest.requirements.push_back({r.name, claim(r.name, "requirement"), r.span});
    }

    code_ += "# Entities\n";
    for (std::size_t i = 0; i < spec_.entities.size(); ++i) {
      emit_entity(spec_.entities[i], out.manifest.entities[i].variable);
    }
    code_ += "# Requirements\n";
    for (std::size_t i = 0; i < spec_.requirements.size(); ++i) {
      emit_requirement(spec_.requirements[i], out.manifest.requirements[i].variable);
    }
    if (!spec_.requirements.empty()) {
      const auto& first = out.manifest.requirements.front().variable;
      code_ += "\n";
      code_ += "# Usage (not generated): requirements drive agent state transitions, e.g.\n";
      code_ += "# initial_state.when_requirement_matched_go_to(" + first + ", " + first + "_state)\n";
    }
    out.code = std::move(code_);
    return out;
  }

 private:
  std::string claim(const std::string& name, std::string_view what) {
    auto variable = target_identifier(name);
    auto [it, inserted] = used_.emplace(variable, name);
    if (!inserted) {
      throw GenError(std::string(what) + " '" + name + "' maps to variable '" + variable + "', already used by '" +
                     it->second + "'");
    }
    return variable;
  }

  void emit_entity(const EntityDef& e, const std::string& variable) {
    code_ += variable;
    code_ += e.kind == EntityKind::Concrete ? " = ConcreteEntity(name=" : " = AbstractEntity(name=";
    code_ += python_string(e.name);
    code_ += ", attributes={";
    bool first = true;
    for (const auto& a : e.attributes) {
      if (!first) code_ += ", ";
      first = false;
      code_ += python_string(a.key) + ": " + (a.value ? python_literal(*a.value) : "None");
    }
    code_ += "})\n";
  }

  void emit_requirement(const NamedRequirement& r, const std::string& variable) {
    code_ += variable + " = RequirementDefinition(" + python_string(r.name) + ")\n";
    if (r.root.is_leaf()) {
      code_ += variable + ".set(" + leaf_call(r.root.simple()) + ")\n";
      return;
    }
    code_ += variable + ".set(\n";
    emit_node(r.root, 1);
    code_ += "\n)\n";
  }

  void emit_node(const RequirementNode& node, int depth) {
    std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    if (node.is_leaf()) {
      code_ += indent + leaf_call(node.simple());
      return;
    }
    const auto& complex = node.complex();
    if (complex.op == BoolOp::Not) {
      code_ += indent + "NOT(\n";
      emit_node(complex.children.front(), depth + 1);
      code_ += "\n" + indent + ")";
      return;
    }
    code_ += indent + std::string(to_string(complex.op)) + "([\n";
    for (std::size_t i = 0; i < complex.children.size(); ++i) {
      if (i > 0) code_ += ",\n";
      emit_node(complex.children[i], depth + 1);
    }
    code_ += "\n" + indent + "])";
  }

  std::string leaf_call(const SimpleRequirement& leaf) const {
    bool concrete = leaf.kind == RequirementKind::Concrete;
    std::string out = concrete ? "ConcreteRequirement(name=" : "AbstractRequirement(name=";
    out += python_string(*leaf.name);
    out += concrete ? ", concrete_entity=" : ", abstract_entity=";
    out += entity_vars_.at(*leaf.entity);
    out += ", attributes={";

    std::vector<std::string> items;
    if (leaf.cardinality) {
      // "max": 0 already means unbounded on the runtime side.
      if (leaf.cardinality->max() == std::optional<std::uint64_t>(0)) {
        throw GenError("leaf '" + *leaf.name + "': cardinality [0] cannot be encoded; use NOT instead");
      }
      items.push_back("\"min\": " + std::to_string(leaf.cardinality->min()));
      items.push_back("\"max\": " + std::to_string(leaf.cardinality->max().value_or(0)));
    }
    auto keys = leaf.ordered_keys();
    for (const auto& key : keys) {
      if (key == kModalityKey) items.push_back("\"modality\": " + python_string(leaf.modality->name()));
      if (key == kConfidenceKey) items.push_back("\"confidence\": " + canonical_decimal(leaf.confidence->text()).value());
    }
    for (const auto& key : keys) {
      if (is_reserved_key(key)) continue;
      auto it = std::find_if(leaf.constraints.begin(), leaf.constraints.end(),
                             [&](const AttributeDecl& a) { return a.key == key; });
      items.push_back(python_string(key) + ": " + python_literal(*it->value));
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out += ", ";
      out += items[i];
    }
    out += "})";
    return out;
  }

  const Specification& spec_;
  std::string code_;
  std::map<std::string, std::string, std::less<>> used_;
  std::map<std::string, std::string, std::less<>> entity_vars_;
};

}  // namespace

std::string generate(const Specification& spec) { return Generator(spec).run().code; }

GeneratedCode generate_with_manifest(const Specification& spec) { return Generator(spec).run(); }

}  // namespace merlan
