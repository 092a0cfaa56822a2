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

#include "merlan/formatter.hpp"

#include <algorithm>

namespace merlan {

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

namespace {

class Formatter {
 public:
  std::string run(const Specification& spec) {
    if (!spec.entities.empty()) {
      line(0, "ENTITIES:");
      std::optional<EntityKind> group;
      for (const auto& entity : spec.entities) {
        if (group != entity.kind) {
          group = entity.kind;
          line(1, entity.kind == EntityKind::Concrete ? "CONCRETE:" : "ABSTRACT:");
        }
        line(2, entity.name);
        for (const auto& attr : entity.attributes) {
          attribute(3, attr.key, attr.value ? literal(*attr.value) : "?");
        }
      }
    }
    if (!spec.requirements.empty()) {
      line(0, "REQUIREMENTS:");
      for (const auto& req : spec.requirements) {
        line(1, req.name + ":");
        node(2, req.root);
      }
    }
    return std::move(out_);
  }

 private:
  void line(int depth, std::string_view text) {
    out_.append(static_cast<std::size_t>(depth) * 2, ' ');
    out_ += text;
    out_ += '\n';
  }

  void attribute(int depth, std::string_view key, std::string_view value) {
    std::string text = "- ";
    text += key;
    text += ": ";
    text += value;
    line(depth, text);
  }

  static std::string literal(const Literal& value) {
    if (const auto* s = std::get_if<std::string>(&value)) return quote(*s);
    return std::get<Decimal>(value).text();
  }

  void node(int depth, const RequirementNode& n) {
    if (!n.is_leaf()) {
      line(depth, to_string(n.complex().op));
      for (const auto& child : n.complex().children) node(depth + 1, child);
      return;
    }
    const auto& leaf = n.simple();
    std::string header(to_string(leaf.kind));
    if (leaf.cardinality) header += " " + leaf.cardinality->to_string();
    line(depth, header);
    for (const auto& key : leaf.ordered_keys()) {
      if (key == kEntityKey) {
        attribute(depth + 1, key, *leaf.entity);
      } else if (key == kNameKey) {
        attribute(depth + 1, key, quote(*leaf.name));
      } else if (key == kModalityKey) {
        attribute(depth + 1, key, quote(leaf.modality->name()));
      } else if (key == kConfidenceKey) {
        attribute(depth + 1, key, leaf.confidence->text());
      } else {
        auto it = std::find_if(leaf.constraints.begin(), leaf.constraints.end(),
                               [&](const AttributeDecl& a) { return a.key == key; });
        attribute(depth + 1, key, it->value ? literal(*it->value) : "?");
      }
    }
  }

  std::string out_;
};

}  // namespace

std::string format(const Specification& spec) { return Formatter().run(spec); }

}  // namespace merlan
