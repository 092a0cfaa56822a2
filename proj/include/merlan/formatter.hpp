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

#ifndef MERLAN_FORMATTER_HPP
#define MERLAN_FORMATTER_HPP

#include <string>
#include <string_view>

#include "merlan/model.hpp"

namespace merlan {

// Canonical MERLAN text: two-space indents, colons after section keywords and
// requirement names, attribute lines one level under their owner, quoted
// strings and "?" for placeholders. Consecutive entities of one kind share a
// CONCRETE/ABSTRACT group so entity order survives a re-parse.
std::string format(const Specification& spec);

// Double-quoted, with \" \\ \n \t escapes.
std::string quote(std::string_view text);

}  // namespace merlan

#endif  // MERLAN_FORMATTER_HPP
