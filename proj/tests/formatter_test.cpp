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

#include <random>

#include <gtest/gtest.h>

#include "merlan/formatter.hpp"
#include "merlan/parser.hpp"
#include "merlan/random_corpus.hpp"
#include "test_support.hpp"

namespace merlan {
namespace {

TEST(Format, EmptySpec) { EXPECT_EQ(format(Specification{}), ""); }

TEST(Format, HouseRoundTrip) {
  auto spec = testing::house_spec();
  auto text = format(spec);
  auto again = testing::parse_ok(text);
  EXPECT_TRUE(structurally_equal(spec, again));
  EXPECT_EQ(format(again), text);
}

TEST(Format, CanonicalLayout) {
  auto spec = testing::parse_ok(R"(ENTITIES:
    CONCRETE:
          dog:
          - breed: "lab"
REQUIREMENTS:
   r:
     CONCRETE [2]
        - entity: dog
        - name: "d"
        - confidence: 0.50
        - modality: "IMAGE"
)");
  EXPECT_EQ(format(spec), R"(ENTITIES:
  CONCRETE:
    dog
      - breed: "lab"
REQUIREMENTS:
  r:
    CONCRETE [2]
      - entity: dog
      - name: "d"
      - confidence: 0.50
      - modality: "image"
)");
}

TEST(Format, InterleavedGroupsKeepOrder) {
  auto spec = testing::parse_ok("ENTITIES:\n  CONCRETE:\n    a\n  ABSTRACT:\n    b\n  CONCRETE:\n    c\n");
  EXPECT_EQ(format(spec), "ENTITIES:\n  CONCRETE:\n    a\n  ABSTRACT:\n    b\n  CONCRETE:\n    c\n");
}

TEST(Format, QuoteEscapes) {
  EXPECT_EQ(quote("a\"b\\c"), "\"a\\\"b\\\\c\"");
  auto spec = testing::parse_ok("ENTITIES:\n  ABSTRACT:\n    n\n      - description: \"say \\\"hi\\\"\"\n");
  EXPECT_TRUE(structurally_equal(spec, testing::parse_ok(format(spec))));
}

// parse(format(s)) == s and format is a fixed point, over random specs.
TEST(FormatProperty, RoundTripRandomSpecs) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    auto spec = random_specification(rng);
    auto text = format(spec);
    auto parsed = parse_source(text);
    ASSERT_TRUE(parsed.ok()) << text;
    EXPECT_TRUE(structurally_equal(spec, parsed.spec)) << text;
    EXPECT_EQ(format(parsed.spec), text);
  }
}

}  // namespace
}  // namespace merlan
