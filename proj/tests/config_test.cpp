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

#include <gtest/gtest.h>

#include "merlan/config.hpp"

namespace merlan {
namespace {

TEST(Config, Defaults) {
  Config c;
  EXPECT_TRUE(c.knows_modality(Modality::image()));
  EXPECT_FALSE(c.knows_modality(Modality::parse("thermal")));
  ASSERT_TRUE(c.plausibility.count("volume"));
  EXPECT_EQ(c.plausibility.at("volume"), std::vector<Modality>{Modality::audio()});
}

TEST(Config, ParsesModalitiesAndPlausibility) {
  auto c = parse_config("# site config\nmodalities = thermal, LIDAR\n\nplausibility.temperature = thermal\n");
  EXPECT_TRUE(c.knows_modality(Modality::parse("thermal")));
  EXPECT_TRUE(c.knows_modality(Modality::parse("lidar")));
  EXPECT_EQ(c.plausibility.at("temperature"), std::vector<Modality>{Modality::parse("thermal")});
  EXPECT_TRUE(c.plausibility.count("brand"));  // defaults kept
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config("modalities thermal\n"), ConfigError);
  EXPECT_THROW(parse_config("colour = red\n"), ConfigError);
  try {
    parse_config("\n\nbogus = 1\n");
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Config, ModalityList) {
  auto list = parse_modality_list(" a ,B,, c ");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[1].name(), "b");
}

}  // namespace
}  // namespace merlan
