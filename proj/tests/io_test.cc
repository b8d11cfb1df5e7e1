// Copyright 2026 The fdpqif Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fdpqif/io.h"

#include <cmath>
#include <limits>
#include <string>

#include "fdpqif/canonical.h"
#include "fdpqif/mechanisms.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace fdpqif {
namespace {

const std::string kFixtures = FDPQIF_FIXTURE_DIR;

ErrorCode CodeOf(const std::string& text) {
  try {
    ParseChannelJson(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::kSyntax;
}

int CountOf(const std::string& haystack, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(NumberFormatTest, SixDigits) {
  EXPECT_EQ(FormatNumber(0.658026536), "0.658027");
  EXPECT_EQ(FormatNumber(0.9), "0.9");
  EXPECT_EQ(FormatNumber(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_DOUBLE_EQ(Round6(0.24197670), 0.241977);
}

TEST(ChannelJsonTest, Roundtrip) {
  const Channel2 c = CanonicalEpsDelta(EpsDelta::Create(1, 0.1));
  const GeneralChannel back = ParseChannelJson(ChannelToJson(c));
  EXPECT_EQ(back.labels(), c.labels());
  EXPECT_NEAR(back.at(0, 1), c.p()[1], 1e-6);
  EXPECT_NEAR(back.at(1, 2), c.q()[2], 1e-6);
}

TEST(ChannelJsonTest, LabelsAreOptional) {
  const GeneralChannel g =
      ParseChannelJson(R"({"rows": [[0.5, 0.5], [1, 0]]})");
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"0", "1"}));
}

TEST(ChannelJsonTest, Errors) {
  EXPECT_EQ(CodeOf("{\"rows\": [[0.5"), ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf("{\"labels\": [\"a\"]}"), ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf("{\"rows\": [[0.7, 0.1], [0.5, 0.5]]}"), ErrorCode::kRowSum);
  EXPECT_EQ(CodeOf("{\"labels\": [\"a\", \"a\"], \"rows\": [[0.5, 0.5]]}"),
            ErrorCode::kDuplicateLabel);
  EXPECT_EQ(CodeOf("{\"rows\": [[1.5, -0.5]]}"), ErrorCode::kNegativeEntry);
}

TEST(TradeoffJsonTest, FixtureAndRoundtrip) {
  const TradeoffFunction f =
      ParseTradeoffJson(ReadFile(kFixtures + "/eps_delta_1_0.1.json"));
  // The fixture carries the knee to five digits.
  EXPECT_TRUE(
      TradeoffNear(f, EpsDeltaTradeoff(EpsDelta::Create(1, 0.1)), 1e-3));
  EXPECT_TRUE(TradeoffNear(ParseTradeoffJson(TradeoffToJson(f)), f, 1e-6));
  const Channel2 c = ChannelOf(f);
  EXPECT_NEAR(c.p()[1], 0.658, 1e-3);
  EXPECT_NEAR(c.p()[2], 0.242, 1e-3);
}

TEST(TradeoffJsonTest, RejectsNonConvex) {
  try {
    ParseTradeoffJson(
        R"({"facets": [[0, 1], [0.5, 0.6], [0.6, 0.1], [1, 0]]})");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidTradeoff);
  }
}

TEST(ReadFileTest, Missing) {
  try {
    ReadFile(kFixtures + "/does-not-exist.json");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFileNotFound);
  }
}

TEST(EmitTest, Csv) {
  const TradeoffFunction f = EpsDeltaTradeoff(EpsDelta::Create(1, 0.1));
  const std::string csv = EmitCsv(f, 0);
  EXPECT_EQ(csv.rfind("alpha,beta\n", 0), 0u);
  EXPECT_NE(csv.find("\n0.9,0\n"), std::string::npos);
  EXPECT_EQ(CountOf(csv, "\n"), 5);
  const std::string sampled = EmitCsv(f, 11);
  EXPECT_NE(sampled.find("\n0.5,"), std::string::npos);
  // Facets at 0, 0.9 and 1 coincide with sample rows.
  EXPECT_EQ(CountOf(sampled, "\n"), 1 + 11 + 1);
  EXPECT_EQ(CountOf(EmitCsv(TradeoffFunction::Zero(), 0), "\n"), 3);
}

TEST(EmitTest, Svg) {
  const TradeoffFunction f = EpsDeltaTradeoff(EpsDelta::Create(1, 0.1));
  const std::string svg = EmitSvg({f, TradeoffFunction::Identity()});
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(CountOf(svg, "<svg "), 1);
  EXPECT_EQ(CountOf(svg, "<polyline"), 2);
  EXPECT_NE(svg.find(">0.25<"), std::string::npos);
  EXPECT_NE(svg.find(">0.75<"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(CountOf(EmitProfile(f, "svg"), "<polyline"), 1);
}

TEST(EmitTest, FacetsJsonAndUnknownFormat) {
  const TradeoffFunction f = EpsDeltaTradeoff(EpsDelta::Create(1, 0.1));
  const nlohmann::json doc =
      nlohmann::json::parse(EmitProfile(f, "facets-json"));
  ASSERT_EQ(doc["facets"].size(), 4u);
  EXPECT_DOUBLE_EQ(doc["facets"][2][0].get<double>(), 0.9);
  try {
    EmitProfile(f, "png");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownFormat);
  }
}

}  // namespace
}  // namespace fdpqif
