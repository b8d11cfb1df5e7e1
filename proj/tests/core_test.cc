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

#include "fdpqif/core.h"

#include <cmath>
#include <numeric>

#include "fdpqif/mechanisms.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fdpqif {
namespace {

using ::fdpqif::testing::RandomChannel;
using ::fdpqif::testing::RandomTradeoff;
using ::fdpqif::testing::Rng;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kDomain;
}

TEST(ValidateChannelTest, AcceptsUniformRows) {
  const Channel2 c = ValidateChannel({{0.5, 0.5}, {0.5, 0.5}}, {"a", "b"});
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.labels()[1], "b");
}

TEST(ValidateChannelTest, AcceptsCanonicalEpsDeltaMatrix) {
  const double e = std::exp(1.0);
  const double a = 0.9 / (1 + e);
  const Channel2 c = ValidateChannel({{0.1, a * e, a, 0}, {0, a, a * e, 0.1}},
                                     {"0", "1", "2", "3"});
  EXPECT_NEAR(c.p()[1], 0.65795, 1e-5);
  EXPECT_NEAR(c.p()[2], 0.24205, 1e-5);
}

TEST(ValidateChannelTest, RejectsBadRowSum) {
  EXPECT_EQ(
      CodeOf([] { ValidateChannel({{0.6, 0.6}, {0.5, 0.5}}, {"a", "b"}); }),
      ErrorCode::kRowSum);
}

TEST(ValidateChannelTest, RejectsNegativeEntry) {
  EXPECT_EQ(CodeOf([] { Channel2::Create({1.1, -0.1}, {0.5, 0.5}); }),
            ErrorCode::kNegativeEntry);
}

TEST(ValidateChannelTest, ClampsTinyNegatives) {
  const Channel2 c = Channel2::Create({1 + 1e-10, -1e-10}, {0.5, 0.5});
  EXPECT_EQ(c.p()[1], 0.0);
}

TEST(ValidateChannelTest, RejectsDuplicateLabels) {
  EXPECT_EQ(CodeOf([] {
              Channel2::Create(std::vector<std::string>{"x", "x"}, {0.5, 0.5},
                               {0.5, 0.5});
            }),
            ErrorCode::kDuplicateLabel);
}

TEST(ValidateChannelTest, RejectsShapeErrors) {
  EXPECT_EQ(CodeOf([] { ValidateChannel({{1.0}}, {"a"}); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([] { Channel2::Create({}, {}); }),
            ErrorCode::kDimensionMismatch);
}

TEST(GeneralChannelTest, ValidatesEveryRow) {
  EXPECT_NO_THROW(GeneralChannel::Create({{1, 0}, {0.3, 0.7}, {0.5, 0.5}}));
  EXPECT_EQ(CodeOf([] { GeneralChannel::Create({{1, 0}, {0.3, 0.8}}); }),
            ErrorCode::kRowSum);
  EXPECT_EQ(CodeOf([] { GeneralChannel::Create({{1, 0}, {1}}); }),
            ErrorCode::kDimensionMismatch);
}

TEST(PartialChannelTest, ChecksRecordedSums) {
  EXPECT_NO_THROW(PartialChannel2::Create(std::vector<std::string>{"a", "b"},
                                          {0.2, 0.3}, {0.1, 0.1}, 0.5, 0.2));
  EXPECT_EQ(CodeOf([] {
              PartialChannel2::Create(std::vector<std::string>{"a", "b"},
                                      {0.2, 0.3}, {0.1, 0.1}, 0.6, 0.2);
            }),
            ErrorCode::kRowSum);
  const Channel2 n = PartialChannel2::Create(std::vector<std::string>{"a", "b"},
                                             {0.2, 0.3}, {0.1, 0.1}, 0.5, 0.2)
                         .Normalized();
  EXPECT_NEAR(n.p()[0], 0.4, 1e-12);
  EXPECT_NEAR(n.q()[1], 0.5, 1e-12);
}

TEST(NumericPolicyTest, Validates) {
  EXPECT_NO_THROW(kDefaultPolicy.Validate());
  EXPECT_EQ(CodeOf([] { NumericPolicy{1e-2, 1e-3}.Validate(); }),
            ErrorCode::kDomain);
}

TEST(ExtendedRealTest, InfinityIsDistinct) {
  EXPECT_TRUE(ExtendedReal::Infinity().is_infinite());
  EXPECT_TRUE(ExtendedReal::Infinity().Exp().is_infinite());
  EXPECT_FALSE(ExtendedReal::Finite(1e300).is_infinite());
  EXPECT_TRUE(ExtendedReal::Finite(1e300).Exp().is_infinite());
  EXPECT_EQ(ToString(ExtendedReal::Infinity()), "inf");
  EXPECT_EQ(CodeOf([] { ExtendedReal::Finite(-1); }), ErrorCode::kDomain);
}

TEST(LrCompareTest, Examples) {
  EXPECT_EQ(LrCompare({0.1, 0}, {0, 0.1}), std::weak_ordering::less);
  EXPECT_EQ(LrCompare({0.65795, 0.24205}, {0.24205, 0.65795}),
            std::weak_ordering::less);
  EXPECT_EQ(LrCompare({0.2, 0.1}, {0.4, 0.2}), std::weak_ordering::equivalent);
  EXPECT_EQ(LrCompare({0, 0.3}, {0, 0.1}), std::weak_ordering::equivalent);
  EXPECT_EQ(CodeOf([] { LrCompare({0, 0}, {0.1, 0.1}); }),
            ErrorCode::kZeroColumn);
}

TEST(LrCompareTest, TotalPreorderOnRandomTriples) {
  Rng rng(11);
  auto col = [&] {
    return Column{testing::Uniform01(rng) < 0.1 ? 0 : testing::Uniform01(rng),
                  testing::Uniform01(rng) + 0.01};
  };
  for (int i = 0; i < 2000; ++i) {
    const Column a = col(), b = col(), c = col();
    EXPECT_EQ(LrCompare(a, b), 0 <=> (LrCompare(b, a) <=> 0));
    if (LrCompare(a, b) < 0 && LrCompare(b, c) < 0) {
      EXPECT_TRUE(LrCompare(a, c) < 0);
    }
  }
}

TEST(CanonicalSortTest, MergesEqualRatios) {
  const Channel2 c =
      CanonicalSort(Channel2::Create(std::vector<std::string>{"x", "y", "z"},
                                     {0.3, 0.3, 0.4}, {0.15, 0.15, 0.7}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(c.p()[0], 0.6, 1e-12);
  EXPECT_NEAR(c.q()[0], 0.3, 1e-12);
  EXPECT_EQ(c.labels()[0], "x+y");
}

TEST(CanonicalSortTest, EpsDeltaOrderUnchanged) {
  const Channel2 c = CanonicalEpsDelta(EpsDelta::Create(1, 0.1));
  const Channel2 s = CanonicalSort(c);
  EXPECT_TRUE(ChannelsNear(c, s, 0));
  EXPECT_NEAR(s.p()[0], 0.1, 1e-15);
  EXPECT_NEAR(s.q()[3], 0.1, 1e-15);
}

TEST(CanonicalSortTest, SingleColumnIsFixed) {
  const Channel2 c = CanonicalSort(Channel2::Create({1}, {1}));
  EXPECT_EQ(c.size(), 1u);
}

TEST(CanonicalSortTest, DropsZeroColumns) {
  const Channel2 c =
      CanonicalSort(Channel2::Create({0.5, 0, 0.5}, {0.2, 0, 0.8}));
  EXPECT_EQ(c.size(), 2u);
}

TEST(CanonicalSortTest, IdempotentAndStochastic) {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const Channel2 once = CanonicalSort(RandomChannel(rng));
    const Channel2 twice = CanonicalSort(once);
    EXPECT_TRUE(ChannelsNear(once, twice, 1e-9));
    EXPECT_NEAR(std::accumulate(once.p().begin(), once.p().end(), 0.0), 1,
                1e-9);
    EXPECT_NEAR(std::accumulate(once.q().begin(), once.q().end(), 0.0), 1,
                1e-9);
  }
}

TEST(RatioOrderedTest, KeepsEqualRatioColumnsApart) {
  const Channel2 c =
      RatioOrdered(Channel2::Create(std::vector<std::string>{"x", "y", "z"},
                                    {0.4, 0.3, 0.3}, {0.7, 0.15, 0.15}));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.labels()[0], "y");
  EXPECT_EQ(c.labels()[1], "z");
  EXPECT_EQ(c.labels()[2], "x");
}

TEST(EvaluateTest, Examples) {
  const TradeoffFunction f = EpsDeltaTradeoff(EpsDelta::Create(1, 0.1));
  EXPECT_NEAR(Evaluate(f, 0), 0.9, 1e-12);
  EXPECT_NEAR(Evaluate(f, 0.95), 0, 1e-12);
  EXPECT_NEAR(Evaluate(TradeoffFunction::Identity(), 0.3), 0.7, 1e-12);
  EXPECT_EQ(CodeOf([&] { Evaluate(f, 1.5); }), ErrorCode::kDomain);
}

TEST(TradeoffFunctionTest, RandomFunctionsSatisfyInvariants) {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const TradeoffFunction f = RandomTradeoff(rng);
    EXPECT_EQ(Evaluate(f, 1), 0);
    for (int k = 0; k <= 1000; ++k) {
      const double a = k / 1000.0;
      EXPECT_LE(Evaluate(f, a), 1 - a + 1e-9);
    }
  }
}

TEST(TradeoffFunctionTest, FromPointsNormalises) {
  const TradeoffFunction f = TradeoffFunction::FromPoints(
      {{0.5, 0.25}, {0.25, 0.5}, {0.25, 0.6}, {1, 0}, {0.75, 0.125}});
  // (0,1) added; (0.25,0.6) dominated; (0.5,0.25),(0.75,0.125),(1,0) are
  // collinear.
  ASSERT_EQ(f.facets().size(), 4u);
  EXPECT_EQ(f.facets()[0], (Facet{0, 1}));
  EXPECT_EQ(f.facets()[1], (Facet{0.25, 0.5}));
  EXPECT_EQ(f.facets()[2], (Facet{0.5, 0.25}));
  EXPECT_EQ(f.facets()[3], (Facet{1, 0}));
}

TEST(TradeoffFunctionTest, RejectsInvalidShapes) {
  // Concave.
  EXPECT_EQ(CodeOf([] {
              TradeoffFunction::FromPoints(
                  {{0, 0.9}, {0.5, 0.3}, {0.7, 0.2}, {1, 0}});
            }),
            ErrorCode::kInvalidTradeoff);
  // Increasing.
  EXPECT_EQ(CodeOf([] {
              TradeoffFunction::FromPoints({{0, 0.2}, {0.5, 0.3}, {1, 0}});
            }),
            ErrorCode::kInvalidTradeoff);
  // f(1) > 0.
  EXPECT_EQ(CodeOf([] { TradeoffFunction::FromPoints({{0, 1}, {1, 0.1}}); }),
            ErrorCode::kInvalidTradeoff);
  // Above 1 - alpha.
  EXPECT_EQ(CodeOf([] {
              TradeoffFunction::FromPoints({{0, 1}, {0.1, 0.95}, {1, 0}});
            }),
            ErrorCode::kInvalidTradeoff);
}

TEST(TradeoffLeqTest, ChecksUnionOfAbscissae) {
  const TradeoffFunction f = EpsDeltaTradeoff(EpsDelta::Create(2, 0));
  const TradeoffFunction g = EpsDeltaTradeoff(EpsDelta::Create(1, 0));
  EXPECT_TRUE(TradeoffLeq(f, g));
  EXPECT_FALSE(TradeoffLeq(g, f));
  EXPECT_TRUE(TradeoffNear(f, f, 0));
}

}  // namespace
}  // namespace fdpqif
