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

#include "fdpqif/tradeoff.h"

#include <cmath>

#include "fdpqif/canonical.h"
#include "fdpqif/compose.h"
#include "fdpqif/mechanisms.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fdpqif {
namespace {

using ::fdpqif::testing::RandomChannel;
using ::fdpqif::testing::RandomStochastic;
using ::fdpqif::testing::Rng;

constexpr double kTau = 1e-9;
constexpr double kReport = 1e-3;

Channel2 C1() { return CanonicalEpsDelta(EpsDelta::Create(1, 0.1)); }

// The two 2x2 channels of the worked significance-level example.
Channel2 ExampleC() { return Channel2::Create({0.9, 0.1}, {0.5, 0.5}); }
Channel2 ExampleM() { return Channel2::Create({0.9, 0.1}, {0.8, 0.2}); }

TEST(TradeoffOfTest, EpsDeltaFacets) {
  const TradeoffFunction profile = TradeoffOf(C1());
  const std::vector<Facet>& f = profile.facets();
  ASSERT_EQ(f.size(), 4u);
  EXPECT_NEAR(f[0].alpha, 0, kReport);
  EXPECT_NEAR(f[0].beta, 0.9, kReport);
  EXPECT_NEAR(f[1].alpha, 0.24198, kReport);
  EXPECT_NEAR(f[1].beta, 0.24198, kReport);
  EXPECT_NEAR(f[2].alpha, 0.9, kReport);
  EXPECT_NEAR(f[2].beta, 0, kReport);
  EXPECT_EQ(f[3], (Facet{1, 0}));
}

TEST(TradeoffOfTest, SingleColumnIsIdentity) {
  const TradeoffFunction f = TradeoffOf(Channel2::Create({1}, {1}));
  EXPECT_EQ(f.facets(), TradeoffFunction::Identity().facets());
}

TEST(TradeoffOfTest, TwoColumnExample) {
  // Deterministic tests: {} -> (0,1), {0} -> (0.5,0.2), {1} -> (0.5,0.8),
  // {0,1} -> (1,0). Hull: (0,1), (0.5,0.2), (1,0).
  const TradeoffFunction f =
      TradeoffOf(Channel2::Create({0.5, 0.5}, {0.8, 0.2}));
  ASSERT_EQ(f.facets().size(), 3u);
  EXPECT_NEAR(f.facets()[1].alpha, 0.5, kTau);
  EXPECT_NEAR(f.facets()[1].beta, 0.2, kTau);
}

TEST(TradeoffOfTest, InvariantUnderPermutationAndSplitting) {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const Channel2 m = RandomChannel(rng, 2, 6);
    std::vector<std::size_t> order(m.size());
    for (std::size_t k = 0; k < order.size(); ++k)
      order[k] = order.size() - 1 - k;
    EXPECT_TRUE(
        TradeoffNear(TradeoffOf(m), TradeoffOf(m.Permuted(order)), kTau));
    std::vector<std::string> labels = m.labels();
    std::vector<double> p = m.p();
    std::vector<double> q = m.q();
    labels.push_back("split");
    p.push_back(p[0] / 2);
    q.push_back(q[0] / 2);
    p[0] /= 2;
    q[0] /= 2;
    EXPECT_TRUE(TradeoffNear(TradeoffOf(m),
                             TradeoffOf(Channel2::Create(labels, p, q)), kTau));
  }
}

TEST(TradeoffChannelTest, Examples) {
  const Channel2 m = TradeoffChannel(ExampleM(), 0.1);
  EXPECT_NEAR(m.p()[0], 0.9, kTau);
  EXPECT_NEAR(m.q()[0], 0.8, kTau);
  const Channel2 end = TradeoffChannel(C1(), 1);
  EXPECT_NEAR(end.p()[1], 1, kTau);
  EXPECT_NEAR(end.q()[1], 1, kTau);
  const Channel2 start = TradeoffChannel(C1(), 0);
  EXPECT_NEAR(start.q()[0], 0.9, kTau);
  EXPECT_NEAR(start.q()[1], 0.1, kTau);
  EXPECT_THROW(TradeoffChannel(C1(), -0.5), Error);
}

TEST(ErrOfTest, Examples) {
  const Facet at1 = ErrOf(C1(), HockeyStickGain::Of(1));
  EXPECT_NEAR(at1.alpha, 0.2420, kReport);
  EXPECT_NEAR(at1.beta, 0.2420, kReport);
  Rng rng(3);
  const Facet at0 = ErrOf(RandomChannel(rng), HockeyStickGain::Of(0));
  EXPECT_NEAR(at0.alpha, 1, kTau);
  EXPECT_NEAR(at0.beta, 0, kTau);
  const Channel2 reveal =
      CanonicalEpsDelta(EpsDelta::Create(ExtendedReal::Infinity(), 0));
  for (double h : {0.5, 1.0, 4.0}) {
    const Facet e = ErrOf(reveal, HockeyStickGain::Of(h));
    EXPECT_EQ(e.alpha, 0);
    EXPECT_EQ(e.beta, 0);
  }
}

TEST(ErrOfTest, LiesOnTradeoffAtCriticalGains) {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const Channel2 m = RandomChannel(rng);
    const TradeoffFunction f = TradeoffOf(m);
    std::vector<HockeyStickGain> gains = {HockeyStickGain::Of(0),
                                          HockeyStickGain::Infinite()};
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m.p()[k] > 0)
        gains.push_back(HockeyStickGain::Of(m.q()[k] / m.p()[k]));
    }
    for (const HockeyStickGain& g : gains) {
      const Facet e = ErrOf(m, g);
      EXPECT_NEAR(Evaluate(f, e.alpha), e.beta, kTau);
      if (!g.h.is_infinite()) {
        // The vulnerability reads off the same point.
        EXPECT_NEAR(HockeyStickVulnerability(m, g),
                    0.5 * (1 - e.beta - g.h.value() * e.alpha), kTau);
      }
    }
  }
}

TEST(HockeyStickVulnerabilityTest, Examples) {
  Rng rng(23);
  const Channel2 m = RandomChannel(rng);
  EXPECT_NEAR(HockeyStickVulnerability(m, HockeyStickGain::Of(0)), 0.5, kTau);
  const Channel2 fig = Channel2::Create({0.4, 0.6}, {0.8, 0.2});
  EXPECT_NEAR(HockeyStickVulnerability(fig, HockeyStickGain::Of(1)), 0.2, kTau);
  EXPECT_NEAR(HockeyStickVulnerability(C1(), HockeyStickGain::Of(std::exp(1))),
              0.05, kTau);
  EXPECT_NEAR(HockeyStickVulnerability(C1(), HockeyStickGain::Infinite()), 0.05,
              kTau);
}

TEST(HockeyStickLeqTest, Examples) {
  EXPECT_TRUE(HockeyStickLeq(C1(), C1()));
  const Channel2 ca = TradeoffChannel(ExampleC(), 0.1);
  const Channel2 ma = TradeoffChannel(ExampleM(), 0.1);
  EXPECT_TRUE(HockeyStickLeq(ma, ca));
  EXPECT_FALSE(HockeyStickLeq(ca, ma));
}

TEST(HockeyStickLeqTest, MatchesRefinementWithOrderSwap) {
  Rng rng(24);
  int refined = 0;
  for (int i = 0; i < 500; ++i) {
    const Channel2 c = RandomChannel(rng);
    const Channel2 m = i % 2 == 0
                           ? Postprocess(c, RandomStochastic(rng, c.size(), 3))
                           : RandomChannel(rng);
    const bool h = HockeyStickLeq(m, c);
    EXPECT_EQ(h, RefinementLeq(c, m));
    refined += h;
  }
  EXPECT_GT(refined, 250);
}

TEST(HockeyStickLeqTest, RefinementImpliesTradeoffDominance) {
  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const Channel2 c = RandomChannel(rng);
    const Channel2 m = Postprocess(c, RandomStochastic(rng, c.size(), 4));
    ASSERT_TRUE(RefinementLeq(c, m));
    EXPECT_TRUE(testing::LeqAt(TradeoffOf(c), TradeoffOf(m), kTau));
  }
}

TEST(WitnessTest, IdentityForEqualChannels) {
  const Channel2 ca = TradeoffChannel(ExampleC(), 0.1);
  const GeneralChannel w = WitnessForTradeoffRefinement(ca, ca);
  EXPECT_NEAR(w.at(0, 0), 1, kTau);
  EXPECT_NEAR(w.at(1, 1), 1, kTau);
}

TEST(WitnessTest, SolvesWorkedExample) {
  const Channel2 ca = ExampleC();
  const Channel2 ma = ExampleM();
  const GeneralChannel w = WitnessForTradeoffRefinement(ca, ma);
  const Channel2 product = Postprocess(ca, w);
  EXPECT_TRUE(ChannelsNear(product, ma, kTau));
}

TEST(WitnessTest, RandomTradeoffChannels) {
  Rng rng(26);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const Channel2 c = RandomChannel(rng);
    const Channel2 m = RandomChannel(rng);
    const double alpha = testing::Uniform01(rng);
    const Channel2 ca = TradeoffChannel(c, alpha);
    const Channel2 ma = TradeoffChannel(m, alpha);
    const bool dominated =
        Evaluate(TradeoffOf(c), alpha) <= Evaluate(TradeoffOf(m), alpha);
    if (dominated) {
      const GeneralChannel w = WitnessForTradeoffRefinement(ca, ma);
      EXPECT_TRUE(ChannelsNear(Postprocess(ca, w), ma, 1e-7));
    } else {
      EXPECT_THROW(WitnessForTradeoffRefinement(ca, ma), Error);
      ++failures;
    }
  }
  EXPECT_GT(failures, 0);
}

}  // namespace
}  // namespace fdpqif
