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

#include "fdpqif/compose.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "fdpqif/canonical.h"
#include "fdpqif/tradeoff.h"

namespace fdpqif {
namespace {

void CheckProbability(double r) {
  if (!(r >= 0 && r <= 1)) {
    throw Error(ErrorCode::kDomain, "mixing weight must lie in [0, 1]");
  }
}

Channel2 LevelChannel(const TradeoffFunction& f, double alpha,
                      const NumericPolicy& policy) {
  const double beta = Evaluate(f, alpha, policy);
  return Channel2::Create({1 - alpha, alpha}, {beta, 1 - beta}, policy);
}

std::vector<double> Levels(const TradeoffFunction& f, int grid_n) {
  std::vector<double> xs = f.Abscissae();
  for (int k = 1; k < grid_n; ++k) {
    xs.push_back(static_cast<double>(k) / grid_n);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

Channel2 Parallel(const Channel2& c, const Channel2& m,
                  const NumericPolicy& policy) {
  std::vector<std::string> labels;
  std::vector<double> p;
  std::vector<double> q;
  for (std::size_t y = 0; y < c.size(); ++y) {
    for (std::size_t z = 0; z < m.size(); ++z) {
      labels.push_back("(" + c.labels()[y] + "," + m.labels()[z] + ")");
      p.push_back(c.p()[y] * m.p()[z]);
      q.push_back(c.q()[y] * m.q()[z]);
    }
  }
  return Channel2::Create(std::move(labels), std::move(p), std::move(q),
                          policy);
}

Channel2 VisibleChoice(const Channel2& c, const Channel2& m, double r,
                       const NumericPolicy& policy) {
  CheckProbability(r);
  const std::set<std::string> left(c.labels().begin(), c.labels().end());
  const bool collide =
      std::any_of(m.labels().begin(), m.labels().end(),
                  [&](const std::string& l) { return left.contains(l); });
  std::vector<std::string> labels;
  std::vector<double> p;
  std::vector<double> q;
  for (std::size_t i = 0; i < c.size(); ++i) {
    labels.push_back(collide ? "L." + c.labels()[i] : c.labels()[i]);
    p.push_back(r * c.p()[i]);
    q.push_back(r * c.q()[i]);
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    labels.push_back(collide ? "R." + m.labels()[i] : m.labels()[i]);
    p.push_back((1 - r) * m.p()[i]);
    q.push_back((1 - r) * m.q()[i]);
  }
  return Channel2::Create(std::move(labels), std::move(p), std::move(q),
                          policy);
}

Channel2 HiddenChoice(const Channel2& c, const Channel2& m, double r,
                      const NumericPolicy& policy) {
  CheckProbability(r);
  std::vector<std::string> labels = c.labels();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
  std::vector<double> p(c.size());
  std::vector<double> q(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    p[i] = r * c.p()[i];
    q[i] = r * c.q()[i];
  }
  for (std::size_t j = 0; j < m.size(); ++j) {
    auto [it, inserted] = index.emplace(m.labels()[j], labels.size());
    if (inserted) {
      labels.push_back(m.labels()[j]);
      p.push_back(0);
      q.push_back(0);
    }
    p[it->second] += (1 - r) * m.p()[j];
    q[it->second] += (1 - r) * m.q()[j];
  }
  return Channel2::Create(std::move(labels), std::move(p), std::move(q),
                          policy);
}

GeneralChannel Multiply(const GeneralChannel& a, const GeneralChannel& b,
                        const NumericPolicy& policy) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cannot multiply " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " by " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  std::vector<std::vector<double>> out(a.rows(),
                                       std::vector<double>(b.cols(), 0.0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out[i][j] += x * b.at(k, j);
    }
  }
  return GeneralChannel::Create(b.labels(), std::move(out), policy);
}

Channel2 Preprocess(const GeneralChannel& p, const GeneralChannel& m,
                    const NumericPolicy& policy) {
  if (p.rows() != 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "pre-processor must have two rows");
  }
  return Multiply(p, m, policy).ToChannel2(policy);
}

Channel2 Postprocess(const Channel2& m, const GeneralChannel& w,
                     const NumericPolicy& policy) {
  return Multiply(GeneralChannel::FromChannel2(m), w, policy)
      .ToChannel2(policy);
}

TradeoffFunction ParallelProfileBound(const TradeoffFunction& f,
                                      const TradeoffFunction& g,
                                      const NumericPolicy& policy) {
  return TradeoffOf(
      Parallel(ChannelOf(f, policy), ChannelOf(g, policy), policy), policy);
}

TradeoffFunction ParallelGridMeet(const TradeoffFunction& f,
                                  const TradeoffFunction& g, int grid_n,
                                  const NumericPolicy& policy) {
  if (grid_n < 0) throw Error(ErrorCode::kDomain, "grid_n must be >= 0");
  TradeoffFunction meet = TradeoffFunction::Identity();
  for (double a : Levels(f, grid_n)) {
    const Channel2 fa = LevelChannel(f, a, policy);
    for (double b : Levels(g, grid_n)) {
      const Channel2 gb = LevelChannel(g, b, policy);
      meet = TradeoffMin(meet, TradeoffOf(Parallel(fa, gb, policy), policy),
                         policy);
    }
  }
  return meet;
}

TradeoffFunction VisibleChoiceProfile(const TradeoffFunction& f,
                                      const TradeoffFunction& g, double r,
                                      const NumericPolicy& policy) {
  return TradeoffOf(
      VisibleChoice(ChannelOf(f, policy), ChannelOf(g, policy), r, policy),
      policy);
}

std::vector<Facet> VisibleChoiceLevelPoints(const TradeoffFunction& f,
                                            const TradeoffFunction& g, double r,
                                            const NumericPolicy& policy) {
  CheckProbability(r);
  const Channel2 cf = ChannelOf(f, policy);
  const Channel2 cg = ChannelOf(g, policy);
  std::vector<HockeyStickGain> gains = {HockeyStickGain::Of(0),
                                        HockeyStickGain::Infinite()};
  for (const Channel2* m : {&cf, &cg}) {
    for (std::size_t i = 0; i < m->size(); ++i) {
      if (m->p()[i] > 0) {
        gains.push_back(HockeyStickGain::Of(m->q()[i] / m->p()[i]));
      }
    }
  }
  std::vector<Facet> points;
  for (const HockeyStickGain& gain : gains) {
    const Facet a = ErrOf(cf, gain);
    const Facet b = ErrOf(cg, gain);
    points.push_back({r * a.alpha + (1 - r) * b.alpha,
                      r * Evaluate(f, a.alpha, policy) +
                          (1 - r) * Evaluate(g, b.alpha, policy)});
  }
  return points;
}

Channel2 RewriteVisibleHidden(const Channel2& c, const Channel2& d,
                              const Channel2& e, double p, double r,
                              const NumericPolicy& policy) {
  CheckProbability(p);
  CheckProbability(r);
  const double denom = r * (1 - p) + (1 - r);
  const double inner = denom > 0 ? r * (1 - p) / denom : 1.0;
  return VisibleChoice(c, HiddenChoice(d, e, inner, policy), r * p, policy);
}

}  // namespace fdpqif
