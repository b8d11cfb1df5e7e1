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

#include <algorithm>
#include <cmath>

namespace fdpqif {
namespace {

// Product check slack for the witness; entries are clamped by up to tau.
constexpr double kWitnessSlack = 100;

std::vector<ExtendedReal> CriticalGains(const Channel2& a, const Channel2& b) {
  std::vector<ExtendedReal> gains = {ExtendedReal::Finite(0),
                                     ExtendedReal::Infinity()};
  for (const Channel2* m : {&a, &b}) {
    for (std::size_t i = 0; i < m->size(); ++i) {
      if (m->p()[i] > 0) {
        gains.push_back(ExtendedReal::Finite(m->q()[i] / m->p()[i]));
      }
    }
  }
  return gains;
}

}  // namespace

TradeoffFunction TradeoffOf(const Channel2& m, const NumericPolicy& policy) {
  const Channel2 sorted = CanonicalSort(m, policy);
  std::vector<Facet> points = {{0, 1}};
  double alpha = 0;
  double mass_q = 0;
  for (std::size_t k = sorted.size(); k-- > 0;) {
    alpha += sorted.p()[k];
    mass_q += sorted.q()[k];
    points.push_back({alpha, 1 - mass_q});
  }
  points.back() = {1, 0};
  return TradeoffFunction::FromPoints(std::move(points), policy);
}

Channel2 TradeoffChannel(const Channel2& m, double alpha,
                         const NumericPolicy& policy) {
  const double beta = Evaluate(TradeoffOf(m, policy), alpha, policy);
  alpha = std::clamp(alpha, 0.0, 1.0);
  return Channel2::Create({1 - alpha, alpha}, {beta, 1 - beta}, policy);
}

Facet ErrOf(const Channel2& m, const HockeyStickGain& gain) {
  double alpha = 0;
  double mass_q = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double p = m.p()[i];
    const double q = m.q()[i];
    // Ratios are compared by division so that a gain read off a column
    // selects that column exactly.
    const bool rejects =
        p == 0 || (!gain.h.is_infinite() && q / p >= gain.h.value());
    if (rejects) {
      alpha += p;
      mass_q += q;
    }
  }
  return {std::min(alpha, 1.0), std::max(0.0, 1 - mass_q)};
}

double HockeyStickVulnerability(const Channel2& m,
                                const HockeyStickGain& gain) {
  double total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double p = m.p()[i];
    const double q = m.q()[i];
    if (gain.h.is_infinite()) {
      if (p == 0) total += q;
    } else {
      total += std::max(q - gain.h.value() * p, 0.0);
    }
  }
  return total / 2;
}

bool HockeyStickLeq(const Channel2& c, const Channel2& m,
                    const NumericPolicy& policy) {
  for (const ExtendedReal& h : CriticalGains(c, m)) {
    const HockeyStickGain gain{h};
    if (HockeyStickVulnerability(c, gain) >
        HockeyStickVulnerability(m, gain) + policy.tau) {
      return false;
    }
  }
  return true;
}

GeneralChannel WitnessForTradeoffRefinement(const Channel2& c_alpha,
                                            const Channel2& m_alpha,
                                            const NumericPolicy& policy) {
  if (c_alpha.size() != 2 || m_alpha.size() != 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "witness synthesis needs two 2x2 channels");
  }
  const double a = c_alpha.p()[0], b = c_alpha.p()[1];
  const double c = c_alpha.q()[0], d = c_alpha.q()[1];
  const std::vector<double>& m0 = m_alpha.p();
  const std::vector<double>& m1 = m_alpha.q();

  std::vector<std::vector<double>> w(2, std::vector<double>(2));
  const double det = a * d - b * c;
  if (std::abs(det) > policy.tau) {
    for (std::size_t j = 0; j < 2; ++j) {
      w[0][j] = (d * m0[j] - b * m1[j]) / det;
      w[1][j] = (a * m1[j] - c * m0[j]) / det;
    }
  } else {
    // Equal rows in c_alpha: only a witness with constant output works.
    if (std::abs(m0[0] - m1[0]) > policy.tau) {
      throw Error(ErrorCode::kNoWitness,
                  "degenerate source cannot produce distinct rows");
    }
    w[0] = m0;
    w[1] = m0;
  }
  for (std::vector<double>& row : w) {
    for (double& x : row) {
      if (x < -policy.tau || x > 1 + policy.tau) {
        throw Error(ErrorCode::kNoWitness,
                    "solved witness entry outside [0, 1]");
      }
      x = std::clamp(x, 0.0, 1.0);
    }
  }
  const double rows[2][2] = {{a, b}, {c, d}};
  const std::vector<double>* targets[2] = {&m0, &m1};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const double product = rows[i][0] * w[0][j] + rows[i][1] * w[1][j];
      if (std::abs(product - (*targets[i])[j]) > kWitnessSlack * policy.tau) {
        throw Error(ErrorCode::kNoWitness, "witness product check failed");
      }
    }
  }
  return GeneralChannel::Create(m_alpha.labels(), std::move(w), policy);
}

}  // namespace fdpqif
