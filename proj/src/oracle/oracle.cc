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

#include "fdpqif/oracle/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>

namespace fdpqif::oracle {
namespace {

constexpr double kSameAlpha = 1e-12;

// Half the positive part of q - h p summed over columns; h < 0 means inf.
double Vulnerability(const Channel2& m, double h) {
  double sum = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    double gain;
    if (h < 0) {
      gain = m.p()[i] == 0 ? m.q()[i] : 0;
    } else {
      gain = m.q()[i] - h * m.p()[i];
    }
    if (gain > 0) sum += gain;
  }
  return 0.5 * sum;
}

}  // namespace

std::vector<Facet> OracleTradeoffHull(const Channel2& m) {
  const std::size_t n = m.size();
  if (n > kMaxOracleColumns) {
    throw Error(ErrorCode::kTooLarge,
                "oracle enumeration capped at 20 columns");
  }
  // Lowest beta per distinct alpha over all subset tests.
  std::map<double, double> lowest;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double alpha = 0;
    double caught = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        alpha += m.p()[i];
        caught += m.q()[i];
      }
    }
    alpha = std::min(alpha, 1.0);
    const double beta = std::max(0.0, 1 - caught);
    auto [it, inserted] = lowest.emplace(alpha, beta);
    if (!inserted) it->second = std::min(it->second, beta);
  }
  lowest[1.0] = 0;
  // Subset sums that differ only by rounding describe the same test.
  std::vector<Facet> pts;
  for (const auto& [alpha, beta] : lowest) {
    if (!pts.empty() && alpha - pts.back().alpha <= kSameAlpha) {
      pts.back().alpha = alpha;
      pts.back().beta = std::min(pts.back().beta, beta);
    } else {
      pts.push_back({alpha, beta});
    }
  }

  // Gift wrapping: from the current vertex take the flattest-descending
  // chord to any point further right, preferring the farthest on ties.
  std::vector<Facet> hull = {pts.front()};
  std::size_t at = 0;
  while (at + 1 < pts.size()) {
    std::size_t best = at + 1;
    double best_slope = std::numeric_limits<double>::infinity();
    for (std::size_t j = at + 1; j < pts.size(); ++j) {
      const double slope =
          (pts[j].beta - pts[at].beta) / (pts[j].alpha - pts[at].alpha);
      if (slope <= best_slope) {
        best_slope = slope;
        best = j;
      }
    }
    hull.push_back(pts[best]);
    at = best;
  }
  return hull;
}

double OracleEvaluate(const std::vector<Facet>& hull, double alpha) {
  if (alpha <= hull.front().alpha) return hull.front().beta;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    if (alpha <= hull[i].alpha) {
      const Facet& a = hull[i - 1];
      const Facet& b = hull[i];
      return a.beta +
             (b.beta - a.beta) * (alpha - a.alpha) / (b.alpha - a.alpha);
    }
  }
  return hull.back().beta;
}

bool OracleRefinement(const Channel2& a, const Channel2& b, double tau) {
  std::vector<double> gains = {0.0, -1.0};
  for (const Channel2* m : {&a, &b}) {
    for (std::size_t i = 0; i < m->size(); ++i) {
      if (m->p()[i] > 0) gains.push_back(m->q()[i] / m->p()[i]);
    }
  }
  for (double h : gains) {
    if (Vulnerability(b, h) > Vulnerability(a, h) + tau) return false;
  }
  return true;
}

}  // namespace fdpqif::oracle
