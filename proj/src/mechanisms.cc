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

#include "fdpqif/mechanisms.h"

#include <algorithm>
#include <cmath>

#include "fdpqif/canonical.h"
#include "fdpqif/compose.h"
#include "fdpqif/tradeoff.h"

namespace fdpqif {
namespace {

std::vector<std::string> IndexLabels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

double Slope(const Facet& a, const Facet& b) {
  return (b.beta - a.beta) / (b.alpha - a.alpha);
}

}  // namespace

EpsDelta EpsDelta::Create(double eps, double delta) {
  return Create(ExtendedReal::Finite(eps), delta);
}

EpsDelta EpsDelta::Create(ExtendedReal eps, double delta) {
  if (!(delta >= 0 && delta <= 1)) {
    throw Error(ErrorCode::kDomain, "delta must lie in [0, 1]");
  }
  return {eps, delta};
}

TradeoffFunction EpsDeltaTradeoff(const EpsDelta& ed,
                                  const NumericPolicy& policy) {
  const ExtendedReal growth = ed.eps.Exp();
  if (growth.is_infinite()) return TradeoffFunction::Zero();
  const double e = growth.value();
  const double d = ed.delta;
  auto f = [&](double a) {
    return std::max({0.0, 1 - d - e * a, (1 - d - a) / e});
  };
  const double knee = (1 - d) / (e + 1);
  return TradeoffFunction::FromPoints(
      {{0, f(0)}, {knee, f(knee)}, {1 - d, 0}, {1, 0}}, policy);
}

Channel2 CanonicalEpsDelta(const EpsDelta& ed, const NumericPolicy& policy) {
  return ChannelOf(EpsDeltaTradeoff(ed, policy), policy);
}

Channel2 RandomResponse(const ExtendedReal& eps, const NumericPolicy& policy) {
  return CanonicalEpsDelta({eps, 0}, policy);
}

Channel2 UniformChannel(const std::vector<std::string>& labels,
                        const NumericPolicy& policy) {
  if (labels.empty()) {
    throw Error(ErrorCode::kEmptySupport, "uniform channel needs a label");
  }
  const std::vector<double> row(labels.size(), 1.0 / labels.size());
  return Channel2::Create(labels, row, row, policy);
}

Channel2 UniformChannel(std::size_t n, const NumericPolicy& policy) {
  return UniformChannel(IndexLabels(n), policy);
}

GeneralChannel TruncatedGeometric(std::size_t n, double eps_p,
                                  const NumericPolicy& policy) {
  if (n < 2) throw Error(ErrorCode::kDomain, "geometric noise needs n >= 2");
  if (!(eps_p > 0)) throw Error(ErrorCode::kDomain, "eps_p must be > 0");
  const double t = std::exp(-eps_p);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double dist = i > j ? double(i - j) : double(j - i);
      if (j == 0) {
        rows[i][j] = std::pow(t, double(i)) / (1 + t);
      } else if (j == n - 1) {
        rows[i][j] = std::pow(t, double(n - 1 - i)) / (1 + t);
      } else {
        rows[i][j] = (1 - t) / (1 + t) * std::pow(t, dist);
      }
    }
  }
  return GeneralChannel::Create(IndexLabels(n), std::move(rows), policy);
}

GeneralChannel SubsamplePoisson(double gamma, const NumericPolicy& policy) {
  if (!(gamma >= 0 && gamma <= 1)) {
    throw Error(ErrorCode::kDomain, "gamma must lie in [0, 1]");
  }
  return GeneralChannel::Create({{1, 0}, {1 - gamma, gamma}}, policy);
}

double EpsDeltaDeltaAt(const Channel2& m, const ExtendedReal& eps) {
  const ExtendedReal growth = eps.Exp();
  double forward = 0;
  double backward = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double p = m.p()[i];
    const double q = m.q()[i];
    if (growth.is_infinite()) {
      if (q == 0) forward += p;
      if (p == 0) backward += q;
    } else {
      forward += std::max(p - growth.value() * q, 0.0);
      backward += std::max(q - growth.value() * p, 0.0);
    }
  }
  return std::max(forward, backward);
}

bool SatisfiesFdp(const Channel2& m, const TradeoffFunction& f,
                  const NumericPolicy& policy) {
  return TradeoffLeq(f, TradeoffOf(m, policy), policy);
}

std::optional<double> PureDpExtract(const TradeoffFunction& f,
                                    const NumericPolicy& policy) {
  const std::vector<Facet>& pts = f.facets();
  const std::size_t n = pts.size();
  if (std::abs(pts[0].beta - 1) > policy.tau) return std::nullopt;
  if (pts[n - 2].beta <= policy.tau) return std::nullopt;
  const double first = -Slope(pts[0], pts[1]);
  const double last = -Slope(pts[n - 2], pts[n - 1]);
  return std::log(std::max(first, 1 / last));
}

bool IsSymmetric(const TradeoffFunction& f, const NumericPolicy& policy) {
  const Channel2 c = ChannelOf(f, policy);
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (std::abs(c.p()[i] - c.q()[k - 1 - i]) > policy.tau) return false;
  }
  return true;
}

SymmetricDecomposition SymmetricDecompose(const TradeoffFunction& f,
                                          const NumericPolicy& policy) {
  if (!IsSymmetric(f, policy)) {
    throw Error(ErrorCode::kNotSymmetric,
                "canonical channel is not mirror symmetric");
  }
  const Channel2 c = ChannelOf(f, policy);
  const std::size_t k = c.size();
  SymmetricDecomposition out;
  for (std::size_t lo = 0; lo < (k + 1) / 2; ++lo) {
    const std::size_t hi = k - 1 - lo;
    if (lo == hi) {
      out.parts.push_back({ExtendedReal::Finite(0), c.p()[lo]});
      break;
    }
    const double weight = c.p()[lo] + c.p()[hi];
    const ExtendedReal eps =
        c.p()[hi] == 0 ? ExtendedReal::Infinity()
                       : ExtendedReal::Finite(std::log(c.q()[hi] / c.p()[hi]));
    out.parts.push_back({eps, weight});
  }
  return out;
}

Channel2 ReconstructFromDecomposition(
    const SymmetricDecomposition& decomposition, const NumericPolicy& policy) {
  std::optional<Channel2> acc;
  double acc_weight = 0;
  for (const SymmetricDecomposition::Part& part : decomposition.parts) {
    if (part.weight <= 0) continue;
    const Channel2 piece = RandomResponse(part.eps, policy);
    if (!acc) {
      acc = piece;
    } else {
      acc = VisibleChoice(*acc, piece, acc_weight / (acc_weight + part.weight),
                          policy);
    }
    acc_weight += part.weight;
  }
  if (!acc) throw Error(ErrorCode::kDomain, "decomposition has no weight");
  return CanonicalSort(*acc, policy);
}

}  // namespace fdpqif
