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

// Closed-form mechanisms and (epsilon, delta) parameter extraction.

#ifndef FDPQIF_MECHANISMS_H_
#define FDPQIF_MECHANISMS_H_

#include <optional>
#include <string>
#include <vector>

#include "fdpqif/core.h"

namespace fdpqif {

struct EpsDelta {
  ExtendedReal eps = ExtendedReal::Finite(0);
  double delta = 0;

  // Throws kDomain unless eps >= 0 (inf allowed) and delta in [0, 1].
  static EpsDelta Create(double eps, double delta);
  static EpsDelta Create(ExtendedReal eps, double delta);
};

// A visible mixture of pure randomised-response channels.
struct SymmetricDecomposition {
  struct Part {
    ExtendedReal eps;
    double weight;
  };
  // Ordered by decreasing eps.
  std::vector<Part> parts;
};

// max(0, 1 - delta - e^eps a, e^-eps (1 - delta - a)); the zero function
// for eps = inf.
TradeoffFunction EpsDeltaTradeoff(const EpsDelta& ed,
                                  const NumericPolicy& policy = kDefaultPolicy);

// Canonical channel of EpsDeltaTradeoff(ed).
Channel2 CanonicalEpsDelta(const EpsDelta& ed,
                           const NumericPolicy& policy = kDefaultPolicy);

// Two-output randomised response with ratio e^eps (identity for inf, a
// single column for 0).
Channel2 RandomResponse(const ExtendedReal& eps,
                        const NumericPolicy& policy = kDefaultPolicy);

// Both rows uniform over `labels` (or over "0".."n-1").
Channel2 UniformChannel(const std::vector<std::string>& labels,
                        const NumericPolicy& policy = kDefaultPolicy);
Channel2 UniformChannel(std::size_t n,
                        const NumericPolicy& policy = kDefaultPolicy);

// n x n geometric noise with t = e^-eps_p, tail mass folded into the first
// and last columns. Throws kDomain unless n >= 2 and eps_p > 0.
GeneralChannel TruncatedGeometric(std::size_t n, double eps_p,
                                  const NumericPolicy& policy = kDefaultPolicy);

// [[1, 0], [1 - gamma, gamma]].
GeneralChannel SubsamplePoisson(double gamma,
                                const NumericPolicy& policy = kDefaultPolicy);

// Smallest delta for which m is (eps, delta)-private in both directions.
double EpsDeltaDeltaAt(const Channel2& m, const ExtendedReal& eps);

// f <= T(m) at the union of facet abscissae.
bool SatisfiesFdp(const Channel2& m, const TradeoffFunction& f,
                  const NumericPolicy& policy = kDefaultPolicy);

// Smallest eps with f_{eps,0} <= f, if f(0) = 1 and f > 0 on [0, 1).
std::optional<double> PureDpExtract(
    const TradeoffFunction& f, const NumericPolicy& policy = kDefaultPolicy);

// True if the canonical channel of f is mirror symmetric under swapping
// rows and reversing columns.
bool IsSymmetric(const TradeoffFunction& f,
                 const NumericPolicy& policy = kDefaultPolicy);

// Splits the canonical channel of a symmetric f into pure randomised
// responses. Throws kNotSymmetric.
SymmetricDecomposition SymmetricDecompose(
    const TradeoffFunction& f, const NumericPolicy& policy = kDefaultPolicy);

// Visible mixture of the parts, in canonical form.
Channel2 ReconstructFromDecomposition(
    const SymmetricDecomposition& decomposition,
    const NumericPolicy& policy = kDefaultPolicy);

}  // namespace fdpqif

#endif  // FDPQIF_MECHANISMS_H_
