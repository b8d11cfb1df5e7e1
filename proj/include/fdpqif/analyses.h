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

// End-to-end profiles for purification and Poisson sub-sampling.

#ifndef FDPQIF_ANALYSES_H_
#define FDPQIF_ANALYSES_H_

#include <optional>
#include <string>
#include <vector>

#include "fdpqif/core.h"
#include "fdpqif/mechanisms.h"

namespace fdpqif {

struct PurifyResult {
  // m mixed with uniform noise over the support.
  Channel2 hidden;
  // `hidden` in ascending likelihood-ratio order; indexes the noise.
  Channel2 ordered;
  // `ordered` after truncated geometric noise.
  Channel2 z;
  TradeoffFunction profile;
  std::optional<double> pure_eps;
};

// Purification: with probability 1 - r replace the output of m by a
// uniform draw from `support`, then add geometric noise with parameter
// eps_p over the ratio-ordered outputs. Throws kEmptySupport.
PurifyResult PurifyProfile(const Channel2& m, double r,
                           const std::vector<std::string>& support,
                           double eps_p,
                           const NumericPolicy& policy = kDefaultPolicy);

// The same pipeline for m = c (+)_p d with support inside the labels of d,
// where the mixing stage is built by the visible/hidden rewrite instead.
// Throws kEmptySupport, and kDomain if the support leaves d's labels.
PurifyResult PurifyProfileByRewrite(
    const Channel2& c, const Channel2& d, double p, double r,
    const std::vector<std::string>& support, double eps_p,
    const NumericPolicy& policy = kDefaultPolicy);

struct SubsampleResult {
  Channel2 channel;
  TradeoffFunction profile;
};

// Canonical (eps, delta) channel behind Poisson sub-sampling with rate
// gamma.
SubsampleResult SubsampleProfile(const EpsDelta& ed, double gamma,
                                 const NumericPolicy& policy = kDefaultPolicy);

// Sub-sampled profile minus f_{eps,delta} at alpha.
double AmplificationGap(const EpsDelta& ed, double gamma, double alpha,
                        const NumericPolicy& policy = kDefaultPolicy);

}  // namespace fdpqif

#endif  // FDPQIF_ANALYSES_H_
