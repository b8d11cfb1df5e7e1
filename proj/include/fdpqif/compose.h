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

// Channel compositions and the privacy profiles they induce.

#ifndef FDPQIF_COMPOSE_H_
#define FDPQIF_COMPOSE_H_

#include <vector>

#include "fdpqif/core.h"

namespace fdpqif {

// Independent runs of both channels; output labels are "(y,z)".
Channel2 Parallel(const Channel2& c, const Channel2& m,
                  const NumericPolicy& policy = kDefaultPolicy);

// Runs c with probability r and m otherwise, revealing which one ran.
// Shared labels are disambiguated with "L." and "R." prefixes.
Channel2 VisibleChoice(const Channel2& c, const Channel2& m, double r,
                       const NumericPolicy& policy = kDefaultPolicy);

// Runs c with probability r and m otherwise over the union of both label
// sets; labels missing from one operand count as zero columns there.
Channel2 HiddenChoice(const Channel2& c, const Channel2& m, double r,
                      const NumericPolicy& policy = kDefaultPolicy);

// p (2 x k) times m (k x n). Throws kDimensionMismatch.
Channel2 Preprocess(const GeneralChannel& p, const GeneralChannel& m,
                    const NumericPolicy& policy = kDefaultPolicy);

// m times w (|m| x n). Throws kDimensionMismatch.
Channel2 Postprocess(const Channel2& m, const GeneralChannel& w,
                     const NumericPolicy& policy = kDefaultPolicy);

// General matrix product, validated as row-stochastic.
GeneralChannel Multiply(const GeneralChannel& a, const GeneralChannel& b,
                        const NumericPolicy& policy = kDefaultPolicy);

// Tight profile of c || m for any c, m with profiles at least f and g,
// computed on the canonical channels of f and g.
TradeoffFunction ParallelProfileBound(
    const TradeoffFunction& f, const TradeoffFunction& g,
    const NumericPolicy& policy = kDefaultPolicy);

// Lower envelope of T(f^a || g^b) over facet abscissae of f and g plus
// grid_n uniform levels. This is not a lower bound of the parallel profile
// in general; it is provided for comparison.
TradeoffFunction ParallelGridMeet(const TradeoffFunction& f,
                                  const TradeoffFunction& g, int grid_n,
                                  const NumericPolicy& policy = kDefaultPolicy);

// Exact profile of the visible choice of the canonical channels of f and g.
TradeoffFunction VisibleChoiceProfile(
    const TradeoffFunction& f, const TradeoffFunction& g, double r,
    const NumericPolicy& policy = kDefaultPolicy);

// Points (r a + (1-r) a', r f(a) + (1-r) g(a')) where a and a' are the
// error levels of the canonical channels of f and g at a common gain h,
// for every h in {0, inf} and every facet slope of f and g.
std::vector<Facet> VisibleChoiceLevelPoints(
    const TradeoffFunction& f, const TradeoffFunction& g, double r,
    const NumericPolicy& policy = kDefaultPolicy);

// Right-hand side of the rewrite
//   (c (+)_p d) [+]_r e  ==  c (+)_{rp} (d [+]_{r(1-p)/(r(1-p)+1-r)} e)
// for d, e over one label set and c over a disjoint one.
Channel2 RewriteVisibleHidden(const Channel2& c, const Channel2& d,
                              const Channel2& e, double p, double r,
                              const NumericPolicy& policy = kDefaultPolicy);

}  // namespace fdpqif

#endif  // FDPQIF_COMPOSE_H_
