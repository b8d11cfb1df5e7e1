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

// Canonical channels of trade-off functions, refinement decisions, greatest
// lower bounds and the lattice operations on trade-off functions.

#ifndef FDPQIF_CANONICAL_H_
#define FDPQIF_CANONICAL_H_

#include <vector>

#include "fdpqif/core.h"

namespace fdpqif {

// The least-informative channel whose trade-off function is f: one column
// per facet segment plus the column [alpha_0; 1 - f(alpha_0)]. The result
// is in canonical form with labels taken from the segment index.
Channel2 ChannelOf(const TradeoffFunction& f,
                   const NumericPolicy& policy = kDefaultPolicy);

// C refines-to M (M is a post-processing of C), decided by trade-off
// dominance.
bool RefinementLeq(const Channel2& c, const Channel2& m,
                   const NumericPolicy& policy = kDefaultPolicy);

// Closed-form refinement test for 2x2 channels: true iff a refines-to
// a_prime. Columns are reoriented so the first has the lower ratio.
bool Refine2x2Check(const Channel2& a, const Channel2& a_prime,
                    const NumericPolicy& policy = kDefaultPolicy);

// a refines-to b for partial channels with at most two informative columns
// and a common centroid.
bool PartialLeq(const PartialChannel2& a, const PartialChannel2& b,
                const NumericPolicy& policy = kDefaultPolicy);

// Greatest lower bound of two incomparable partial channels with the same
// row sums: [lowest-ratio column, remainder, highest-ratio column].
// Throws kCentroidMismatch, kNotIncomparable, kDimensionMismatch (more than
// two informative columns).
PartialChannel2 Glb2(const PartialChannel2& a, const PartialChannel2& r,
                     const NumericPolicy& policy = kDefaultPolicy);

// Greatest lower bound of finitely many channels with at most two
// informative columns each, by repeatedly peeling the most extreme column.
// The result is in canonical form.
Channel2 GlbFinite(const std::vector<Channel2>& channels,
                   const NumericPolicy& policy = kDefaultPolicy);
PartialChannel2 GlbFinite(const std::vector<PartialChannel2>& channels,
                          const NumericPolicy& policy = kDefaultPolicy);

// Lower convex envelope of min(f, g).
TradeoffFunction TradeoffMin(const TradeoffFunction& f,
                             const TradeoffFunction& g,
                             const NumericPolicy& policy = kDefaultPolicy);

// Pointwise max(f, g), including crossing points.
TradeoffFunction TradeoffMax(const TradeoffFunction& f,
                             const TradeoffFunction& g,
                             const NumericPolicy& policy = kDefaultPolicy);

}  // namespace fdpqif

#endif  // FDPQIF_CANONICAL_H_
