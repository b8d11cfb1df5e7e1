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

// Brute-force reference implementations for tests. Nothing here calls into
// the trade-off or refinement code of the main library.

#ifndef FDPQIF_ORACLE_ORACLE_H_
#define FDPQIF_ORACLE_ORACLE_H_

#include <vector>

#include "fdpqif/core.h"

namespace fdpqif::oracle {

inline constexpr std::size_t kMaxOracleColumns = 20;

// Lower convex hull of the error pairs of all 2^n deterministic tests,
// as hull vertices sorted by alpha. Throws kTooLarge above 20 columns.
std::vector<Facet> OracleTradeoffHull(const Channel2& m);

// Linear interpolation on a hull returned by OracleTradeoffHull.
double OracleEvaluate(const std::vector<Facet>& hull, double alpha);

// A refines-to B, decided by V_h(B) <= V_h(A) + tau for h in {0, inf} and
// every column ratio of A and B.
bool OracleRefinement(const Channel2& a, const Channel2& b, double tau = 1e-9);

}  // namespace fdpqif::oracle

#endif  // FDPQIF_ORACLE_ORACLE_H_
