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

// Trade-off functions of channels, error functions and hockey-stick
// vulnerabilities.

#ifndef FDPQIF_TRADEOFF_H_
#define FDPQIF_TRADEOFF_H_

#include "fdpqif/core.h"

namespace fdpqif {

// Gain function rewarding a correct guess of secret 1 with 1, penalising a
// wrong one with -h and paying 0 for guessing secret 0.
struct HockeyStickGain {
  ExtendedReal h = ExtendedReal::Finite(0);

  static HockeyStickGain Of(double h) { return {ExtendedReal::Finite(h)}; }
  static HockeyStickGain Infinite() { return {ExtendedReal::Infinity()}; }
};

// Optimal (alpha, beta) error curve of the Neyman-Pearson tests on M.
TradeoffFunction TradeoffOf(const Channel2& m,
                            const NumericPolicy& policy = kDefaultPolicy);

// [[1-alpha, alpha], [f(alpha), 1-f(alpha)]] with f = TradeoffOf(m).
// Throws kDomain for alpha outside [0, 1].
Channel2 TradeoffChannel(const Channel2& m, double alpha,
                         const NumericPolicy& policy = kDefaultPolicy);

// Error pair of the test that rejects on every column with q - h p >= 0.
Facet ErrOf(const Channel2& m, const HockeyStickGain& gain);

// 1/2 sum_i max(q_i - h p_i, 0); for h = inf, 1/2 sum over p_i = 0 of q_i.
double HockeyStickVulnerability(const Channel2& m, const HockeyStickGain& gain);

// C <=_h M: V_h(C) <= V_h(M) + tau on {0, inf} and every column ratio of
// either channel. Equivalent to M refining C.
bool HockeyStickLeq(const Channel2& c, const Channel2& m,
                    const NumericPolicy& policy = kDefaultPolicy);

// Solves c_alpha * W = m_alpha for a 2x2 row-stochastic W.
// Throws kDimensionMismatch unless both are 2x2 and kNoWitness when the
// solution leaves [0, 1] or the system has none.
GeneralChannel WitnessForTradeoffRefinement(
    const Channel2& c_alpha, const Channel2& m_alpha,
    const NumericPolicy& policy = kDefaultPolicy);

}  // namespace fdpqif

#endif  // FDPQIF_TRADEOFF_H_
