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

#include "fdpqif/analyses.h"

#include <algorithm>
#include <set>

#include "fdpqif/compose.h"
#include "fdpqif/tradeoff.h"

namespace fdpqif {
namespace {

PurifyResult FinishPurify(Channel2 hidden, double eps_p,
                          const NumericPolicy& policy) {
  Channel2 ordered = RatioOrdered(hidden, policy);
  Channel2 z =
      ordered.size() < 2
          ? ordered
          : Postprocess(ordered,
                        TruncatedGeometric(ordered.size(), eps_p, policy),
                        policy);
  TradeoffFunction profile = TradeoffOf(z, policy);
  std::optional<double> pure_eps = PureDpExtract(profile, policy);
  return {std::move(hidden), std::move(ordered), std::move(z),
          std::move(profile), pure_eps};
}

void CheckSupport(const std::vector<std::string>& support) {
  if (support.empty()) {
    throw Error(ErrorCode::kEmptySupport, "purification support is empty");
  }
}

}  // namespace

PurifyResult PurifyProfile(const Channel2& m, double r,
                           const std::vector<std::string>& support,
                           double eps_p, const NumericPolicy& policy) {
  CheckSupport(support);
  Channel2 hidden = HiddenChoice(m, UniformChannel(support, policy), r, policy);
  return FinishPurify(std::move(hidden), eps_p, policy);
}

PurifyResult PurifyProfileByRewrite(const Channel2& c, const Channel2& d,
                                    double p, double r,
                                    const std::vector<std::string>& support,
                                    double eps_p, const NumericPolicy& policy) {
  CheckSupport(support);
  const std::set<std::string> inner(d.labels().begin(), d.labels().end());
  for (const std::string& label : support) {
    if (!inner.contains(label)) {
      throw Error(ErrorCode::kDomain,
                  "support label '" + label + "' is not an output of d");
    }
  }
  Channel2 hidden =
      RewriteVisibleHidden(c, d, UniformChannel(support, policy), p, r, policy);
  return FinishPurify(std::move(hidden), eps_p, policy);
}

SubsampleResult SubsampleProfile(const EpsDelta& ed, double gamma,
                                 const NumericPolicy& policy) {
  Channel2 channel = Preprocess(
      SubsamplePoisson(gamma, policy),
      GeneralChannel::FromChannel2(CanonicalEpsDelta(ed, policy)), policy);
  TradeoffFunction profile = TradeoffOf(channel, policy);
  return {std::move(channel), std::move(profile)};
}

double AmplificationGap(const EpsDelta& ed, double gamma, double alpha,
                        const NumericPolicy& policy) {
  return Evaluate(SubsampleProfile(ed, gamma, policy).profile, alpha, policy) -
         Evaluate(EpsDeltaTradeoff(ed, policy), alpha, policy);
}

}  // namespace fdpqif
