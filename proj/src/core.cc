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

#include "fdpqif/core.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace fdpqif {
namespace {

std::string Describe(double value) {
  std::ostringstream out;
  out.precision(10);
  out << value;
  return out.str();
}

void CheckDistinct(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const std::string& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kDuplicateLabel,
                  "duplicate label '" + label + "'");
    }
  }
}

std::vector<std::string> IndexLabels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

// Clamps entries in [-tau, 0) to zero and returns the row sum.
double ClampRow(std::vector<double>& row, std::size_t row_index,
                const NumericPolicy& policy) {
  double sum = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    double& x = row[j];
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::kNegativeEntry,
                  "non-finite entry at row " + std::to_string(row_index) +
                      ", column " + std::to_string(j));
    }
    if (x < -policy.tau) {
      throw Error(ErrorCode::kNegativeEntry,
                  "negative entry " + Describe(x) + " at row " +
                      std::to_string(row_index) + ", column " +
                      std::to_string(j));
    }
    if (x < 0) x = 0;
    sum += x;
  }
  return sum;
}

// Cross product of consecutive segments expressed as columns
// (p, q) = (delta alpha, -delta beta); positive when the first is steeper.
double SegmentCross(const Column& a, const Column& b) {
  return a.q * b.p - b.q * a.p;
}

double SegmentScale(const Column& a, const Column& b) {
  return (std::abs(a.p) + std::abs(a.q)) * (std::abs(b.p) + std::abs(b.q));
}

Column Segment(const Facet& from, const Facet& to) {
  return {to.alpha - from.alpha, from.beta - to.beta};
}

bool RatioLess(const Column& a, const Column& b) {
  return a.q * b.p < b.q * a.p;
}

}  // namespace

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRowSum:
      return "RowSumError";
    case ErrorCode::kNegativeEntry:
      return "NegativeEntry";
    case ErrorCode::kDuplicateLabel:
      return "DuplicateLabel";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kZeroColumn:
      return "ZeroColumn";
    case ErrorCode::kDomain:
      return "DomainError";
    case ErrorCode::kInvalidTradeoff:
      return "InvalidTradeoff";
    case ErrorCode::kNoWitness:
      return "NoWitness";
    case ErrorCode::kNotIncomparable:
      return "NotIncomparable";
    case ErrorCode::kCentroidMismatch:
      return "CentroidMismatch";
    case ErrorCode::kNotSymmetric:
      return "NotSymmetric";
    case ErrorCode::kEmptySupport:
      return "EmptySupport";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kSyntax:
      return "SyntaxError";
    case ErrorCode::kType:
      return "TypeError";
    case ErrorCode::kFileNotFound:
      return "FileNotFound";
    case ErrorCode::kUnknownFormat:
      return "UnknownFormat";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

void NumericPolicy::Validate() const {
  if (!(tau > 0 && tau < report_tol && report_tol < 1)) {
    throw Error(ErrorCode::kDomain,
                "numeric policy requires 0 < tau < report_tol < 1");
  }
}

ExtendedReal ExtendedReal::Finite(double value) {
  if (std::isnan(value) || value < 0) {
    throw Error(ErrorCode::kDomain,
                "expected a non-negative real, got " + Describe(value));
  }
  if (std::isinf(value)) return Infinity();
  return ExtendedReal(value, false);
}

ExtendedReal ExtendedReal::Exp() const {
  if (infinite_) return Infinity();
  double e = std::exp(value_);
  if (std::isinf(e)) return Infinity();
  return ExtendedReal(e, false);
}

std::string ToString(const ExtendedReal& x) {
  return x.is_infinite() ? "inf" : Describe(x.value());
}

// ---------------------------------------------------------------------------
// Channel2

Channel2 Channel2::Create(std::vector<std::string> labels,
                          std::vector<double> p, std::vector<double> q,
                          const NumericPolicy& policy) {
  if (p.empty() || p.size() != q.size() || labels.size() != p.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "channel needs |labels| = |p| = |q| >= 1 (got " +
                    std::to_string(labels.size()) + ", " +
                    std::to_string(p.size()) + ", " + std::to_string(q.size()) +
                    ")");
  }
  CheckDistinct(labels);
  const double sum_p = ClampRow(p, 0, policy);
  const double sum_q = ClampRow(q, 1, policy);
  if (std::abs(sum_p - 1) > policy.tau) {
    throw Error(ErrorCode::kRowSum, "row 0 sums to " + Describe(sum_p));
  }
  if (std::abs(sum_q - 1) > policy.tau) {
    throw Error(ErrorCode::kRowSum, "row 1 sums to " + Describe(sum_q));
  }
  return Channel2(std::move(labels), std::move(p), std::move(q));
}

Channel2 Channel2::Create(std::vector<double> p, std::vector<double> q,
                          const NumericPolicy& policy) {
  std::vector<std::string> labels = IndexLabels(p.size());
  return Create(std::move(labels), std::move(p), std::move(q), policy);
}

Channel2 Channel2::Permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != size()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation size mismatch");
  }
  std::vector<bool> used(size(), false);
  std::vector<std::string> labels;
  std::vector<double> p;
  std::vector<double> q;
  for (std::size_t i : order) {
    if (i >= size() || used[i]) {
      throw Error(ErrorCode::kDimensionMismatch, "not a permutation");
    }
    used[i] = true;
    labels.push_back(labels_[i]);
    p.push_back(p_[i]);
    q.push_back(q_[i]);
  }
  return Channel2(std::move(labels), std::move(p), std::move(q));
}

Channel2 ValidateChannel(const std::vector<std::vector<double>>& rows,
                         std::vector<std::string> labels,
                         const NumericPolicy& policy) {
  if (rows.size() != 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "a two-row channel needs exactly 2 rows, got " +
                    std::to_string(rows.size()));
  }
  if (rows[0].size() != rows[1].size()) {
    throw Error(ErrorCode::kDimensionMismatch, "rows differ in length");
  }
  return Channel2::Create(std::move(labels), rows[0], rows[1], policy);
}

// ---------------------------------------------------------------------------
// GeneralChannel

GeneralChannel GeneralChannel::Create(std::vector<std::string> labels,
                                      std::vector<std::vector<double>> rows,
                                      const NumericPolicy& policy) {
  if (rows.empty() || labels.empty()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "channel needs at least one row and one column");
  }
  CheckDistinct(labels);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != labels.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(labels.size()));
    }
    const double sum = ClampRow(rows[i], i, policy);
    if (std::abs(sum - 1) > policy.tau) {
      throw Error(ErrorCode::kRowSum,
                  "row " + std::to_string(i) + " sums to " + Describe(sum));
    }
  }
  return GeneralChannel(std::move(labels), std::move(rows));
}

GeneralChannel GeneralChannel::Create(std::vector<std::vector<double>> rows,
                                      const NumericPolicy& policy) {
  std::vector<std::string> labels =
      IndexLabels(rows.empty() ? 0 : rows.front().size());
  return Create(std::move(labels), std::move(rows), policy);
}

GeneralChannel GeneralChannel::FromChannel2(const Channel2& channel) {
  return GeneralChannel(channel.labels(), {channel.p(), channel.q()});
}

Channel2 GeneralChannel::ToChannel2(const NumericPolicy& policy) const {
  return ValidateChannel(rows_, labels_, policy);
}

// ---------------------------------------------------------------------------
// PartialChannel2

PartialChannel2 PartialChannel2::Create(std::vector<std::string> labels,
                                        std::vector<double> p,
                                        std::vector<double> q, double e,
                                        double f, const NumericPolicy& policy) {
  if (p.empty() || p.size() != q.size() || labels.size() != p.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "partial channel needs |labels| = |p| = |q| >= 1");
  }
  CheckDistinct(labels);
  const double sum_p = ClampRow(p, 0, policy);
  const double sum_q = ClampRow(q, 1, policy);
  if (e > 1 + policy.tau || f > 1 + policy.tau || e < 0 || f < 0) {
    throw Error(ErrorCode::kRowSum, "row sums must lie in [0, 1]");
  }
  if (std::abs(sum_p - e) > policy.tau || std::abs(sum_q - f) > policy.tau) {
    throw Error(ErrorCode::kRowSum,
                "recorded row sums (" + Describe(e) + ", " + Describe(f) +
                    ") do not match actual (" + Describe(sum_p) + ", " +
                    Describe(sum_q) + ")");
  }
  return PartialChannel2(std::move(labels), std::move(p), std::move(q), e, f);
}

PartialChannel2 PartialChannel2::FromChannel2(const Channel2& channel) {
  return PartialChannel2(channel.labels(), channel.p(), channel.q(), 1.0, 1.0);
}

Channel2 PartialChannel2::Normalized(const NumericPolicy& policy) const {
  if (e_ <= policy.tau || f_ <= policy.tau) {
    throw Error(ErrorCode::kRowSum, "cannot normalise an empty row");
  }
  std::vector<double> p = p_;
  std::vector<double> q = q_;
  for (double& x : p) x /= e_;
  for (double& x : q) x /= f_;
  return Channel2::Create(labels_, std::move(p), std::move(q), policy);
}

// ---------------------------------------------------------------------------
// TradeoffFunction

TradeoffFunction TradeoffFunction::FromPoints(std::vector<Facet> points,
                                              const NumericPolicy& policy) {
  const double tau = policy.tau;
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidTradeoff, "no facet points");
  }
  for (Facet& pt : points) {
    if (!std::isfinite(pt.alpha) || !std::isfinite(pt.beta) ||
        pt.alpha < -tau || pt.alpha > 1 + tau || pt.beta < -tau ||
        pt.beta > 1 + tau) {
      throw Error(ErrorCode::kInvalidTradeoff, "facet (" + Describe(pt.alpha) +
                                                   ", " + Describe(pt.beta) +
                                                   ") outside the unit square");
    }
    pt.alpha = std::clamp(pt.alpha, 0.0, 1.0);
    pt.beta = std::clamp(pt.beta, 0.0, 1.0);
    if (pt.alpha <= tau) pt.alpha = 0;
    if (pt.alpha >= 1 - tau) pt.alpha = 1;
    if (pt.beta <= tau) pt.beta = 0;
  }
  std::stable_sort(
      points.begin(), points.end(),
      [](const Facet& a, const Facet& b) { return a.alpha < b.alpha; });

  std::vector<Facet> merged;
  for (const Facet& pt : points) {
    if (!merged.empty() && pt.alpha - merged.back().alpha <= tau) {
      merged.back().beta = std::min(merged.back().beta, pt.beta);
    } else {
      merged.push_back(pt);
    }
  }
  if (merged.front().alpha > 0) merged.insert(merged.begin(), Facet{0, 1});
  if (merged.back().alpha < 1) merged.push_back(Facet{1, 0});
  if (merged.back().beta > tau) {
    throw Error(ErrorCode::kInvalidTradeoff,
                "f(1) = " + Describe(merged.back().beta) + " but must be 0");
  }
  merged.back().beta = 0;

  for (Facet& pt : merged) {
    if (pt.beta > 1 - pt.alpha + tau) {
      throw Error(ErrorCode::kInvalidTradeoff, "f(" + Describe(pt.alpha) +
                                                   ") = " + Describe(pt.beta) +
                                                   " exceeds 1 - alpha");
    }
    pt.beta = std::min(pt.beta, 1 - pt.alpha);
  }
  for (std::size_t i = 1; i < merged.size(); ++i) {
    if (merged[i].beta > merged[i - 1].beta + tau) {
      throw Error(ErrorCode::kInvalidTradeoff,
                  "trade-off function increases at alpha = " +
                      Describe(merged[i].alpha));
    }
    merged[i].beta = std::min(merged[i].beta, merged[i - 1].beta);
  }
  for (std::size_t i = 2; i < merged.size(); ++i) {
    const Column left = Segment(merged[i - 2], merged[i - 1]);
    const Column right = Segment(merged[i - 1], merged[i]);
    if (SegmentCross(left, right) < -tau * SegmentScale(left, right)) {
      throw Error(ErrorCode::kInvalidTradeoff,
                  "trade-off function is not convex at alpha = " +
                      Describe(merged[i - 1].alpha));
    }
  }

  std::vector<Facet> minimal;
  for (const Facet& pt : merged) {
    while (minimal.size() >= 2) {
      const Column left = Segment(minimal[minimal.size() - 2], minimal.back());
      const Column right = Segment(minimal.back(), pt);
      if (std::abs(SegmentCross(left, right)) >
          tau * SegmentScale(left, right)) {
        break;
      }
      minimal.pop_back();
    }
    minimal.push_back(pt);
  }
  return TradeoffFunction(std::move(minimal));
}

TradeoffFunction TradeoffFunction::Identity() {
  return TradeoffFunction({{0, 1}, {1, 0}});
}

TradeoffFunction TradeoffFunction::Zero() {
  return TradeoffFunction({{0, 0}, {1, 0}});
}

std::vector<double> TradeoffFunction::Abscissae() const {
  std::vector<double> xs;
  xs.reserve(facets_.size());
  for (const Facet& pt : facets_) xs.push_back(pt.alpha);
  return xs;
}

double Evaluate(const TradeoffFunction& f, double alpha,
                const NumericPolicy& policy) {
  if (std::isnan(alpha) || alpha < -policy.tau || alpha > 1 + policy.tau) {
    throw Error(ErrorCode::kDomain,
                "alpha = " + Describe(alpha) + " outside [0, 1]");
  }
  alpha = std::clamp(alpha, 0.0, 1.0);
  const std::vector<Facet>& pts = f.facets();
  auto it =
      std::upper_bound(pts.begin(), pts.end(), alpha,
                       [](double a, const Facet& pt) { return a < pt.alpha; });
  if (it == pts.end()) return pts.back().beta;
  if (it == pts.begin()) return pts.front().beta;
  const Facet& hi = *it;
  const Facet& lo = *(it - 1);
  if (alpha == lo.alpha) return lo.beta;
  const double t = (alpha - lo.alpha) / (hi.alpha - lo.alpha);
  return lo.beta + t * (hi.beta - lo.beta);
}

// ---------------------------------------------------------------------------
// Likelihood-ratio ordering

std::weak_ordering LrCompare(const Column& a, const Column& b,
                             const NumericPolicy& policy) {
  const double mass_a = a.p + a.q;
  const double mass_b = b.p + b.q;
  if (mass_a <= policy.tau || mass_b <= policy.tau) {
    throw Error(ErrorCode::kZeroColumn,
                "likelihood ratio of an all-zero column is undefined");
  }
  const double diff = a.q * b.p - b.q * a.p;
  if (std::abs(diff) <= policy.tau * mass_a * mass_b) {
    return std::weak_ordering::equivalent;
  }
  return diff < 0 ? std::weak_ordering::less : std::weak_ordering::greater;
}

Channel2 RatioOrdered(const Channel2& channel, const NumericPolicy& policy) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < channel.size(); ++i) {
    if (channel.p()[i] + channel.q()[i] > policy.tau) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) {
                     return RatioLess(channel.column(i), channel.column(j));
                   });
  std::vector<std::string> labels;
  std::vector<double> p;
  std::vector<double> q;
  for (std::size_t i : order) {
    labels.push_back(channel.labels()[i]);
    p.push_back(channel.p()[i]);
    q.push_back(channel.q()[i]);
  }
  return Channel2(std::move(labels), std::move(p), std::move(q));
}

Channel2 CanonicalSort(const Channel2& channel, const NumericPolicy& policy) {
  const Channel2 ordered = RatioOrdered(channel, policy);
  std::vector<std::string> labels;
  std::vector<double> p;
  std::vector<double> q;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const Column col = ordered.column(i);
    if (!p.empty() && LrCompare(Column{p.back(), q.back()}, col, policy) ==
                          std::weak_ordering::equivalent) {
      p.back() += col.p;
      q.back() += col.q;
      labels.back() += "+" + ordered.labels()[i];
    } else {
      labels.push_back(ordered.labels()[i]);
      p.push_back(col.p);
      q.push_back(col.q);
    }
  }
  return Channel2(std::move(labels), std::move(p), std::move(q));
}

bool TradeoffLeq(const TradeoffFunction& f, const TradeoffFunction& g,
                 const NumericPolicy& policy) {
  for (const TradeoffFunction* h : {&f, &g}) {
    for (const Facet& pt : h->facets()) {
      if (Evaluate(f, pt.alpha, policy) >
          Evaluate(g, pt.alpha, policy) + policy.tau) {
        return false;
      }
    }
  }
  return true;
}

bool TradeoffNear(const TradeoffFunction& f, const TradeoffFunction& g,
                  double tol) {
  for (const TradeoffFunction* h : {&f, &g}) {
    for (const Facet& pt : h->facets()) {
      if (std::abs(Evaluate(f, pt.alpha) - Evaluate(g, pt.alpha)) > tol) {
        return false;
      }
    }
  }
  return true;
}

bool ChannelsNear(const Channel2& a, const Channel2& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.p()[i] - b.p()[i]) > tol ||
        std::abs(a.q()[i] - b.q()[i]) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace fdpqif
