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

// Domain types shared by every module: two-row channels, general channels,
// partial channels, piecewise-linear trade-off functions and the numeric
// policy used for all tolerant comparisons.

#ifndef FDPQIF_CORE_H_
#define FDPQIF_CORE_H_

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fdpqif {

enum class ErrorCode {
  kRowSum,
  kNegativeEntry,
  kDuplicateLabel,
  kDimensionMismatch,
  kZeroColumn,
  kDomain,
  kInvalidTradeoff,
  kNoWitness,
  kNotIncomparable,
  kCentroidMismatch,
  kNotSymmetric,
  kEmptySupport,
  kTooLarge,
  kSyntax,
  kType,
  kFileNotFound,
  kUnknownFormat,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported as Error; `code()` identifies the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Tolerances. `tau` governs validation and equality; `report_tol` is used
// when matching reference values given to four or five decimals.
struct NumericPolicy {
  double tau = 1e-9;
  double report_tol = 1e-3;

  // Throws kDomain unless 0 < tau < report_tol < 1.
  void Validate() const;
};

inline constexpr NumericPolicy kDefaultPolicy{};

// Non-negative real extended with +infinity. Infinity is a distinct state,
// never a large finite value.
class ExtendedReal {
 public:
  static ExtendedReal Finite(double value);
  static constexpr ExtendedReal Infinity() { return ExtendedReal(0.0, true); }

  bool is_infinite() const { return infinite_; }
  // Only meaningful when finite.
  double value() const { return value_; }

  // exp(x), with exp(inf) = inf.
  ExtendedReal Exp() const;

  friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

 private:
  constexpr ExtendedReal(double value, bool infinite)
      : value_(value), infinite_(infinite) {}

  double value_;
  bool infinite_;
};

std::string ToString(const ExtendedReal& x);

// One output column of a two-row channel: (p, q) = (row D0, row D1).
struct Column {
  double p = 0;
  double q = 0;
};

// Two-row stochastic matrix over labelled outputs.
class Channel2 {
 public:
  // Validates and clamps entries in [-tau, 0) to 0.
  // Errors: kDimensionMismatch, kNegativeEntry, kRowSum, kDuplicateLabel.
  static Channel2 Create(std::vector<std::string> labels, std::vector<double> p,
                         std::vector<double> q,
                         const NumericPolicy& policy = kDefaultPolicy);

  // Labels "0", "1", ... in column order.
  static Channel2 Create(std::vector<double> p, std::vector<double> q,
                         const NumericPolicy& policy = kDefaultPolicy);

  std::size_t size() const { return p_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& p() const { return p_; }
  const std::vector<double>& q() const { return q_; }
  Column column(std::size_t i) const { return {p_[i], q_[i]}; }

  // Reorders columns; `order` is a permutation of column indices.
  Channel2 Permuted(const std::vector<std::size_t>& order) const;

 private:
  friend Channel2 CanonicalSort(const Channel2&, const NumericPolicy&);
  friend Channel2 RatioOrdered(const Channel2&, const NumericPolicy&);

  Channel2(std::vector<std::string> labels, std::vector<double> p,
           std::vector<double> q)
      : labels_(std::move(labels)), p_(std::move(p)), q_(std::move(q)) {}

  std::vector<std::string> labels_;
  std::vector<double> p_;
  std::vector<double> q_;
};

// Validates a raw 2-row matrix into a Channel2.
Channel2 ValidateChannel(const std::vector<std::vector<double>>& rows,
                         std::vector<std::string> labels,
                         const NumericPolicy& policy = kDefaultPolicy);

// Row-stochastic matrix with k >= 1 rows over a shared label list. Used as
// pre-processor, post-processor and refinement witness.
class GeneralChannel {
 public:
  static GeneralChannel Create(std::vector<std::string> labels,
                               std::vector<std::vector<double>> rows,
                               const NumericPolicy& policy = kDefaultPolicy);
  static GeneralChannel Create(std::vector<std::vector<double>> rows,
                               const NumericPolicy& policy = kDefaultPolicy);
  static GeneralChannel FromChannel2(const Channel2& channel);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return labels_.size(); }
  double at(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<double>>& matrix() const { return rows_; }

  // Requires rows() == 2.
  Channel2 ToChannel2(const NumericPolicy& policy = kDefaultPolicy) const;

 private:
  GeneralChannel(std::vector<std::string> labels,
                 std::vector<std::vector<double>> rows)
      : labels_(std::move(labels)), rows_(std::move(rows)) {}

  std::vector<std::string> labels_;
  std::vector<std::vector<double>> rows_;
};

// Two-row sub-stochastic matrix with recorded row sums (e, f).
class PartialChannel2 {
 public:
  static PartialChannel2 Create(std::vector<std::string> labels,
                                std::vector<double> p, std::vector<double> q,
                                double e, double f,
                                const NumericPolicy& policy = kDefaultPolicy);
  static PartialChannel2 FromChannel2(const Channel2& channel);

  std::size_t size() const { return p_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& p() const { return p_; }
  const std::vector<double>& q() const { return q_; }
  Column column(std::size_t i) const { return {p_[i], q_[i]}; }
  double e() const { return e_; }
  double f() const { return f_; }

  // Rescales each row to sum 1. Refinement among partial channels with a
  // common centroid is preserved by this rescaling.
  Channel2 Normalized(const NumericPolicy& policy = kDefaultPolicy) const;

 private:
  PartialChannel2(std::vector<std::string> labels, std::vector<double> p,
                  std::vector<double> q, double e, double f)
      : labels_(std::move(labels)),
        p_(std::move(p)),
        q_(std::move(q)),
        e_(e),
        f_(f) {}

  std::vector<std::string> labels_;
  std::vector<double> p_;
  std::vector<double> q_;
  double e_;
  double f_;
};

// A breakpoint (alpha, beta) of a piecewise-linear trade-off function.
struct Facet {
  double alpha = 0;
  double beta = 0;

  friend bool operator==(const Facet&, const Facet&) = default;
};

// Convex, non-increasing, piecewise-linear f : [0,1] -> [0,1] with
// f(alpha) <= 1 - alpha, stored as its facet points. Facets are minimal:
// alpha strictly increasing from 0 to 1 and no interior point collinear with
// its neighbours.
class TradeoffFunction {
 public:
  // Normalises arbitrary breakpoints: sorts by alpha, keeps the lowest beta
  // for coincident alphas, closes the domain with (0, beta_0) and (1, 0),
  // snaps values within tau of 0/1 and drops collinear interior points.
  // Throws kInvalidTradeoff if the result is not a trade-off function.
  static TradeoffFunction FromPoints(
      std::vector<Facet> points, const NumericPolicy& policy = kDefaultPolicy);

  // beta = 1 - alpha.
  static TradeoffFunction Identity();
  // beta = 0.
  static TradeoffFunction Zero();

  const std::vector<Facet>& facets() const { return facets_; }
  std::vector<double> Abscissae() const;

 private:
  explicit TradeoffFunction(std::vector<Facet> facets)
      : facets_(std::move(facets)) {}

  std::vector<Facet> facets_;
};

// Linear interpolation between bracketing facets. Throws kDomain outside
// [0,1] (values within tau of the ends are clamped).
double Evaluate(const TradeoffFunction& f, double alpha,
                const NumericPolicy& policy = kDefaultPolicy);

// Orders columns by likelihood ratio q/p using cross-multiplication; p = 0 is
// ratio +inf. Columns whose posteriors q/(p+q) differ by at most tau compare
// equivalent. Throws kZeroColumn if either column is (0, 0) within tau.
std::weak_ordering LrCompare(const Column& a, const Column& b,
                             const NumericPolicy& policy = kDefaultPolicy);

// Abstract-channel normal form: drops zero columns, merges columns of equal
// likelihood ratio (labels joined with '+'), sorts by ascending ratio.
Channel2 CanonicalSort(const Channel2& channel,
                       const NumericPolicy& policy = kDefaultPolicy);

// Stable ascending likelihood-ratio order without merging; zero columns are
// dropped. Used where the output index carries meaning (geometric noise).
Channel2 RatioOrdered(const Channel2& channel,
                      const NumericPolicy& policy = kDefaultPolicy);

// f <= g pointwise, checked at the union of both facet abscissae.
bool TradeoffLeq(const TradeoffFunction& f, const TradeoffFunction& g,
                 const NumericPolicy& policy = kDefaultPolicy);

// |f - g| <= tol at the union of both facet abscissae.
bool TradeoffNear(const TradeoffFunction& f, const TradeoffFunction& g,
                  double tol);

// Entrywise comparison of two channels with the same column count.
bool ChannelsNear(const Channel2& a, const Channel2& b, double tol);

}  // namespace fdpqif

#endif  // FDPQIF_CORE_H_
