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

#include "fdpqif/canonical.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "fdpqif/tradeoff.h"

namespace fdpqif {
namespace {

// Informative columns of a partial channel in ascending ratio order, with
// equal-ratio columns merged. A single column means no information.
using Part = std::vector<Column>;

Part SortedPart(std::vector<Column> cols, const NumericPolicy& policy) {
  std::erase_if(cols, [&](const Column& c) { return c.p + c.q <= policy.tau; });
  std::stable_sort(
      cols.begin(), cols.end(),
      [](const Column& a, const Column& b) { return a.q * b.p < b.q * a.p; });
  Part merged;
  for (const Column& c : cols) {
    if (!merged.empty() &&
        LrCompare(merged.back(), c, policy) == std::weak_ordering::equivalent) {
      merged.back().p += c.p;
      merged.back().q += c.q;
    } else {
      merged.push_back(c);
    }
  }
  return merged;
}

Part ToPart(const std::vector<double>& p, const std::vector<double>& q,
            const NumericPolicy& policy) {
  std::vector<Column> cols;
  for (std::size_t i = 0; i < p.size(); ++i) cols.push_back({p[i], q[i]});
  Part part = SortedPart(std::move(cols), policy);
  if (part.size() > 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "greatest lower bounds need at most two informative columns, "
                "got " +
                    std::to_string(part.size()));
  }
  return part;
}

bool Informative(const Part& a) { return a.size() >= 2; }

bool Leq(const Part& a, const Part& b, const NumericPolicy& policy) {
  if (!Informative(b)) return true;
  if (!Informative(a)) return false;
  return LrCompare(a.front(), b.front(), policy) <= 0 &&
         LrCompare(a.back(), b.back(), policy) >= 0;
}

Column Remainder(const Column& centroid, const Column& low,
                 const Column& high) {
  return {std::max(0.0, centroid.p - low.p - high.p),
          std::max(0.0, centroid.q - low.q - high.q)};
}

Part Meet(const Part& a, const Part& b, const Column& centroid,
          const NumericPolicy& policy) {
  if (Leq(a, b, policy)) return a;
  if (Leq(b, a, policy)) return b;
  const Column& low =
      LrCompare(a.front(), b.front(), policy) <= 0 ? a.front() : b.front();
  const Column& high =
      LrCompare(a.back(), b.back(), policy) >= 0 ? a.back() : b.back();
  return SortedPart({low, Remainder(centroid, low, high), high}, policy);
}

// Peels the most extreme column off the meet of the working list until
// one channel, or only uninformative ones, remain.
std::vector<Column> PeelGlb(std::vector<Part> parts, Column centroid,
                            const NumericPolicy& policy) {
  std::vector<Column> out;
  while (!parts.empty()) {
    if (parts.size() == 1) {
      out.insert(out.end(), parts[0].begin(), parts[0].end());
      break;
    }
    if (std::none_of(parts.begin(), parts.end(), Informative)) {
      out.push_back(centroid);
      break;
    }
    std::size_t pick = 0;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (LrCompare(parts[i].back(), parts[pick].back(), policy) > 0) {
        pick = i;
      }
    }
    const Column h = parts[pick].back();
    std::vector<Part> next;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i == pick) continue;
      Part joined = Meet(parts[pick], parts[i], centroid, policy);
      Column& top = joined.back();
      top.p = std::max(0.0, top.p - h.p);
      top.q = std::max(0.0, top.q - h.q);
      next.push_back(SortedPart(std::move(joined), policy));
    }
    out.push_back(h);
    centroid = {std::max(0.0, centroid.p - h.p),
                std::max(0.0, centroid.q - h.q)};
    parts = std::move(next);
  }
  return out;
}

std::vector<std::string> IndexLabels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

void SplitColumns(const std::vector<Column>& cols, std::vector<double>& p,
                  std::vector<double>& q) {
  for (const Column& c : cols) {
    p.push_back(c.p);
    q.push_back(c.q);
  }
}

double Cross(const Facet& o, const Facet& a, const Facet& b) {
  return (a.alpha - o.alpha) * (b.beta - o.beta) -
         (a.beta - o.beta) * (b.alpha - o.alpha);
}

}  // namespace

Channel2 ChannelOf(const TradeoffFunction& f, const NumericPolicy& policy) {
  const std::vector<Facet>& pts = f.facets();
  const std::size_t n = pts.size() - 1;
  std::vector<double> p(n + 1);
  std::vector<double> q(n + 1);
  p[n] = pts[0].alpha;
  q[n] = 1 - pts[0].beta;
  for (std::size_t i = 0; i < n; ++i) {
    p[n - i - 1] = pts[i + 1].alpha - pts[i].alpha;
    q[n - i - 1] = pts[i].beta - pts[i + 1].beta;
  }
  Channel2 raw =
      Channel2::Create(IndexLabels(n + 1), std::move(p), std::move(q), policy);
  return CanonicalSort(raw, policy);
}

bool RefinementLeq(const Channel2& c, const Channel2& m,
                   const NumericPolicy& policy) {
  return TradeoffLeq(TradeoffOf(c, policy), TradeoffOf(m, policy), policy);
}

bool Refine2x2Check(const Channel2& a, const Channel2& a_prime,
                    const NumericPolicy& policy) {
  if (a.size() != 2 || a_prime.size() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "2x2 channels required");
  }
  // Oriented so that column 0 is (x, y) with y <= x.
  auto oriented = [](const Channel2& m) {
    return m.q()[0] <= m.p()[0] ? Column{m.p()[0], m.q()[0]}
                                : Column{m.p()[1], m.q()[1]};
  };
  const Column c = oriented(a);
  const Column d = oriented(a_prime);
  const double tol = policy.tau;
  return d.p * c.q <= c.p * d.q + tol &&
         (1 - d.p) * (1 - c.q) + tol >= (1 - c.p) * (1 - d.q);
}

bool PartialLeq(const PartialChannel2& a, const PartialChannel2& b,
                const NumericPolicy& policy) {
  return Leq(ToPart(a.p(), a.q(), policy), ToPart(b.p(), b.q(), policy),
             policy);
}

PartialChannel2 Glb2(const PartialChannel2& a, const PartialChannel2& r,
                     const NumericPolicy& policy) {
  if (std::abs(a.e() - r.e()) > policy.tau ||
      std::abs(a.f() - r.f()) > policy.tau) {
    throw Error(ErrorCode::kCentroidMismatch,
                "partial channels have different row sums");
  }
  const Part pa = ToPart(a.p(), a.q(), policy);
  const Part pr = ToPart(r.p(), r.q(), policy);
  if (Leq(pa, pr, policy) || Leq(pr, pa, policy)) {
    throw Error(ErrorCode::kNotIncomparable,
                "inputs are comparable; the smaller one is the bound");
  }
  const Column low =
      LrCompare(pa.front(), pr.front(), policy) <= 0 ? pa.front() : pr.front();
  const Column high =
      LrCompare(pa.back(), pr.back(), policy) >= 0 ? pa.back() : pr.back();
  const Column mid = Remainder({a.e(), a.f()}, low, high);
  return PartialChannel2::Create({"0", "1", "2"}, {low.p, mid.p, high.p},
                                 {low.q, mid.q, high.q}, a.e(), a.f(), policy);
}

Channel2 GlbFinite(const std::vector<Channel2>& channels,
                   const NumericPolicy& policy) {
  if (channels.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "no channels");
  }
  std::vector<Part> parts;
  for (const Channel2& m : channels) {
    parts.push_back(ToPart(m.p(), m.q(), policy));
  }
  std::vector<double> p;
  std::vector<double> q;
  SplitColumns(PeelGlb(std::move(parts), {1, 1}, policy), p, q);
  const std::size_t n = p.size();
  return CanonicalSort(
      Channel2::Create(IndexLabels(n), std::move(p), std::move(q), policy),
      policy);
}

PartialChannel2 GlbFinite(const std::vector<PartialChannel2>& channels,
                          const NumericPolicy& policy) {
  if (channels.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "no channels");
  }
  const double e = channels.front().e();
  const double f = channels.front().f();
  std::vector<Part> parts;
  for (const PartialChannel2& m : channels) {
    if (std::abs(m.e() - e) > policy.tau || std::abs(m.f() - f) > policy.tau) {
      throw Error(ErrorCode::kCentroidMismatch,
                  "partial channels have different row sums");
    }
    parts.push_back(ToPart(m.p(), m.q(), policy));
  }
  std::vector<double> p;
  std::vector<double> q;
  SplitColumns(SortedPart(PeelGlb(std::move(parts), {e, f}, policy), policy), p,
               q);
  const std::size_t n = p.size();
  return PartialChannel2::Create(IndexLabels(n), std::move(p), std::move(q), e,
                                 f, policy);
}

TradeoffFunction TradeoffMin(const TradeoffFunction& f,
                             const TradeoffFunction& g,
                             const NumericPolicy& policy) {
  std::vector<Facet> pts = f.facets();
  pts.insert(pts.end(), g.facets().begin(), g.facets().end());
  std::sort(pts.begin(), pts.end(), [](const Facet& a, const Facet& b) {
    return a.alpha < b.alpha || (a.alpha == b.alpha && a.beta < b.beta);
  });
  std::vector<Facet> hull;
  for (const Facet& pt : pts) {
    while (hull.size() >= 2 &&
           Cross(hull[hull.size() - 2], hull.back(), pt) <= 0) {
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  return TradeoffFunction::FromPoints(std::move(hull), policy);
}

TradeoffFunction TradeoffMax(const TradeoffFunction& f,
                             const TradeoffFunction& g,
                             const NumericPolicy& policy) {
  std::vector<double> xs = f.Abscissae();
  const std::vector<double> gx = g.Abscissae();
  xs.insert(xs.end(), gx.begin(), gx.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Facet> pts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double fx = Evaluate(f, xs[i], policy);
    const double gx_val = Evaluate(g, xs[i], policy);
    pts.push_back({xs[i], std::max(fx, gx_val)});
    if (i + 1 == xs.size()) break;
    const double d0 = fx - gx_val;
    const double d1 =
        Evaluate(f, xs[i + 1], policy) - Evaluate(g, xs[i + 1], policy);
    if (d0 * d1 < 0) {
      const double x = xs[i] + (xs[i + 1] - xs[i]) * d0 / (d0 - d1);
      pts.push_back({x, Evaluate(f, x, policy)});
    }
  }
  return TradeoffFunction::FromPoints(std::move(pts), policy);
}

}  // namespace fdpqif
