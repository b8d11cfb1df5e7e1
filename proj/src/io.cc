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

#include "fdpqif/io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fdpqif {
namespace {

using nlohmann::json;

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSyntax, std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T Field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::kSyntax, std::string("missing key '") + key + "'");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSyntax,
                std::string("bad value for '") + key + "': " + e.what());
  }
}

json Rounded(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(Round6(x));
  return out;
}

// SVG coordinates for a 400 x 400 plot with a 40 pixel margin.
constexpr double kPlot = 400;
constexpr double kMargin = 40;

double PlotX(double alpha) { return kMargin + alpha * kPlot; }
double PlotY(double beta) { return kMargin + (1 - beta) * kPlot; }

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                "#d62728", "#9467bd", "#8c564b"};

}  // namespace

double Round6(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return std::strtod(buf, nullptr);
}

std::string FormatNumber(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x == 0 ? 0.0 : x);
  return buf;
}

GeneralChannel ParseChannelJson(std::string_view text,
                                const NumericPolicy& policy) {
  const json doc = ParseJson(text);
  auto rows = Field<std::vector<std::vector<double>>>(doc, "rows");
  if (doc.contains("labels")) {
    auto labels = Field<std::vector<std::string>>(doc, "labels");
    return GeneralChannel::Create(std::move(labels), std::move(rows), policy);
  }
  return GeneralChannel::Create(std::move(rows), policy);
}

TradeoffFunction ParseTradeoffJson(std::string_view text,
                                   const NumericPolicy& policy) {
  const json doc = ParseJson(text);
  const auto pairs = Field<std::vector<std::vector<double>>>(doc, "facets");
  std::vector<Facet> facets;
  for (const std::vector<double>& pair : pairs) {
    if (pair.size() != 2) {
      throw Error(ErrorCode::kSyntax, "facets must be [alpha, beta] pairs");
    }
    facets.push_back({pair[0], pair[1]});
  }
  return TradeoffFunction::FromPoints(std::move(facets), policy);
}

std::string ChannelToJson(const GeneralChannel& channel) {
  json rows = json::array();
  for (const std::vector<double>& row : channel.matrix()) {
    rows.push_back(Rounded(row));
  }
  return json{{"labels", channel.labels()}, {"rows", rows}}.dump();
}

std::string ChannelToJson(const Channel2& channel) {
  return ChannelToJson(GeneralChannel::FromChannel2(channel));
}

std::string TradeoffToJson(const TradeoffFunction& f) {
  json facets = json::array();
  for (const Facet& pt : f.facets()) {
    facets.push_back(Rounded({pt.alpha, pt.beta}));
  }
  return json{{"facets", facets}}.dump();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ProfileFormat ParseProfileFormat(std::string_view name) {
  if (name == "facets-json") return ProfileFormat::kFacetsJson;
  if (name == "csv") return ProfileFormat::kCsv;
  if (name == "svg") return ProfileFormat::kSvg;
  throw Error(ErrorCode::kUnknownFormat,
              "unknown format '" + std::string(name) +
                  "' (expected facets-json, csv or svg)");
}

std::string EmitCsv(const TradeoffFunction& f, int samples) {
  std::vector<Facet> rows = f.facets();
  for (int k = 0; k < samples; ++k) {
    const double alpha =
        samples == 1 ? 0.5 : static_cast<double>(k) / (samples - 1);
    rows.push_back({alpha, Evaluate(f, alpha)});
  }
  std::stable_sort(
      rows.begin(), rows.end(),
      [](const Facet& a, const Facet& b) { return a.alpha < b.alpha; });
  std::string out = "alpha,beta\n";
  std::string last;
  for (const Facet& pt : rows) {
    std::string line = FormatNumber(pt.alpha) + "," + FormatNumber(pt.beta);
    if (line == last) continue;
    out += line + "\n";
    last = std::move(line);
  }
  return out;
}

std::string EmitSvg(const std::vector<TradeoffFunction>& curves) {
  const double size = kPlot + 2 * kMargin;
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
      << "\">\n"
      << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
      << kPlot << "\" height=\"" << kPlot
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (const char* tick : {"0", "0.25", "0.5", "0.75", "1"}) {
    const double v = std::strtod(tick, nullptr);
    svg << "  <line x1=\"" << PlotX(v) << "\" y1=\"" << PlotY(0) << "\" x2=\""
        << PlotX(v) << "\" y2=\"" << PlotY(0) + 5 << "\" stroke=\"black\"/>\n"
        << "  <text x=\"" << PlotX(v) << "\" y=\"" << PlotY(0) + 18
        << "\" font-size=\"10\" text-anchor=\"middle\">" << tick << "</text>\n"
        << "  <line x1=\"" << PlotX(0) - 5 << "\" y1=\"" << PlotY(v)
        << "\" x2=\"" << PlotX(0) << "\" y2=\"" << PlotY(v)
        << "\" stroke=\"black\"/>\n"
        << "  <text x=\"" << PlotX(0) - 8 << "\" y=\"" << PlotY(v) + 3
        << "\" font-size=\"10\" text-anchor=\"end\">" << tick << "</text>\n";
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    svg << "  <polyline fill=\"none\" stroke=\""
        << kPalette[i % std::size(kPalette)] << "\" points=\"";
    bool first = true;
    for (const Facet& pt : curves[i].facets()) {
      if (!first) svg << ' ';
      svg << FormatNumber(PlotX(pt.alpha)) << ','
          << FormatNumber(PlotY(pt.beta));
      first = false;
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string EmitProfile(const TradeoffFunction& f, ProfileFormat format,
                        int samples) {
  switch (format) {
    case ProfileFormat::kFacetsJson:
      return TradeoffToJson(f) + "\n";
    case ProfileFormat::kCsv:
      return EmitCsv(f, samples);
    case ProfileFormat::kSvg:
      return EmitSvg({f});
  }
  throw Error(ErrorCode::kUnknownFormat, "unknown format");
}

std::string EmitProfile(const TradeoffFunction& f, std::string_view format,
                        int samples) {
  return EmitProfile(f, ParseProfileFormat(format), samples);
}

}  // namespace fdpqif
