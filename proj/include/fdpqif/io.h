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

// JSON file formats and profile rendering.
//
//   channel:   {"labels": ["a", "b"], "rows": [[0.5, 0.5], [0.8, 0.2]]}
//   trade-off: {"facets": [[0, 0.9], [0.242, 0.242], [0.9, 0], [1, 0]]}
//
// Every number written by this module carries at most six significant
// digits.

#ifndef FDPQIF_IO_H_
#define FDPQIF_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "fdpqif/core.h"

namespace fdpqif {

// Rounds to six significant digits.
double Round6(double x);

// "%.6g" rendering, with "inf" for infinity.
std::string FormatNumber(double x);

// Parse errors (malformed JSON, missing keys) throw kSyntax.
GeneralChannel ParseChannelJson(std::string_view text,
                                const NumericPolicy& policy = kDefaultPolicy);
TradeoffFunction ParseTradeoffJson(
    std::string_view text, const NumericPolicy& policy = kDefaultPolicy);

std::string ChannelToJson(const GeneralChannel& channel);
std::string ChannelToJson(const Channel2& channel);
std::string TradeoffToJson(const TradeoffFunction& f);

// Reads a whole file. Throws kFileNotFound.
std::string ReadFile(const std::string& path);

enum class ProfileFormat { kFacetsJson, kCsv, kSvg };

// Throws kUnknownFormat for anything but "facets-json", "csv" or "svg".
ProfileFormat ParseProfileFormat(std::string_view name);

// csv: header "alpha,beta", then the facets merged with `samples` evenly
// spaced interpolated rows, sorted by alpha.
std::string EmitCsv(const TradeoffFunction& f, int samples);

// One polyline per curve on the unit box, ticks at 0, 0.25, 0.5, 0.75, 1.
std::string EmitSvg(const std::vector<TradeoffFunction>& curves);

std::string EmitProfile(const TradeoffFunction& f, ProfileFormat format,
                        int samples = 0);
std::string EmitProfile(const TradeoffFunction& f, std::string_view format,
                        int samples = 0);

}  // namespace fdpqif

#endif  // FDPQIF_IO_H_
