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

// Command-line front end. Exit codes: 0 success, 2 validation failure,
// 3 parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fdpqif/analyses.h"
#include "fdpqif/canonical.h"
#include "fdpqif/io.h"
#include "fdpqif/mechanisms.h"
#include "fdpqif/pipeline.h"
#include "fdpqif/tradeoff.h"
#include "json.hpp"

namespace {

using fdpqif::Channel2;
using fdpqif::Error;
using fdpqif::ErrorCode;
using fdpqif::GeneralChannel;
using fdpqif::NumericPolicy;
using fdpqif::TradeoffFunction;
using nlohmann::json;

constexpr int kValidationFailure = 2;
constexpr int kParseFailure = 3;

struct CommonOptions {
  std::string out;
  std::string format;
  double tol = 0;
  int samples = 0;
};

// Registers the shared options; `opts.format` stays empty unless given.
void AddCommon(CLI::App* cmd, CommonOptions& opts,
               const std::string& default_format) {
  cmd->add_option("--out", opts.out, "Write output to this file");
  cmd->add_option("--format", opts.format,
                  "Output format (default: " + default_format + ")");
  cmd->add_option("--tol", opts.tol,
                  "Validation tolerance (overrides FDP_TOL)");
  cmd->add_option("--samples", opts.samples,
                  "Extra interpolated rows in csv output");
}

NumericPolicy MakePolicy(const CommonOptions& opts) {
  NumericPolicy policy;
  if (const char* env = std::getenv("FDP_TOL")) {
    char* end = nullptr;
    const double tau = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw Error(ErrorCode::kDomain, "FDP_TOL is not a number");
    }
    policy.tau = tau;
  }
  if (opts.tol > 0) policy.tau = opts.tol;
  policy.Validate();
  return policy;
}

void Write(const CommonOptions& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kFileNotFound, "cannot write '" + opts.out + "'");
  }
  file << text;
}

json Parsed(const std::string& text) { return json::parse(text); }

json NumberOrNull(const std::optional<double>& x) {
  return x ? json(fdpqif::Round6(*x)) : json(nullptr);
}

json EpsJson(const fdpqif::ExtendedReal& eps) {
  return eps.is_infinite() ? json("inf") : json(fdpqif::Round6(eps.value()));
}

// Emits a profile in one of the profile formats, or `report` for "json".
std::string ProfileOrReport(const CommonOptions& opts,
                            const TradeoffFunction& profile,
                            const json& report) {
  if (opts.format == "json") return report.dump() + "\n";
  return fdpqif::EmitProfile(profile, opts.format, opts.samples);
}

Channel2 LoadChannel2(const std::string& path, const NumericPolicy& policy) {
  return fdpqif::ParseChannelJson(fdpqif::ReadFile(path), policy)
      .ToChannel2(policy);
}

std::vector<std::string> SplitLabels(const std::string& csv) {
  std::vector<std::string> labels;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) labels.push_back(item);
  }
  return labels;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trade-off functions and channel refinement for f-DP"};
  app.require_subcommand(1);

  CommonOptions opts;

  std::string channel_file;
  auto* tradeoff = app.add_subcommand(
      "tradeoff", "Trade-off function of a two-row channel file");
  tradeoff->add_option("channel", channel_file)->required();
  AddCommon(tradeoff, opts, "facets-json");

  std::string tradeoff_file;
  auto* canonical = app.add_subcommand(
      "canonical", "Canonical channel of a trade-off function file");
  canonical->add_option("tradeoff", tradeoff_file)->required();
  AddCommon(canonical, opts, "json");

  std::string expression;
  auto* compose = app.add_subcommand(
      "compose", "Evaluate a pipeline expression (json, or a profile format)");
  compose->add_option("expr", expression)->required();
  AddCommon(compose, opts, "json");

  std::string refine_a;
  std::string refine_b;
  auto* refine = app.add_subcommand(
      "refine", "Decide whether B is a post-processing of A");
  refine->add_option("A", refine_a)->required();
  refine->add_option("B", refine_b)->required();
  AddCommon(refine, opts, "text");

  std::string purify_channel;
  std::string purify_expr;
  std::string purify_support;
  double purify_r = 0;
  double purify_eps_p = 0;
  auto* purify = app.add_subcommand(
      "purify", "Hidden uniform mixing followed by geometric noise");
  auto* channel_opt =
      purify->add_option("--channel", purify_channel, "Mechanism channel file");
  auto* expr_opt =
      purify->add_option("--expr", purify_expr, "Mechanism expression");
  channel_opt->excludes(expr_opt);
  purify->add_option("--r", purify_r, "Probability of keeping the output")
      ->required();
  purify->add_option("--eps-p", purify_eps_p, "Geometric noise parameter")
      ->required();
  purify->add_option("--support", purify_support,
                     "Comma-separated uniform support (default: all labels)");
  AddCommon(purify, opts, "json");

  double eps = 0;
  double delta = 0;
  double gamma = 0;
  auto* subsample = app.add_subcommand(
      "subsample",
      "Poisson sub-sampling of the canonical (eps, delta) channel");
  subsample->add_option("--eps", eps)->required();
  subsample->add_option("--delta", delta)->required();
  subsample->add_option("--gamma", gamma)->required();
  AddCommon(subsample, opts, "json");

  std::string decompose_file;
  auto* decompose = app.add_subcommand(
      "decompose", "Split a symmetric trade-off function into pure parts");
  decompose->add_option("tradeoff", decompose_file)->required();
  AddCommon(decompose, opts, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseFailure;
  }

  if (opts.format.empty()) {
    opts.format = *tradeoff ? "facets-json" : *refine ? "text" : "json";
  }

  try {
    const NumericPolicy policy = MakePolicy(opts);
    if (*tradeoff) {
      const TradeoffFunction f =
          fdpqif::TradeoffOf(LoadChannel2(channel_file, policy), policy);
      Write(opts, fdpqif::EmitProfile(f, opts.format, opts.samples));
    } else if (*canonical) {
      if (opts.format != "json") {
        throw Error(ErrorCode::kUnknownFormat, "canonical emits json only");
      }
      const TradeoffFunction f =
          fdpqif::ParseTradeoffJson(fdpqif::ReadFile(tradeoff_file), policy);
      Write(opts, fdpqif::ChannelToJson(fdpqif::ChannelOf(f, policy)) + "\n");
    } else if (*compose) {
      const GeneralChannel result =
          fdpqif::EvalPipeline(fdpqif::ParsePipeline(expression),
                               fdpqif::FileLoader(policy), policy);
      if (opts.format == "json") {
        Write(opts, fdpqif::ChannelToJson(result) + "\n");
      } else {
        Write(opts, fdpqif::EmitProfile(
                        fdpqif::TradeoffOf(result.ToChannel2(policy), policy),
                        opts.format, opts.samples));
      }
    } else if (*refine) {
      const bool holds =
          fdpqif::RefinementLeq(LoadChannel2(refine_a, policy),
                                LoadChannel2(refine_b, policy), policy);
      if (opts.format == "text") {
        Write(opts, holds ? "true\n" : "false\n");
      } else if (opts.format == "json") {
        Write(opts, json{{"refines", holds}}.dump() + "\n");
      } else {
        throw Error(ErrorCode::kUnknownFormat, "refine emits text or json");
      }
    } else if (*purify) {
      Channel2 m = Channel2::Create({1}, {1});
      if (!purify_channel.empty()) {
        m = LoadChannel2(purify_channel, policy);
      } else if (!purify_expr.empty()) {
        m = fdpqif::EvalPipeline(fdpqif::ParsePipeline(purify_expr),
                                 fdpqif::FileLoader(policy), policy)
                .ToChannel2(policy);
      } else {
        throw Error(ErrorCode::kDomain, "purify needs --channel or --expr");
      }
      const std::vector<std::string> support =
          purify_support.empty() ? m.labels() : SplitLabels(purify_support);
      const fdpqif::PurifyResult result =
          fdpqif::PurifyProfile(m, purify_r, support, purify_eps_p, policy);
      const json report = {
          {"hidden", Parsed(fdpqif::ChannelToJson(result.hidden))},
          {"z", Parsed(fdpqif::ChannelToJson(result.z))},
          {"facets", Parsed(fdpqif::TradeoffToJson(result.profile))["facets"]},
          {"pure_eps", NumberOrNull(result.pure_eps)}};
      Write(opts, ProfileOrReport(opts, result.profile, report));
    } else if (*subsample) {
      const fdpqif::SubsampleResult result = fdpqif::SubsampleProfile(
          fdpqif::EpsDelta::Create(eps, delta), gamma, policy);
      const json report = {
          {"channel", Parsed(fdpqif::ChannelToJson(result.channel))},
          {"facets", Parsed(fdpqif::TradeoffToJson(result.profile))["facets"]}};
      Write(opts, ProfileOrReport(opts, result.profile, report));
    } else if (*decompose) {
      if (opts.format != "json") {
        throw Error(ErrorCode::kUnknownFormat, "decompose emits json only");
      }
      const fdpqif::SymmetricDecomposition parts = fdpqif::SymmetricDecompose(
          fdpqif::ParseTradeoffJson(fdpqif::ReadFile(decompose_file), policy),
          policy);
      json list = json::array();
      for (const auto& part : parts.parts) {
        list.push_back({{"eps", EpsJson(part.eps)},
                        {"weight", fdpqif::Round6(part.weight)}});
      }
      Write(opts, json{{"parts", list}}.dump() + "\n");
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool parse =
        e.code() == ErrorCode::kSyntax || e.code() == ErrorCode::kType;
    return parse ? kParseFailure : kValidationFailure;
  }
  return 0;
}
