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

#include "fdpqif/pipeline.h"

#include <cctype>
#include <charconv>
#include <cmath>

#include "fdpqif/compose.h"
#include "fdpqif/io.h"
#include "fdpqif/mechanisms.h"

namespace fdpqif {
namespace {

using Kind = PipelineExpr::Kind;

const std::vector<std::string>& AtomStarts() {
  static const std::vector<std::string> starts = {
      "(", "ED", "RR", "U", "Geo", "Poisson", "Sort", "@", "\""};
  return starts;
}

std::string JoinExpected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += ", ";
    out += "'" + expected[i] + "'";
  }
  return out;
}

std::string Number(double x) {
  if (std::isinf(x)) return "inf";
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, result.ptr);
}

std::vector<std::string> IndexLabels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

[[noreturn]] void TypeFailure(const PipelineExpr& node,
                              const std::string& reason) {
  throw Error(ErrorCode::kType, "in '" + ToString(node) + "' at offset " +
                                    std::to_string(node.offset) + ": " +
                                    reason);
}

bool IsWhole(double x) { return std::isfinite(x) && x == std::floor(x); }

void CheckAtom(const PipelineExpr& node) {
  const std::vector<double>& a = node.args;
  switch (node.kind) {
    case Kind::kEpsDelta:
      if (!(a[0] >= 0)) TypeFailure(node, "eps must be >= 0");
      if (!(a[1] >= 0 && a[1] <= 1)) TypeFailure(node, "delta not in [0, 1]");
      break;
    case Kind::kRandomResponse:
      if (!(a[0] >= 0)) TypeFailure(node, "eps must be >= 0");
      break;
    case Kind::kUniform:
      if (!IsWhole(a[0]) || a[0] < 1) {
        TypeFailure(node, "size must be a positive integer");
      }
      break;
    case Kind::kGeometric:
      if (!IsWhole(a[0]) || a[0] < 2) {
        TypeFailure(node, "size must be an integer >= 2");
      }
      if (!(a[1] > 0)) TypeFailure(node, "eps must be > 0");
      break;
    case Kind::kPoisson:
      if (!(a[0] >= 0 && a[0] <= 1)) TypeFailure(node, "gamma not in [0, 1]");
      break;
    default:
      break;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PipelineExpr ParseAll() {
    PipelineExpr expr = ParseChoice();
    SkipSpace();
    if (pos_ != text_.size()) Fail({"end of input", "||", ".", "["});
    return expr;
  }

 private:
  [[noreturn]] void Fail(std::vector<std::string> expected) {
    throw ParseError(pos_, std::move(expected));
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Peek(std::string_view token) {
    SkipSpace();
    return text_.substr(pos_, token.size()) == token;
  }

  void Expect(std::string_view token) {
    if (!Peek(token)) Fail({std::string(token)});
    pos_ += token.size();
  }

  double ParseNumber() {
    SkipSpace();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0;
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc() || std::isnan(value)) Fail({"number"});
    pos_ += static_cast<std::size_t>(result.ptr - begin);
    return value;
  }

  PipelineExpr Binary(Kind kind, std::size_t offset, PipelineExpr lhs,
                      PipelineExpr rhs, double weight = 0) {
    PipelineExpr node;
    node.kind = kind;
    node.offset = offset;
    node.weight = weight;
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  PipelineExpr ParseChoice() {
    PipelineExpr lhs = ParsePar();
    while (Peek("[")) {
      const std::size_t offset = pos_;
      ++pos_;
      const double weight = ParseNumber();
      Expect("]");
      Kind kind;
      if (Peek("+")) {
        kind = Kind::kVisible;
      } else if (Peek("#")) {
        kind = Kind::kHidden;
      } else {
        Fail({"+", "#"});
      }
      ++pos_;
      PipelineExpr rhs = ParsePar();
      lhs = Binary(kind, offset, std::move(lhs), std::move(rhs), weight);
      if (!(weight >= 0 && weight <= 1)) {
        TypeFailure(lhs, "choice weight not in [0, 1]");
      }
    }
    return lhs;
  }

  PipelineExpr ParsePar() {
    PipelineExpr lhs = ParseComp();
    while (Peek("||")) {
      const std::size_t offset = pos_;
      pos_ += 2;
      lhs = Binary(Kind::kParallel, offset, std::move(lhs), ParseComp());
    }
    return lhs;
  }

  PipelineExpr ParseComp() {
    PipelineExpr lhs = ParseAtom();
    while (Peek(".")) {
      const std::size_t offset = pos_;
      ++pos_;
      lhs = Binary(Kind::kCompose, offset, std::move(lhs), ParseAtom());
    }
    return lhs;
  }

  PipelineExpr ParseAtom() {
    SkipSpace();
    PipelineExpr node;
    node.offset = pos_;
    if (Peek("(")) {
      ++pos_;
      PipelineExpr inner = ParseChoice();
      Expect(")");
      return inner;
    }
    if (Peek("@")) {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ')' &&
             !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (pos_ == start) Fail({"path"});
      node.kind = Kind::kFile;
      node.path = std::string(text_.substr(start, pos_ - start));
      return node;
    }
    if (Peek("\"")) {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        node.path += text_[pos_++];
      }
      if (pos_ == text_.size()) Fail({"\""});
      ++pos_;
      node.kind = Kind::kFile;
      return node;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    std::size_t arity;
    if (name == "ED") {
      node.kind = Kind::kEpsDelta;
      arity = 2;
    } else if (name == "RR") {
      node.kind = Kind::kRandomResponse;
      arity = 1;
    } else if (name == "U") {
      node.kind = Kind::kUniform;
      arity = 1;
    } else if (name == "Geo") {
      node.kind = Kind::kGeometric;
      arity = 2;
    } else if (name == "Poisson") {
      node.kind = Kind::kPoisson;
      arity = 1;
    } else if (name == "Sort") {
      node.kind = Kind::kSort;
      Expect("(");
      node.children.push_back(ParseChoice());
      Expect(")");
      return node;
    } else {
      pos_ = start;
      Fail(AtomStarts());
    }
    Expect("(");
    for (std::size_t i = 0; i < arity; ++i) {
      if (i > 0) Expect(",");
      node.args.push_back(ParseNumber());
    }
    Expect(")");
    CheckAtom(node);
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

GeneralChannel Positional(const Channel2& channel,
                          const NumericPolicy& policy) {
  return GeneralChannel::FromChannel2(Channel2::Create(
      IndexLabels(channel.size()), channel.p(), channel.q(), policy));
}

Channel2 TwoRow(const GeneralChannel& channel, const PipelineExpr& node,
                const NumericPolicy& policy) {
  if (channel.rows() != 2) {
    TypeFailure(node, "operand has " + std::to_string(channel.rows()) +
                          " rows; two are required");
  }
  return channel.ToChannel2(policy);
}

ExtendedReal Eps(double x) { return ExtendedReal::Finite(x); }

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected)
    : Error(ErrorCode::kSyntax, "at offset " + std::to_string(offset) +
                                    ": expected " + JoinExpected(expected)),
      offset_(offset),
      expected_(std::move(expected)) {}

PipelineExpr ParsePipeline(std::string_view text) {
  return Parser(text).ParseAll();
}

std::string ToString(const PipelineExpr& expr) {
  const std::vector<double>& a = expr.args;
  switch (expr.kind) {
    case Kind::kEpsDelta:
      return "ED(" + Number(a[0]) + "," + Number(a[1]) + ")";
    case Kind::kRandomResponse:
      return "RR(" + Number(a[0]) + ")";
    case Kind::kUniform:
      return "U(" + Number(a[0]) + ")";
    case Kind::kGeometric:
      return "Geo(" + Number(a[0]) + "," + Number(a[1]) + ")";
    case Kind::kPoisson:
      return "Poisson(" + Number(a[0]) + ")";
    case Kind::kSort:
      return "Sort(" + ToString(expr.children[0]) + ")";
    case Kind::kFile: {
      std::string out = "\"";
      for (char c : expr.path) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      return out + "\"";
    }
    case Kind::kParallel:
      return "(" + ToString(expr.children[0]) + " || " +
             ToString(expr.children[1]) + ")";
    case Kind::kVisible:
    case Kind::kHidden:
      return "(" + ToString(expr.children[0]) + " [" + Number(expr.weight) +
             "]" + (expr.kind == Kind::kVisible ? "+ " : "# ") +
             ToString(expr.children[1]) + ")";
    case Kind::kCompose:
      return "(" + ToString(expr.children[0]) + " . " +
             ToString(expr.children[1]) + ")";
  }
  return "";
}

ChannelLoader FileLoader(const NumericPolicy& policy) {
  return [policy](const std::string& path) {
    return ParseChannelJson(ReadFile(path), policy);
  };
}

GeneralChannel EvalPipeline(const PipelineExpr& expr,
                            const ChannelLoader& loader,
                            const NumericPolicy& policy) {
  const std::vector<double>& a = expr.args;
  switch (expr.kind) {
    case Kind::kEpsDelta:
      return Positional(
          CanonicalEpsDelta(EpsDelta::Create(Eps(a[0]), a[1]), policy), policy);
    case Kind::kRandomResponse:
      return Positional(RandomResponse(Eps(a[0]), policy), policy);
    case Kind::kUniform:
      return GeneralChannel::FromChannel2(
          UniformChannel(static_cast<std::size_t>(a[0]), policy));
    case Kind::kGeometric:
      return TruncatedGeometric(static_cast<std::size_t>(a[0]), a[1], policy);
    case Kind::kPoisson:
      return SubsamplePoisson(a[0], policy);
    case Kind::kSort:
      return Positional(
          RatioOrdered(TwoRow(EvalPipeline(expr.children[0], loader, policy),
                              expr, policy),
                       policy),
          policy);
    case Kind::kFile:
      return loader(expr.path);
    default:
      break;
  }
  const GeneralChannel lhs = EvalPipeline(expr.children[0], loader, policy);
  const GeneralChannel rhs = EvalPipeline(expr.children[1], loader, policy);
  if (expr.kind == Kind::kCompose) {
    if (lhs.cols() != rhs.rows()) {
      TypeFailure(expr, "inner dimensions differ (" +
                            std::to_string(lhs.cols()) + " vs " +
                            std::to_string(rhs.rows()) + ")");
    }
    return Multiply(lhs, rhs, policy);
  }
  const Channel2 c = TwoRow(lhs, expr, policy);
  const Channel2 m = TwoRow(rhs, expr, policy);
  switch (expr.kind) {
    case Kind::kParallel:
      return GeneralChannel::FromChannel2(Parallel(c, m, policy));
    case Kind::kVisible:
      return GeneralChannel::FromChannel2(
          VisibleChoice(c, m, expr.weight, policy));
    default:
      return GeneralChannel::FromChannel2(
          HiddenChoice(c, m, expr.weight, policy));
  }
}

}  // namespace fdpqif
