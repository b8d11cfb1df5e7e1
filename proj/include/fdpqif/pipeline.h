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

// A small expression language for channel pipelines.
//
//   choice := par ( "[" number "]" ( "+" | "#" ) par )*
//   par    := comp ( "||" comp )*
//   comp   := atom ( "." atom )*
//   atom   := "(" choice ")"
//           | "ED(" eps "," delta ")" | "RR(" eps ")" | "U(" n ")"
//           | "Geo(" n "," eps ")" | "Poisson(" gamma ")"
//           | "Sort(" choice ")"
//           | "@" path | "\"" path "\""
//
// "[r]+" is visible choice, "[r]#" hidden choice (r weights the left
// operand), "||" parallel composition and "." matrix product. Built-in
// atoms label their outputs "0", "1", ... in column order; Sort orders a
// two-row channel by likelihood ratio. An unquoted path ends at whitespace
// or ")". Numbers accept "inf".

#ifndef FDPQIF_PIPELINE_H_
#define FDPQIF_PIPELINE_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fdpqif/core.h"

namespace fdpqif {

struct PipelineExpr {
  enum class Kind {
    kEpsDelta,
    kRandomResponse,
    kUniform,
    kGeometric,
    kPoisson,
    kSort,
    kFile,
    kParallel,
    kVisible,
    kHidden,
    kCompose,
  };

  Kind kind = Kind::kUniform;
  // Numeric atom arguments, in source order.
  std::vector<double> args;
  // Weight of the left operand for choices.
  double weight = 0;
  // File atoms only.
  std::string path;
  // Byte offset of the node in the source text.
  std::size_t offset = 0;
  std::vector<PipelineExpr> children;
};

// kSyntax error with the byte offset and the tokens that would have been
// accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Throws ParseError, or kType for out-of-range atom arguments and weights.
PipelineExpr ParsePipeline(std::string_view text);

// Fully parenthesised source text; parsing it yields the same tree.
std::string ToString(const PipelineExpr& expr);

using ChannelLoader = std::function<GeneralChannel(const std::string& path)>;

// Loads JSON channel files from disk.
ChannelLoader FileLoader(const NumericPolicy& policy = kDefaultPolicy);

// Throws kType when operand shapes do not fit, plus any module or loader
// error.
GeneralChannel EvalPipeline(const PipelineExpr& expr,
                            const ChannelLoader& loader,
                            const NumericPolicy& policy = kDefaultPolicy);

}  // namespace fdpqif

#endif  // FDPQIF_PIPELINE_H_
