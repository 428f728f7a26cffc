// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MFORGE_WITNESS_HPP_
#define MFORGE_WITNESS_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mforge/error.hpp"
#include "mforge/matroid.hpp"

namespace mforge {

struct LineWitness {
  // A minor of the input that is exactly U_{2,k}.
  MinorSpec spec;
  int k = 0;
};

// P simple of rank 3 with P \ e isomorphic to PG(2, q): contracting e leaves at
// least q^2 + 1 parallel classes. Throws PreconditionError when the hypotheses
// fail and Error if the class count is too small.
LineWitness line_from_pg_extension(const MatroidPtr& p, const std::string& e, long long q);

// A hypothesis of a proof step does not hold for the given input.
class HypothesisError : public PreconditionError {
 public:
  HypothesisError(const std::string& hypothesis, const std::string& detail)
      : PreconditionError(hypothesis + ": " + detail), hypothesis(hypothesis) {}
  std::string hypothesis;
};

struct PairResult {
  std::string f;
  std::string g;
  // A[x, g] after scaling row x so that A[x, f] = 1.
  Element omega;
  // The input with row x scaled as above and column x rescaled to stay a unit
  // column.
  Matrix scaled;
};

// The least pair {f, g} of E - x (ground order) with A[x,f], A[x,g] nonzero,
// A[x,f]^-1 A[x,g] outside GF(q), and {f, g} independent in M / x. When no
// pair exists the failed hypothesis is diagnosed (for instance a triad
// {f, x, y} that is both a circuit and a cocircuit).
PairResult nonsubfield_pair(const Matrix& a, const std::string& x, long long q, const MatroidPtr& m);

// Exhaustive search over the rank-k flats of an affine geometry G (each is an
// AG(k-1, q) restriction), in lexicographic order. Returns the first one whose
// elements all share a color. Throws PreconditionError if G is not an affine
// geometry or k exceeds its rank.
std::optional<Set> monochromatic_ag(const Matroid& g, const std::map<std::string, std::uint32_t>& coloring, int k);

// Every intermediate object of the long-line extraction.
struct WitnessTrace {
  std::string x;
  std::optional<std::string> y;
  int stage = 0;
  // "main", "shortcut" or "extension".
  std::string route = "main";

  std::string f, g;
  std::uint32_t omega = 0;
  Labels hyperplane;
  std::string z;
  Labels cocircuit;
  std::map<std::string, std::uint32_t> coloring;
  int distinct_colors = 0;
  Labels monochromatic;
  std::uint32_t beta = 0;
  Labels linking;
  int linking_value = 0;
  Labels contracted;                        // B'' - Y
  std::vector<std::uint32_t> u;             // over the columns of the matrix
  Labels border_rows, border_cols;          // D
  std::vector<std::uint32_t> border;        // row-major entries of D
  std::uint32_t ratio = 0;                  // D[x,g] / D[x,f]
  std::vector<std::uint32_t> alpha, alpha_prime, contracted_column;
  int bad_lines = 0;
  std::string e;
  MinorSpec output;
  int k = 0;
};

// A stage of the extraction could not be completed; the trace holds every
// stage before it.
class StageFailure : public Error {
 public:
  StageFailure(std::string stage, const std::string& detail, WitnessTrace trace)
      : Error(stage + ": " + detail), stage(std::move(stage)), trace(std::move(trace)) {}
  std::string stage;
  WitnessTrace trace;
};

struct ExtractionResult {
  MinorSpec spec;
  WitnessTrace trace;
};

// Replays the U_{2,q^2+1} extraction on M' with representation A in standard
// form with respect to B u {x}, where N = M'/x (or M'/x \ y) is PG(n-1, q) with
// a GF(q) representation A[B, E(N)], and A is not a scaled GF(q)-matrix.
// Failures: StageFailure tagged NoMonochromaticAG, NoLinkingValue,
// DegenerateBorder, RatioInSubfield, BadLineCount or NoAvoidingElement.
ExtractionResult extract_long_line(const MatroidPtr& m, const std::string& x, const std::optional<std::string>& y,
                                   const Matrix& a, long long q);

}  // namespace mforge

#endif  // MFORGE_WITNESS_HPP_
