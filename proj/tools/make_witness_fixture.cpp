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

// Searches for a rank-5 GF(4) matrix [PG(3,2) | x] whose long-line
// extraction takes the full route, and writes it as matrix and matroid files.

#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "mforge/connectivity.hpp"
#include "mforge/geometry.hpp"
#include "mforge/io.hpp"
#include "mforge/witness.hpp"

namespace {

mforge::Matrix candidate(const mforge::Matrix& pg, std::mt19937_64& rng, double density) {
  using mforge::Element;
  const mforge::FieldSpec gf4 = mforge::FieldSpec::of_order(4);
  mforge::Labels rows;
  for (int r = 0; r < pg.rows(); ++r) {
    std::string unit(static_cast<std::size_t>(pg.rows()), '0');
    unit[static_cast<std::size_t>(r)] = '1';
    rows.push_back(unit);
  }
  rows.push_back("x");
  mforge::Labels cols = pg.col_labels();
  cols.push_back("x");
  mforge::Matrix a(gf4, rows, cols);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> nonzero(1, 3);
  for (int c = 0; c < pg.cols(); ++c) {
    for (int r = 0; r < pg.rows(); ++r) a(r, c) = pg(r, c);
    bool unit = true;
    int ones = 0;
    for (int r = 0; r < pg.rows(); ++r) ones += pg(r, c).is_zero() ? 0 : 1;
    unit = ones == 1;
    if (!unit && coin(rng) < density) a(pg.rows(), c) = Element{nonzero(rng)};
  }
  a(pg.rows(), pg.cols()) = gf4.one();
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"witness fixture search"};
  std::uint64_t seed = 1;
  double density = 0.3;
  int attempts = 20000;
  std::string prefix = "witness_rank5_gf4";
  std::string expect = "main";
  app.add_option("--seed", seed);
  app.add_option("--density", density);
  app.add_option("--attempts", attempts);
  app.add_option("--prefix", prefix);
  app.add_option("--expect", expect, "main, or the tag of the stage failure to look for");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  const auto pg = mforge::pg(4, 2);
  for (int i = 0; i < attempts; ++i) {
    const mforge::Matrix a = candidate(pg->matrix(), rng, density);
    const auto m = std::make_shared<const mforge::LinearMatroid>(a);
    try {
      const auto result = mforge::extract_long_line(m, "x", std::nullopt, a, 2);
      if (expect != "main" || result.trace.route != "main") continue;
      std::cerr << "attempt " << i << ": k = " << result.trace.k
                << ", contracted = " << result.trace.contracted.size() << "\n";
      std::ofstream(prefix + "_matrix.json") << mforge::dump(mforge::matrix_to_json(a));
      std::ofstream(prefix + ".json") << mforge::dump(mforge::matroid_to_json(*m));
      return 0;
    } catch (const mforge::StageFailure& e) {
      if (e.stage == expect) {
        std::cerr << "attempt " << i << ": " << e.what() << "\n";
        std::ofstream(prefix + "_matrix.json") << mforge::dump(mforge::matrix_to_json(a));
        std::ofstream(prefix + ".json") << mforge::dump(mforge::matroid_to_json(*m));
        return 0;
      }
    } catch (const mforge::Error&) {
    }
  }
  std::cerr << "no fixture found\n";
  return 1;
}
