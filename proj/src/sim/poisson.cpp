/*
 * Copyright (C) 2026 sarsim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sar/sim/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace sar::sim {

namespace {

constexpr double kMaxChunk = 30.0;

long draw_small(double lambda, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = unif(rng);
  double term = std::exp(-lambda);
  double cum = term;
  long k = 0;
  while (u > cum) {
    ++k;
    term *= lambda / static_cast<double>(k);
    cum += term;
    if (term == 0.0) break;  // tail exhausted within double precision
  }
  return k;
}

}  // namespace

long sample_encounters(double lambda, std::mt19937_64& rng) {
  if (lambda < 0.0 || !std::isfinite(lambda))
    throw std::invalid_argument("sample_encounters: lambda must be finite and non-negative");
  if (lambda == 0.0) return 0;

  long total = 0;
  double remaining = lambda;
  while (remaining > kMaxChunk) {
    total += draw_small(kMaxChunk, rng);
    remaining -= kMaxChunk;
  }
  total += draw_small(remaining, rng);
  return total;
}

}  // namespace sar::sim
