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

#pragma once

#include <cstdint>
#include <vector>

namespace sar::harness {

/// Monte Carlo cross-check of the closed forms at one rate: the sampled
/// mean of 1/(T+1) against (1 - e^-lambda)/lambda, and the sampled mean
/// and variance of T against lambda.
struct LambdaValidation {
  double lambda = 0.0;
  long samples = 0;
  double analytic_reciprocal = 0.0;
  double empirical_reciprocal = 0.0;
  double reciprocal_rel_error = 0.0;
  double empirical_mean = 0.0;
  double mean_rel_error = 0.0;
  double empirical_variance = 0.0;
  double variance_rel_error = 0.0;
};

struct ValidationReport {
  std::vector<LambdaValidation> rows;
};

/// Draws `samples` Poisson variates per lambda from a stream seeded with
/// `seed + row index`. Requires samples >= 10000 and non-negative rates.
/// Relative errors fall back to absolute differences at lambda = 0.
ValidationReport validate_analytic(const std::vector<double>& lambdas,
                                   long samples, std::uint64_t seed);

}  // namespace sar::harness
