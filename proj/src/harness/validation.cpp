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

#include "sar/harness/validation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "sar/analytics.hpp"
#include "sar/sim/poisson.hpp"

namespace sar::harness {

namespace {

double rel_or_abs_error(double empirical, double reference) {
  const double diff = std::abs(empirical - reference);
  return reference > 0.0 ? diff / reference : diff;
}

}  // namespace

ValidationReport validate_analytic(const std::vector<double>& lambdas,
                                   long samples, std::uint64_t seed) {
  if (samples < 10000)
    throw std::invalid_argument("validate_analytic: needs at least 10^4 samples");

  ValidationReport report;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const double lambda = lambdas[i];
    if (lambda < 0.0)
      throw std::invalid_argument("validate_analytic: lambda must be non-negative");

    std::mt19937_64 rng(seed + i);
    double sum_recip = 0.0;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (long s = 0; s < samples; ++s) {
      const double t = static_cast<double>(sim::sample_encounters(lambda, rng));
      sum_recip += 1.0 / (t + 1.0);
      sum += t;
      sum_sq += t * t;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double variance = (sum_sq - n * mean * mean) / (n - 1.0);

    LambdaValidation row;
    row.lambda = lambda;
    row.samples = samples;
    row.analytic_reciprocal = analytics::poisson_reciprocal_expectation(lambda);
    row.empirical_reciprocal = sum_recip / n;
    row.reciprocal_rel_error =
        rel_or_abs_error(row.empirical_reciprocal, row.analytic_reciprocal);
    row.empirical_mean = mean;
    row.mean_rel_error = rel_or_abs_error(mean, lambda);
    row.empirical_variance = variance;
    row.variance_rel_error = rel_or_abs_error(variance, lambda);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace sar::harness
