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

#include <random>

namespace sar::sim {

/// One Poisson(lambda) draw by CDF inversion on the seeded stream. Large
/// rates are split into chunks of at most 30 (Poisson sums are Poisson),
/// which keeps the inversion free of exp underflow. Rejects negative
/// lambda.
long sample_encounters(double lambda, std::mt19937_64& rng);

}  // namespace sar::sim
