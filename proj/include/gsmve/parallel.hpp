// Copyright 2026 The gsmve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace gsmve {

// Number of worker threads: GSL_THREADS if set to a positive integer,
// otherwise the hardware concurrency (at least 1).
unsigned worker_count();

// Calls body(i) for i in [0, n) on up to worker_count() threads. Each index is
// visited exactly once; callers write results into per-index slots. The first
// exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Neumaier-compensated sum in index order.
double compensated_sum(std::span<const double> values);

struct MeanAndError {
  double mean = 0.0;
  double std_error = 0.0;
};

// Mean and standard error of the mean. `population` selects the population
// standard deviation (exact enumeration) instead of the sample one. Computed
// with a shift by the first value, so identical inputs give an error of
// exactly zero.
MeanAndError mean_and_error(std::span<const double> values, bool population);

}  // namespace gsmve
