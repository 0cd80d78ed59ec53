// Copyright 2026 The HRI Toolkit Authors
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

#ifndef HRI__SCORING_KERNELS_HPP_
#define HRI__SCORING_KERNELS_HPP_

#include "hri/corridor.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hri
{

/// Row-major segments x attributes adequacy matrix.
struct AdequacyMatrix
{
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Adequacy> data;

  std::span<const Adequacy> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
};

AdequacyMatrix to_adequacy_matrix(const CorridorProfile & profile);

// Both kernels write one readiness percentage per row into `out` and must
// produce bit-identical results. `weights.size()` must equal `m.cols` and
// `out.size()` must equal `m.rows`; violations throw Error(Validation).
void readiness_scores_serial(
  const AdequacyMatrix & m, std::span<const double> weights, std::span<double> out);
void readiness_scores_parallel(
  const AdequacyMatrix & m, std::span<const double> weights, std::span<double> out);

}  // namespace hri

#endif  // HRI__SCORING_KERNELS_HPP_
