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

#include "hri/scoring_kernels.hpp"

#include "hri/error.hpp"
#include "scoring_core.hpp"

#include <cmath>
#include <string>

namespace hri
{
namespace
{

void check_shapes(const AdequacyMatrix & m, std::span<const double> weights, std::span<double> out)
{
  if (weights.size() != m.cols || out.size() != m.rows || m.data.size() != m.rows * m.cols) {
    throw Error(ErrorKind::Validation, "readiness kernel: inconsistent matrix, weight or output sizes");
  }
  double sum = 0.0;
  for (const double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorKind::Validation, "readiness kernel: weights must be finite and non-negative");
    }
    sum += w;
  }
  if (!(sum > 0.0)) {
    throw Error(ErrorKind::Validation, "readiness kernel: weight sum must be positive");
  }
}

}  // namespace

AdequacyMatrix to_adequacy_matrix(const CorridorProfile & profile)
{
  AdequacyMatrix m;
  m.rows = profile.segments.size();
  m.cols = kAttributeCount;
  m.data.reserve(m.rows * m.cols);
  for (const auto & s : profile.segments) {
    m.data.insert(m.data.end(), s.values.begin(), s.values.end());
  }
  return m;
}

void readiness_scores_serial(
  const AdequacyMatrix & m, std::span<const double> weights, std::span<double> out)
{
  check_shapes(m, weights, out);
  for (std::size_t r = 0; r < m.rows; ++r) {
    out[r] = detail::readiness_unchecked(weights.data(), m.data.data() + r * m.cols, m.cols);
  }
}

void readiness_scores_parallel(
  const AdequacyMatrix & m, std::span<const double> weights, std::span<double> out)
{
  check_shapes(m, weights, out);
  const auto rows = static_cast<std::ptrdiff_t>(m.rows);
  const double * w = weights.data();
  const Adequacy * v = m.data.data();
  const std::size_t cols = m.cols;
  double * o = out.data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    o[r] = detail::readiness_unchecked(w, v + static_cast<std::size_t>(r) * cols, cols);
  }
}

}  // namespace hri
