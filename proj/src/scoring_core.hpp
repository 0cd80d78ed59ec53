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

#ifndef HRI__SCORING_CORE_HPP_
#define HRI__SCORING_CORE_HPP_

#include "hri/corridor.hpp"

#include <cstddef>

namespace hri::detail
{

/// Unchecked readiness percentage; callers guarantee a positive weight sum.
/// The numerator walks the terms in the same order as the denominator so that
/// v == const yields the exact ratio const / vmax.
inline double readiness_unchecked(const double * w, const Adequacy * v, std::size_t n)
{
  long double num = 0.0L;
  long double den = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    num += static_cast<long double>(w[i]) * static_cast<long double>(v[i]);
    den += static_cast<long double>(w[i]) * static_cast<long double>(kMaxAdequacy);
  }
  return static_cast<double>(num / den * 100.0L);
}

}  // namespace hri::detail

#endif  // HRI__SCORING_CORE_HPP_
