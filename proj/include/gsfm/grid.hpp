// Copyright 2026 The gsfm Authors
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
#include <vector>

#include "gsfm/error.hpp"

namespace gsfm {

/// `points` equally spaced values from lo to hi inclusive.
inline std::vector<double> linspace(double lo, double hi, std::size_t points) {
  if (points == 0) throw InvalidArgument("linspace: need at least one point");
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    out[i] = lo + step * static_cast<double>(i);
  }
  out.back() = hi;
  return out;
}

/// `points` equally spaced values covering [lo, hi) (hi excluded), the
/// sampling grid of a periodic window.
inline std::vector<double> periodic_grid(double lo, double hi,
                                         std::size_t points) {
  if (points == 0) throw InvalidArgument("periodic_grid: need points > 0");
  std::vector<double> out(points);
  const double step = (hi - lo) / static_cast<double>(points);
  for (std::size_t i = 0; i < points; ++i) {
    out[i] = lo + step * static_cast<double>(i);
  }
  return out;
}

}  // namespace gsfm
