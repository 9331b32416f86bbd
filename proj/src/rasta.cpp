// src/rasta.cpp

// Copyright 2026  The psyfe Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>

#include "psyfe/eval.hpp"

namespace psyfe {

RealMatrix RastaFilter(const RealMatrix &trajectories) {
  const std::size_t frames = trajectories.rows(), dims = trajectories.cols();
  RealMatrix out(frames, dims, 0.0);
  if (frames == 0) return out;
  const auto last = static_cast<long>(frames) - 1;
  for (std::size_t j = 0; j < dims; ++j) {
    auto x = [&](long n) {
      return trajectories(static_cast<std::size_t>(std::clamp(n, 0L, last)), j);
    };
    double prev = 0.0;
    for (long n = 0; n <= last; ++n) {
      // Output n of the advanced filter is sample n + 4 of the causal one.
      const double fir = 2.0 * x(n + 4) + x(n + 3) - x(n + 1) - 2.0 * x(n);
      prev = 0.98 * prev + 0.1 * fir;
      out(static_cast<std::size_t>(n), j) = prev;
    }
  }
  return out;
}

}  // namespace psyfe
