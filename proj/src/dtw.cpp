// src/dtw.cpp

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

#include <cmath>
#include <limits>
#include <stdexcept>

#include "psyfe/eval.hpp"

namespace psyfe {

DtwResult Dtw(const RealMatrix &a, const RealMatrix &b) {
  if (a.rows() == 0 || b.rows() == 0) throw std::invalid_argument("DTW needs non-empty sequences");
  if (a.cols() != b.cols())
    throw std::invalid_argument("DTW dimension mismatch: " + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.cols()));
  const std::size_t n = a.rows(), m = b.rows(), dims = a.cols();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> cost((n + 1) * (m + 1), kInf);
  std::vector<std::size_t> len((n + 1) * (m + 1), 0);
  auto idx = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };
  cost[idx(0, 0)] = 0.0;

  for (std::size_t i = 1; i <= n; ++i) {
    auto ra = a.row(i - 1);
    for (std::size_t j = 1; j <= m; ++j) {
      auto rb = b.row(j - 1);
      double d2 = 0.0;
      for (std::size_t k = 0; k < dims; ++k) {
        const double d = ra[k] - rb[k];
        d2 += d * d;
      }
      // Predecessors: diagonal, vertical, horizontal. Lower cost wins, then
      // the shorter path.
      std::size_t best = idx(i - 1, j - 1);
      for (std::size_t cand : {idx(i - 1, j), idx(i, j - 1)}) {
        if (cost[cand] < cost[best] || (cost[cand] == cost[best] && len[cand] < len[best]))
          best = cand;
      }
      cost[idx(i, j)] = cost[best] + std::sqrt(d2);
      len[idx(i, j)] = len[best] + 1;
    }
  }
  DtwResult r;
  r.path_length = len[idx(n, m)];
  r.distance = cost[idx(n, m)] / static_cast<double>(r.path_length);
  return r;
}

Classification DtwClassify(const FeatureMatrix &query, std::span<const Template> templates) {
  if (templates.empty()) throw std::invalid_argument("no templates to classify against");
  Classification best{templates[0].label, 0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < templates.size(); ++i) {
    const double d = Dtw(query.data, templates[i].features.data).distance;
    if (d < best.distance) {
      best.distance = d;
      best.index = i;
      best.label = templates[i].label;
    }
  }
  return best;
}

}  // namespace psyfe
