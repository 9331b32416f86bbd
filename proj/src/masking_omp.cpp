// src/masking_omp.cpp

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

#include <vector>

#include "psyfe/masking.hpp"

namespace psyfe::detail {

// Same per-cell summation order as the serial reference (dt outer, df inner),
// so results match it bit for bit. Rows are independent and split across
// threads; the innermost loop runs over frames.
void FilterRowsParallel(const ComplexMatrix &in, std::size_t row_begin,
                        std::size_t row_end, std::span<const KernelGrid *const> kernels,
                        std::span<const std::uint8_t> selector, ComplexMatrix *out) {
  const KernelGeometry &g = kernels[0]->geometry();
  const std::size_t frames = in.cols();
  const std::size_t taps = static_cast<std::size_t>(g.rows() * g.cols());
  const std::size_t nk = kernels.size();

  // coeff[tap * nk + k]: tap-major so the per-frame gather stays in one line.
  std::vector<double> coeff(taps * nk);
  for (std::size_t k = 0; k < nk; ++k) {
    auto c = kernels[k]->coeffs();
    for (std::size_t i = 0; i < taps; ++i) coeff[i * nk + k] = c[i];
  }

  const auto lo = static_cast<long>(row_begin), hi = static_cast<long>(row_end);
#pragma omp parallel
  {
    std::vector<Complex> acc(frames);
#pragma omp for schedule(static)
    for (long f = lo; f < hi; ++f) {
      std::fill(acc.begin(), acc.end(), Complex(0.0, 0.0));
      for (int dt = 0; dt <= g.dt_max; ++dt) {
        const auto shift = static_cast<std::size_t>(dt);
        if (shift >= frames) break;
        for (int df = g.df_min; df <= g.df_max; ++df) {
          const long src_f = f + df;
          if (src_f < lo || src_f >= hi) continue;
          const std::size_t tap =
              static_cast<std::size_t>((df - g.df_min) * g.cols() + dt);
          const double *kc = coeff.data() + tap * nk;
          const Complex *src = in.row(static_cast<std::size_t>(src_f)).data();
          for (std::size_t t = shift; t < frames; ++t)
            acc[t] += kc[selector[t]] * src[t - shift];
        }
      }
      auto dst = out->row(static_cast<std::size_t>(f));
      std::copy(acc.begin(), acc.end(), dst.begin());
    }
  }
}

}  // namespace psyfe::detail
