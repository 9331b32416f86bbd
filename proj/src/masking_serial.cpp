// src/masking_serial.cpp

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

// Serial reference for the masking filter. The OpenMP kernel is tested and
// benchmarked against it.

#include <stdexcept>

#include "psyfe/masking.hpp"

namespace psyfe {

Complex MaskingSum(const ComplexMatrix &spec, const KernelGrid &kernel,
                   std::size_t f, std::size_t t, std::size_t row_begin,
                   std::size_t row_end) {
  if (row_begin > row_end || row_end > spec.rows())
    throw std::out_of_range("row range outside the spectrogram");
  if (f < row_begin || f >= row_end || t >= spec.cols())
    throw std::out_of_range("masking cell outside the spectrogram");
  const KernelGeometry &g = kernel.geometry();
  const auto fi = static_cast<long>(f), ti = static_cast<long>(t);
  Complex acc(0.0, 0.0);
  for (int dt = 0; dt <= g.dt_max; ++dt) {
    const long src_t = ti - dt;
    if (src_t < 0) break;
    for (int df = g.df_min; df <= g.df_max; ++df) {
      const long src_f = fi + df;
      if (src_f < static_cast<long>(row_begin) || src_f >= static_cast<long>(row_end))
        continue;
      acc += kernel(df, dt) * spec(static_cast<std::size_t>(src_f),
                                   static_cast<std::size_t>(src_t));
    }
  }
  return acc;
}

Complex MaskingSum(const ComplexMatrix &spec, const KernelGrid &kernel,
                   std::size_t f, std::size_t t) {
  return MaskingSum(spec, kernel, f, t, 0, spec.rows());
}

namespace detail {

void FilterRowsSerial(const ComplexMatrix &in, std::size_t row_begin,
                      std::size_t row_end, std::span<const KernelGrid *const> kernels,
                      std::span<const std::uint8_t> selector, ComplexMatrix *out) {
  for (std::size_t f = row_begin; f < row_end; ++f)
    for (std::size_t t = 0; t < in.cols(); ++t)
      (*out)(f, t) = MaskingSum(in, *kernels[selector[t]], f, t, row_begin, row_end);
}

}  // namespace detail
}  // namespace psyfe
