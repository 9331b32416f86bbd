// include/psyfe/masking.hpp

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

#ifndef PSYFE_MASKING_HPP_
#define PSYFE_MASKING_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "psyfe/dsp.hpp"
#include "psyfe/kernels.hpp"
#include "psyfe/matrix.hpp"
#include "psyfe/vad.hpp"

namespace psyfe {

/// Selects between the OpenMP kernel and the serial reference loop. Both
/// produce bit-identical output.
enum class Exec { kSerial, kParallel };

struct EngineConfig {
  bool filter_enabled = true;  // adaptive masking stage on/off
  bool adaptive = true;        // band split + VAD-selected centre taps
  bool normalize_kernels = true;
  bool oae_enabled = true;
  double oae_mu = 0.1;
  NoiseTrackerConfig vad;

  void Validate() const;
};

/// Half-open bin ranges. The low band takes floor(B/2) bins.
struct BandSplit {
  std::size_t low_begin = 0, low_end = 0;
  std::size_t high_begin = 0, high_end = 0;
};

BandSplit SplitBands(std::size_t bins);
std::pair<ComplexMatrix, ComplexMatrix> SplitBands(const ComplexMatrix &spec);
ComplexMatrix JoinBands(const ComplexMatrix &low, const ComplexMatrix &high);

/// One output cell: sum over the kernel support of K(df, dt) * Y(f+df, t-dt).
/// Cells outside [row_begin, row_end) x [0, frames) read as zero. Throws
/// std::out_of_range if (f, t) lies outside that region.
Complex MaskingSum(const ComplexMatrix &spec, const KernelGrid &kernel,
                   std::size_t f, std::size_t t);
Complex MaskingSum(const ComplexMatrix &spec, const KernelGrid &kernel,
                   std::size_t f, std::size_t t, std::size_t row_begin,
                   std::size_t row_end);

/// Filters rows [row_begin, row_end) of `in` into the same rows of `out`,
/// treating that row range as an isolated submatrix. Frame t uses
/// kernels[selector[t]]. All kernels must share one geometry.
void FilterRows(const ComplexMatrix &in, std::size_t row_begin, std::size_t row_end,
                std::span<const KernelGrid *const> kernels,
                std::span<const std::uint8_t> selector, ComplexMatrix *out,
                Exec exec = Exec::kParallel);

/// Adaptive psychoacoustic stage. With config.adaptive the low and high bands
/// are filtered independently and the centre tap of frame t follows speech[t];
/// otherwise the whole matrix is filtered with the high-band speech kernel.
ComplexMatrix ApplyAdaptive(const ComplexMatrix &spec,
                            std::span<const std::uint8_t> speech,
                            const EngineConfig &config, Exec exec = Exec::kParallel);

/// OAE pre-filter with band-specific kernels over the same band split.
ComplexMatrix ApplyOae(const ComplexMatrix &spec, const EngineConfig &config,
                       Exec exec = Exec::kParallel);

/// OAE stage (if enabled) then the masking stage (if enabled), with the given
/// per-frame speech flags.
ComplexMatrix Process(const ComplexMatrix &spec, std::span<const std::uint8_t> speech,
                      const EngineConfig &config, Exec exec = Exec::kParallel);

/// As above, with speech flags from the VAD run on |input|^2 before any
/// filtering. The flags are returned through `speech_out` when non-null.
ComplexSpectrogram Process(const ComplexSpectrogram &spec, const EngineConfig &config,
                           std::vector<std::uint8_t> *speech_out = nullptr,
                           Exec exec = Exec::kParallel);

namespace detail {
// Serial reference, one cell at a time with explicit bounds checks.
void FilterRowsSerial(const ComplexMatrix &in, std::size_t row_begin,
                      std::size_t row_end, std::span<const KernelGrid *const> kernels,
                      std::span<const std::uint8_t> selector, ComplexMatrix *out);
// OpenMP kernel, parallel over rows, vectorizable over frames.
void FilterRowsParallel(const ComplexMatrix &in, std::size_t row_begin,
                        std::size_t row_end, std::span<const KernelGrid *const> kernels,
                        std::span<const std::uint8_t> selector, ComplexMatrix *out);
}  // namespace detail

}  // namespace psyfe

#endif  // PSYFE_MASKING_HPP_
