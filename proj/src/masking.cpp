// src/masking.cpp

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

#include "psyfe/masking.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace psyfe {

void EngineConfig::Validate() const {
  if (!(oae_mu >= 0.0) || !std::isfinite(oae_mu))
    throw std::invalid_argument("oae_mu must be a finite value >= 0");
  vad.Validate();
}

BandSplit SplitBands(std::size_t bins) {
  if (bins < 2) throw std::invalid_argument("band split needs at least 2 bins");
  const std::size_t half = bins / 2;
  return BandSplit{0, half, half, bins};
}

std::pair<ComplexMatrix, ComplexMatrix> SplitBands(const ComplexMatrix &spec) {
  const BandSplit split = SplitBands(spec.rows());
  ComplexMatrix low(split.low_end - split.low_begin, spec.cols());
  ComplexMatrix high(split.high_end - split.high_begin, spec.cols());
  for (std::size_t f = 0; f < low.rows(); ++f)
    std::copy(spec.row(f).begin(), spec.row(f).end(), low.row(f).begin());
  for (std::size_t f = 0; f < high.rows(); ++f)
    std::copy(spec.row(split.high_begin + f).begin(), spec.row(split.high_begin + f).end(),
              high.row(f).begin());
  return {std::move(low), std::move(high)};
}

ComplexMatrix JoinBands(const ComplexMatrix &low, const ComplexMatrix &high) {
  if (low.cols() != high.cols())
    throw std::invalid_argument("band frame counts differ");
  ComplexMatrix out(low.rows() + high.rows(), low.cols());
  for (std::size_t f = 0; f < low.rows(); ++f)
    std::copy(low.row(f).begin(), low.row(f).end(), out.row(f).begin());
  for (std::size_t f = 0; f < high.rows(); ++f)
    std::copy(high.row(f).begin(), high.row(f).end(), out.row(low.rows() + f).begin());
  return out;
}

void FilterRows(const ComplexMatrix &in, std::size_t row_begin, std::size_t row_end,
                std::span<const KernelGrid *const> kernels,
                std::span<const std::uint8_t> selector, ComplexMatrix *out, Exec exec) {
  if (out == nullptr || out->rows() != in.rows() || out->cols() != in.cols())
    throw std::invalid_argument("output matrix must match the input shape");
  if (row_begin > row_end || row_end > in.rows())
    throw std::invalid_argument("row range outside the spectrogram");
  if (selector.size() != in.cols())
    throw std::invalid_argument("kernel selector length must equal the frame count");
  if (kernels.empty()) throw std::invalid_argument("no kernels supplied");
  for (const KernelGrid *k : kernels)
    if (k == nullptr || !(k->geometry() == kernels[0]->geometry()))
      throw std::invalid_argument("kernels must share one geometry");
  for (std::uint8_t s : selector)
    if (s >= kernels.size()) throw std::invalid_argument("kernel selector out of range");
  if (row_begin == row_end || in.cols() == 0) return;
  if (exec == Exec::kSerial)
    detail::FilterRowsSerial(in, row_begin, row_end, kernels, selector, out);
  else
    detail::FilterRowsParallel(in, row_begin, row_end, kernels, selector, out);
}

ComplexMatrix ApplyAdaptive(const ComplexMatrix &spec,
                            std::span<const std::uint8_t> speech,
                            const EngineConfig &config, Exec exec) {
  config.Validate();
  if (speech.size() != spec.cols())
    throw std::invalid_argument("VAD track has " + std::to_string(speech.size()) +
                                " frames, spectrogram has " +
                                std::to_string(spec.cols()));
  ComplexMatrix out(spec.rows(), spec.cols());
  if (spec.empty()) return out;
  const bool norm = config.normalize_kernels;

  if (!config.adaptive) {
    const MaskKernel k = PsychoKernel(Band::kHigh, true, norm);
    const std::array<const KernelGrid *, 1> ks = {&k};
    const std::vector<std::uint8_t> sel(spec.cols(), 0);
    FilterRows(spec, 0, spec.rows(), ks, sel, &out, exec);
    return out;
  }

  std::vector<std::uint8_t> sel(speech.begin(), speech.end());
  for (auto &s : sel) s = s ? 1 : 0;
  const BandSplit split = SplitBands(spec.rows());
  for (Band band : {Band::kLow, Band::kHigh}) {
    const MaskKernel quiet = PsychoKernel(band, false, norm);
    const MaskKernel active = PsychoKernel(band, true, norm);
    const std::array<const KernelGrid *, 2> ks = {&quiet, &active};
    if (band == Band::kLow)
      FilterRows(spec, split.low_begin, split.low_end, ks, sel, &out, exec);
    else
      FilterRows(spec, split.high_begin, split.high_end, ks, sel, &out, exec);
  }
  return out;
}

ComplexMatrix ApplyOae(const ComplexMatrix &spec, const EngineConfig &config, Exec exec) {
  config.Validate();
  ComplexMatrix out(spec.rows(), spec.cols());
  if (spec.empty()) return out;
  const BandSplit split = SplitBands(spec.rows());
  const std::vector<std::uint8_t> sel(spec.cols(), 0);
  for (Band band : {Band::kLow, Band::kHigh}) {
    const OaeKernel k = MakeOaeKernel(band, config.oae_mu);
    const std::array<const KernelGrid *, 1> ks = {&k};
    if (band == Band::kLow)
      FilterRows(spec, split.low_begin, split.low_end, ks, sel, &out, exec);
    else
      FilterRows(spec, split.high_begin, split.high_end, ks, sel, &out, exec);
  }
  return out;
}

ComplexMatrix Process(const ComplexMatrix &spec, std::span<const std::uint8_t> speech,
                      const EngineConfig &config, Exec exec) {
  config.Validate();
  ComplexMatrix current = config.oae_enabled ? ApplyOae(spec, config, exec) : spec;
  if (config.filter_enabled) current = ApplyAdaptive(current, speech, config, exec);
  return current;
}

ComplexSpectrogram Process(const ComplexSpectrogram &spec, const EngineConfig &config,
                           std::vector<std::uint8_t> *speech_out, Exec exec) {
  config.Validate();
  std::vector<std::uint8_t> speech(spec.frames(), 0);
  if (config.filter_enabled && config.adaptive && spec.frames() > 0)
    speech = RunVad(PowerSpectrogram(spec.data), config.vad).speech;
  ComplexSpectrogram result = spec;
  result.data = Process(spec.data, speech, config, exec);
  if (speech_out != nullptr) *speech_out = std::move(speech);
  return result;
}

}  // namespace psyfe
