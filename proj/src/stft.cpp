// src/stft.cpp

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
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"
#include "psyfe/dsp.hpp"

namespace psyfe {

WindowType ParseWindowType(const std::string &name) {
  if (name == "hamming") return WindowType::kHamming;
  if (name == "hann") return WindowType::kHann;
  if (name == "rect") return WindowType::kRect;
  throw std::invalid_argument("unknown window type: " + name);
}

std::string ToString(WindowType type) {
  switch (type) {
    case WindowType::kHamming: return "hamming";
    case WindowType::kHann: return "hann";
    case WindowType::kRect: return "rect";
  }
  return "unknown";
}

void FrameConfig::Validate() const {
  if (hop == 0 || hop > frame_len || frame_len > nfft)
    throw std::invalid_argument("frame config requires 0 < hop <= frame_len <= nfft");
  if ((nfft & (nfft - 1)) != 0)
    throw std::invalid_argument("nfft must be a power of two");
  if (preemph < 0.0 || preemph >= 1.0)
    throw std::invalid_argument("preemph must lie in [0, 1)");
}

std::vector<double> MakeWindow(WindowType type, std::size_t length) {
  std::vector<double> w(length, 1.0);
  if (length < 2 || type == WindowType::kRect) return w;
  const double denom = static_cast<double>(length - 1);
  for (std::size_t i = 0; i < length; ++i) {
    const double c = std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / denom);
    w[i] = type == WindowType::kHamming ? 0.54 - 0.46 * c : 0.5 - 0.5 * c;
  }
  return w;
}

std::size_t NumFrames(std::size_t num_samples, const FrameConfig &config) {
  if (num_samples < config.frame_len) return 0;
  return (num_samples - config.frame_len) / config.hop + 1;
}

RealMatrix FrameSignal(const Signal &signal, const FrameConfig &config) {
  config.Validate();
  if (signal.sample_rate <= 0)
    throw std::invalid_argument("sample rate must be positive");
  const std::size_t n = NumFrames(signal.samples.size(), config);
  if (n == 0)
    throw std::invalid_argument("signal shorter than one frame (" +
                                std::to_string(signal.samples.size()) + " < " +
                                std::to_string(config.frame_len) + " samples)");
  const auto window = MakeWindow(config.window, config.frame_len);
  RealMatrix frames(n, config.frame_len);
  for (std::size_t t = 0; t < n; ++t) {
    const double *src = signal.samples.data() + t * config.hop;
    auto dst = frames.row(t);
    for (std::size_t i = 0; i < config.frame_len; ++i) {
      double x = src[i];
      if (!std::isfinite(x)) throw std::invalid_argument("signal contains non-finite samples");
      if (config.preemph > 0.0)
        x -= config.preemph * (i > 0 ? src[i - 1] : src[0]);
      dst[i] = x * window[i];
    }
  }
  return frames;
}

ComplexSpectrogram Stft(const RealMatrix &frames, std::size_t nfft,
                        int sample_rate, std::size_t hop) {
  if (frames.rows() == 0) throw std::invalid_argument("stft needs at least one frame");
  if (nfft < frames.cols())
    throw std::invalid_argument("nfft must be at least the frame length");
  const std::size_t count = frames.rows(), bins = nfft / 2 + 1;
  std::vector<double> padded(count * nfft, 0.0);
  for (std::size_t t = 0; t < count; ++t)
    std::copy(frames.row(t).begin(), frames.row(t).end(), padded.begin() + t * nfft);

  std::vector<Complex> rows(count * bins);
  internal::RealDftRows(padded.data(), count, nfft, rows.data());

  ComplexSpectrogram spec;
  spec.sample_rate = sample_rate;
  spec.hop = hop;
  spec.data = ComplexMatrix(bins, count);
  for (std::size_t t = 0; t < count; ++t)
    for (std::size_t b = 0; b < bins; ++b) spec.data(b, t) = rows[t * bins + b];
  return spec;
}

ComplexSpectrogram ComputeStft(const Signal &signal, const FrameConfig &config) {
  return Stft(FrameSignal(signal, config), config.nfft, signal.sample_rate,
              config.hop);
}

RealMatrix PowerSpectrogram(const ComplexMatrix &spec) {
  RealMatrix out(spec.rows(), spec.cols());
  for (std::size_t i = 0; i < spec.size(); ++i) out.values()[i] = std::norm(spec.values()[i]);
  return out;
}

RealMatrix MagnitudeSpectrogram(const ComplexMatrix &spec) {
  RealMatrix out(spec.rows(), spec.cols());
  for (std::size_t i = 0; i < spec.size(); ++i) out.values()[i] = std::abs(spec.values()[i]);
  return out;
}

}  // namespace psyfe
