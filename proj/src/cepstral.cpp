// src/cepstral.cpp

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

#include "psyfe/cepstral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace psyfe {

void MelConfig::Validate(int sample_rate) const {
  if (sample_rate <= 0) throw std::invalid_argument("sample rate must be positive");
  if (n_mels < 1) throw std::invalid_argument("n_mels must be >= 1");
  if (n_ceps < 1 || n_ceps > n_mels)
    throw std::invalid_argument("n_ceps must lie in [1, n_mels]");
  if (!(fmin >= 0.0 && fmin < fmax && fmax <= sample_rate / 2.0))
    throw std::invalid_argument("mel range requires 0 <= fmin < fmax <= fs/2");
  if (delta_window < 1) throw std::invalid_argument("delta_window must be >= 1");
  if (!(log_floor > 0.0)) throw std::invalid_argument("log_floor must be > 0");
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

namespace {

// n_mels + 2 equally spaced mel points; filter m spans edges [m, m + 2].
std::vector<double> MelEdges(const MelConfig &config) {
  const double lo = HzToMel(config.fmin), hi = HzToMel(config.fmax);
  std::vector<double> edges(config.n_mels + 2);
  for (std::size_t i = 0; i < edges.size(); ++i)
    edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(config.n_mels + 1);
  return edges;
}

}  // namespace

std::vector<double> MelCenters(const MelConfig &config) {
  const auto edges = MelEdges(config);
  std::vector<double> centers(config.n_mels);
  for (std::size_t m = 0; m < config.n_mels; ++m) centers[m] = MelToHz(edges[m + 1]);
  return centers;
}

RealMatrix MelFilterbank(std::size_t nfft, int sample_rate, const MelConfig &config) {
  config.Validate(sample_rate);
  if (nfft < 2) throw std::invalid_argument("nfft must be >= 2");
  const std::size_t bins = nfft / 2 + 1;
  const auto edges = MelEdges(config);
  RealMatrix fb(config.n_mels, bins, 0.0);
  for (std::size_t m = 0; m < config.n_mels; ++m) {
    const double left = edges[m], center = edges[m + 1], right = edges[m + 2];
    for (std::size_t b = 0; b < bins; ++b) {
      const double mel =
          HzToMel(static_cast<double>(b) * sample_rate / static_cast<double>(nfft));
      double w = 0.0;
      if (mel > left && mel <= center)
        w = (mel - left) / (center - left);
      else if (mel > center && mel < right)
        w = (right - mel) / (right - center);
      fb(m, b) = w;
    }
  }
  return fb;
}

std::vector<double> Dct2(const std::vector<double> &x, std::size_t count) {
  const std::size_t n = x.size();
  if (count > n) throw std::invalid_argument("DCT count exceeds input length");
  std::vector<double> c(count, 0.0);
  const double s0 = std::sqrt(1.0 / static_cast<double>(n));
  const double sk = std::sqrt(2.0 / static_cast<double>(n));
  for (std::size_t k = 0; k < count; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      sum += x[i] * std::cos(std::numbers::pi * static_cast<double>(k) *
                             (static_cast<double>(i) + 0.5) / static_cast<double>(n));
    c[k] = (k == 0 ? s0 : sk) * sum;
  }
  return c;
}

std::vector<double> InverseDct2(const std::vector<double> &c) {
  const std::size_t n = c.size();
  std::vector<double> x(n, 0.0);
  const double s0 = std::sqrt(1.0 / static_cast<double>(n));
  const double sk = std::sqrt(2.0 / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    double sum = s0 * c[0];
    for (std::size_t k = 1; k < n; ++k)
      sum += sk * c[k] *
             std::cos(std::numbers::pi * static_cast<double>(k) *
                      (static_cast<double>(i) + 0.5) / static_cast<double>(n));
    x[i] = sum;
  }
  return x;
}

FeatureMatrix Mfcc(const RealMatrix &power, std::size_t nfft, int sample_rate,
                   const MelConfig &config) {
  config.Validate(sample_rate);
  const RealMatrix fb = MelFilterbank(nfft, sample_rate, config);
  if (power.rows() != fb.cols())
    throw std::invalid_argument("power spectrogram has " + std::to_string(power.rows()) +
                                " bins, expected " + std::to_string(fb.cols()));
  const std::size_t frames = power.cols();
  FeatureMatrix out;
  out.data = RealMatrix(frames, config.n_ceps);
  for (std::size_t k = 0; k < config.n_ceps; ++k) out.labels.push_back("c" + std::to_string(k));

  // Precomputed DCT basis; the same arithmetic as Dct2.
  RealMatrix basis(config.n_ceps, config.n_mels);
  const double n = static_cast<double>(config.n_mels);
  for (std::size_t k = 0; k < config.n_ceps; ++k)
    for (std::size_t i = 0; i < config.n_mels; ++i)
      basis(k, i) = (k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n)) *
                    std::cos(std::numbers::pi * static_cast<double>(k) *
                             (static_cast<double>(i) + 0.5) / n);

#pragma omp parallel for schedule(static)
  for (std::size_t t = 0; t < frames; ++t) {
    std::vector<double> logmel(config.n_mels);
    for (std::size_t m = 0; m < config.n_mels; ++m) {
      double e = 0.0;
      for (std::size_t b = 0; b < fb.cols(); ++b) e += fb(m, b) * power(b, t);
      logmel[m] = std::log(std::max(e, config.log_floor));
    }
    for (std::size_t k = 0; k < config.n_ceps; ++k) {
      double sum = 0.0;
      for (std::size_t m = 0; m < config.n_mels; ++m) sum += basis(k, m) * logmel[m];
      out.data(t, k) = sum;
    }
  }
  return out;
}

namespace {

RealMatrix Regression(const RealMatrix &x, std::size_t window) {
  const std::size_t frames = x.rows(), dims = x.cols();
  const auto last = static_cast<long>(frames) - 1;
  double denom = 0.0;
  for (std::size_t k = 1; k <= window; ++k) denom += static_cast<double>(k * k);
  denom *= 2.0;
  RealMatrix d(frames, dims, 0.0);
  for (std::size_t t = 0; t < frames; ++t) {
    const auto ti = static_cast<long>(t);
    for (std::size_t j = 0; j < dims; ++j) {
      double sum = 0.0;
      for (std::size_t k = 1; k <= window; ++k) {
        const auto ki = static_cast<long>(k);
        const auto fwd = static_cast<std::size_t>(std::min(ti + ki, last));
        const auto back = static_cast<std::size_t>(std::max(ti - ki, 0L));
        sum += static_cast<double>(k) * (x(fwd, j) - x(back, j));
      }
      d(t, j) = sum / denom;
    }
  }
  return d;
}

}  // namespace

FeatureMatrix AddDeltas(const FeatureMatrix &features, std::size_t delta_window) {
  if (features.frames() < 1) throw std::invalid_argument("deltas need at least 1 frame");
  if (delta_window < 1) throw std::invalid_argument("delta_window must be >= 1");
  const RealMatrix delta = Regression(features.data, delta_window);
  const RealMatrix accel = Regression(delta, delta_window);
  const std::size_t frames = features.frames(), dims = features.dims();
  FeatureMatrix out;
  out.data = RealMatrix(frames, 3 * dims);
  for (std::size_t t = 0; t < frames; ++t)
    for (std::size_t j = 0; j < dims; ++j) {
      out.data(t, j) = features.data(t, j);
      out.data(t, dims + j) = delta(t, j);
      out.data(t, 2 * dims + j) = accel(t, j);
    }
  out.labels = features.labels;
  for (const auto &l : features.labels) out.labels.push_back("d_" + l);
  for (const auto &l : features.labels) out.labels.push_back("dd_" + l);
  return out;
}

FeatureMatrix Cmvn(const FeatureMatrix &features) {
  const std::size_t frames = features.frames(), dims = features.dims();
  if (frames < 2) throw std::invalid_argument("CMVN needs at least 2 frames");
  FeatureMatrix out = features;
  for (std::size_t j = 0; j < dims; ++j) {
    double mean = 0.0;
    for (std::size_t t = 0; t < frames; ++t) mean += features.data(t, j);
    mean /= static_cast<double>(frames);
    double var = 0.0;
    for (std::size_t t = 0; t < frames; ++t) {
      const double d = features.data(t, j) - mean;
      var += d * d;
    }
    var /= static_cast<double>(frames);
    const double sd = std::sqrt(var);
    // Relative threshold: a constant column may carry rounding noise.
    const bool flat = !(sd > 1e-12 * std::max(1.0, std::abs(mean)));
    for (std::size_t t = 0; t < frames; ++t) {
      const double centered = features.data(t, j) - mean;
      out.data(t, j) = flat ? 0.0 : centered / sd;
    }
  }
  return out;
}

}  // namespace psyfe
