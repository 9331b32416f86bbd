// src/noise.cpp

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

#include "psyfe/eval.hpp"

namespace psyfe {

NoiseKind ParseNoiseKind(const std::string &name) {
  if (name == "white") return NoiseKind::kWhite;
  if (name == "pink") return NoiseKind::kPink;
  if (name == "babble" || name == "babble_synth") return NoiseKind::kBabbleSynth;
  if (name == "file") return NoiseKind::kFile;
  throw std::invalid_argument("unknown noise kind: " + name);
}

std::string ToString(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kWhite: return "white";
    case NoiseKind::kPink: return "pink";
    case NoiseKind::kBabbleSynth: return "babble_synth";
    case NoiseKind::kFile: return "file";
  }
  return "unknown";
}

namespace {

// Paul Kellet's economy pink filter (about +/-0.5 dB above 40 Hz at 44.1 kHz;
// a usable 1/f tilt at 8 kHz as well).
std::vector<double> PinkNoise(std::size_t n, Rng &rng) {
  std::vector<double> out(n);
  double b0 = 0, b1 = 0, b2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = rng.Gaussian();
    b0 = 0.99765 * b0 + w * 0.0990460;
    b1 = 0.96300 * b1 + w * 0.2965164;
    b2 = 0.57000 * b2 + w * 1.0526913;
    out[i] = (b0 + b1 + b2 + w * 0.1848) * 0.25;
  }
  return out;
}

// Eight talkers: low-passed noise (speech-like spectral tilt) under a
// syllable-rate envelope with random rate and phase.
std::vector<double> BabbleNoise(std::size_t n, int sample_rate, Rng &rng) {
  constexpr int kTalkers = 8;
  std::vector<double> out(n, 0.0);
  for (int k = 0; k < kTalkers; ++k) {
    const double rate_hz = rng.Uniform(3.0, 6.0);
    const double phase = rng.Uniform(0.0, 2.0 * std::numbers::pi);
    const double cutoff = rng.Uniform(600.0, 1200.0);
    const double pole = std::exp(-2.0 * std::numbers::pi * cutoff / sample_rate);
    double lp1 = 0.0, lp2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = rng.Gaussian();
      lp1 = pole * lp1 + (1.0 - pole) * w;
      lp2 = pole * lp2 + (1.0 - pole) * lp1;
      const double t = static_cast<double>(i) / sample_rate;
      const double env = 0.5 + 0.5 * std::sin(2.0 * std::numbers::pi * rate_hz * t + phase);
      out[i] += env * env * lp2;
    }
  }
  return out;
}

double MeanSquare(const std::vector<double> &x, std::size_t begin, std::size_t end) {
  double sum = 0.0;
  for (std::size_t i = begin; i < end; ++i) sum += x[i] * x[i];
  return end > begin ? sum / static_cast<double>(end - begin) : 0.0;
}

}  // namespace

Signal MakeNoise(NoiseKind kind, std::size_t length, int sample_rate, Rng &rng) {
  Signal s;
  s.sample_rate = sample_rate;
  switch (kind) {
    case NoiseKind::kWhite:
      s.samples.resize(length);
      for (double &v : s.samples) v = rng.Gaussian();
      break;
    case NoiseKind::kPink: s.samples = PinkNoise(length, rng); break;
    case NoiseKind::kBabbleSynth: s.samples = BabbleNoise(length, sample_rate, rng); break;
    case NoiseKind::kFile:
      throw std::invalid_argument("file noise is loaded, not generated");
  }
  return s;
}

std::pair<std::size_t, std::size_t> ActiveRegion(const Signal &clean) {
  double peak = 0.0;
  for (double v : clean.samples) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return {0, 0};
  const double thr = 1e-3 * peak;
  std::size_t begin = 0, end = clean.samples.size();
  while (std::abs(clean.samples[begin]) <= thr) ++begin;
  while (std::abs(clean.samples[end - 1]) <= thr) --end;
  return {begin, end};
}

Signal MixAtSnr(const Signal &clean, const Signal &noise, double snr_db) {
  if (std::isinf(snr_db) && snr_db > 0) return clean;
  if (!std::isfinite(snr_db)) throw std::invalid_argument("SNR must be finite or +inf");
  if (noise.samples.empty()) throw std::invalid_argument("noise signal is empty");
  const auto [begin, end] = ActiveRegion(clean);
  const double p_clean = MeanSquare(clean.samples, begin, end);
  if (!(p_clean > 0.0)) throw std::invalid_argument("clean signal has zero power");

  std::vector<double> tiled(clean.samples.size());
  for (std::size_t i = 0; i < tiled.size(); ++i)
    tiled[i] = noise.samples[i % noise.samples.size()];
  const double p_noise = MeanSquare(tiled, begin, end);
  if (!(p_noise > 0.0)) throw std::invalid_argument("noise has zero power over the active region");

  const double gain = std::sqrt(p_clean / (p_noise * std::pow(10.0, snr_db / 10.0)));
  Signal out = clean;
  for (std::size_t i = 0; i < tiled.size(); ++i) out.samples[i] += gain * tiled[i];
  return out;
}

double MeasureSnr(const Signal &clean, const Signal &noisy) {
  if (clean.samples.size() != noisy.samples.size())
    throw std::invalid_argument("clean and noisy lengths differ");
  const auto [begin, end] = ActiveRegion(clean);
  std::vector<double> diff(clean.samples.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = noisy.samples[i] - clean.samples[i];
  return 10.0 * std::log10(MeanSquare(clean.samples, begin, end) / MeanSquare(diff, begin, end));
}

}  // namespace psyfe
