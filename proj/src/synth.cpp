// src/synth.cpp

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

namespace {

constexpr double kBandLo[3] = {250.0, 900.0, 2000.0};
constexpr double kBandHi[3] = {900.0, 2000.0, 3300.0};
constexpr double kPadSeconds = 0.15;
constexpr double kRampSeconds = 0.02;
// Fixed: the vocabulary is part of the task definition, not of a run.
constexpr std::uint64_t kVocabularySeed = 0x5eed0f00d;

}  // namespace

SyntheticVocabulary::SyntheticVocabulary(std::size_t num_classes, int sample_rate)
    : sample_rate_(sample_rate) {
  if (num_classes < 1) throw std::invalid_argument("vocabulary needs at least one class");
  if (sample_rate < 8000) throw std::invalid_argument("synthetic words need fs >= 8 kHz");
  Rng rng(kVocabularySeed);
  // Draw classes until each differs from all previous ones by a mean
  // log-frequency distance of at least 0.2 over the six track endpoints.
  int attempts = 0;
  while (classes_.size() < num_classes) {
    WordClass w{};
    for (int k = 0; k < 3; ++k) {
      w.tracks[k].start_hz = rng.Uniform(kBandLo[k], kBandHi[k]);
      w.tracks[k].end_hz = rng.Uniform(kBandLo[k], kBandHi[k]);
      w.tracks[k].amplitude = 1.0 / (1.0 + k) * rng.Uniform(0.7, 1.0);
      w.tracks[k].curve = rng.Uniform(0.5, 2.0);
    }
    w.duration_s = rng.Uniform(0.35, 0.6);
    bool distinct = true;
    for (const auto &other : classes_) {
      double d = 0.0;
      for (int k = 0; k < 3; ++k) {
        d += std::abs(std::log(w.tracks[k].start_hz / other.tracks[k].start_hz));
        d += std::abs(std::log(w.tracks[k].end_hz / other.tracks[k].end_hz));
      }
      if (d / 6.0 < 0.2) distinct = false;
    }
    if (distinct || ++attempts > 10000) classes_.push_back(w);
  }
}

std::string SyntheticVocabulary::Label(std::size_t cls) const {
  return "w" + std::to_string(cls);
}

Signal SyntheticVocabulary::Render(std::size_t cls, Rng &rng) const {
  if (cls >= classes_.size()) throw std::out_of_range("word class out of range");
  const WordClass &w = classes_[cls];
  const double pitch = rng.Uniform(0.95, 1.05);
  const double stretch = rng.Uniform(0.9, 1.1);
  const double gain = rng.Uniform(0.2, 0.4);
  double amp[3], phase[3];
  for (int k = 0; k < 3; ++k) {
    amp[k] = w.tracks[k].amplitude * rng.Uniform(0.8, 1.2);
    phase[k] = rng.Uniform(0.0, 2.0 * std::numbers::pi);
  }

  const double fs = sample_rate_;
  const auto pad = static_cast<std::size_t>(kPadSeconds * fs);
  const auto body = static_cast<std::size_t>(w.duration_s * stretch * fs);
  const auto ramp = static_cast<std::size_t>(kRampSeconds * fs);
  Signal s;
  s.sample_rate = sample_rate_;
  s.samples.assign(2 * pad + body, 0.0);
  for (std::size_t i = 0; i < body; ++i) {
    const double tau = static_cast<double>(i) / static_cast<double>(body);
    double env = 1.0;
    if (i < ramp) env = 0.5 - 0.5 * std::cos(std::numbers::pi * static_cast<double>(i) / ramp);
    if (body - i <= ramp)
      env = 0.5 - 0.5 * std::cos(std::numbers::pi * static_cast<double>(body - i) / ramp);
    double v = 0.0;
    for (int k = 0; k < 3; ++k) {
      const Track &tr = w.tracks[k];
      const double hz =
          pitch * (tr.start_hz + (tr.end_hz - tr.start_hz) * std::pow(tau, tr.curve));
      phase[k] += 2.0 * std::numbers::pi * hz / fs;
      v += amp[k] * std::sin(phase[k]);
    }
    s.samples[pad + i] = gain * env * v;
  }
  return s;
}

}  // namespace psyfe
