// src/vad.cpp

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

#include "psyfe/vad.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace psyfe {

void NoiseTrackerConfig::Validate() const {
  if (!(smooth_alpha > 0.0 && smooth_alpha < 1.0))
    throw std::invalid_argument("smooth_alpha must lie in (0, 1)");
  if (min_window < 1) throw std::invalid_argument("min_window must be >= 1");
  if (!(ratio_threshold > 1.0))
    throw std::invalid_argument("ratio_threshold must be > 1");
  if (!(floor_eps > 0.0)) throw std::invalid_argument("floor_eps must be > 0");
}

VadTrack TrackNoise(const RealMatrix &power, const NoiseTrackerConfig &config) {
  config.Validate();
  if (power.rows() == 0 || power.cols() == 0)
    throw std::invalid_argument("noise tracking needs a non-empty spectrogram");
  for (double p : power.values())
    if (!(p >= 0.0) || !std::isfinite(p))
      throw std::invalid_argument("power values must be finite and >= 0");

  const std::size_t bins = power.rows(), frames = power.cols();
  const double a = config.smooth_alpha;
  VadTrack track;
  track.smoothed_power = RealMatrix(bins, frames);
  track.noise_floor = RealMatrix(bins, frames);

  // Bins are independent; the recursion runs sequentially along time.
#pragma omp parallel for schedule(static)
  for (std::size_t f = 0; f < bins; ++f) {
    auto p = power.row(f);
    auto s = track.smoothed_power.row(f);
    auto n = track.noise_floor.row(f);
    std::deque<std::size_t> minq;  // indices with increasing S
    double prev = p[0];
    for (std::size_t t = 0; t < frames; ++t) {
      prev = a * prev + (1.0 - a) * p[t];
      s[t] = prev;
      while (!minq.empty() && s[minq.back()] >= s[t]) minq.pop_back();
      minq.push_back(t);
      if (minq.front() + config.min_window <= t) minq.pop_front();
      n[t] = s[minq.front()];
    }
  }
  return track;
}

std::vector<std::uint8_t> DetectSpeech(const VadTrack &track,
                                       const NoiseTrackerConfig &config) {
  config.Validate();
  const std::size_t bins = track.smoothed_power.rows();
  const std::size_t frames = track.smoothed_power.cols();
  if (track.noise_floor.rows() != bins || track.noise_floor.cols() != frames)
    throw std::invalid_argument("noise floor and smoothed power differ in shape");
  std::vector<std::uint8_t> speech(frames, 0);
  for (std::size_t t = 0; t < frames; ++t) {
    double sum = 0.0;
    for (std::size_t f = 0; f < bins; ++f)
      sum += track.smoothed_power(f, t) / std::max(track.noise_floor(f, t), config.floor_eps);
    speech[t] = sum / static_cast<double>(bins) > config.ratio_threshold ? 1 : 0;
  }
  return speech;
}

VadTrack RunVad(const RealMatrix &power, const NoiseTrackerConfig &config) {
  VadTrack track = TrackNoise(power, config);
  track.speech = DetectSpeech(track, config);
  return track;
}

}  // namespace psyfe
