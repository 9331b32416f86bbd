// include/psyfe/vad.hpp

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

#ifndef PSYFE_VAD_HPP_
#define PSYFE_VAD_HPP_

#include <cstdint>
#include <vector>

#include "psyfe/matrix.hpp"

namespace psyfe {

struct NoiseTrackerConfig {
  double smooth_alpha = 0.9;     // recursive smoothing constant, (0, 1)
  std::size_t min_window = 50;   // sliding-minimum length in frames
  double ratio_threshold = 3.0;  // energy-ratio threshold nu, > 1 (may be +inf)
  double floor_eps = 1e-10;      // power floor in the ratio denominator

  void Validate() const;
};

/// Per-frame decisions and the tracked quantities behind them. Matrices are
/// bins x frames, like the power spectrogram they were computed from.
struct VadTrack {
  std::vector<std::uint8_t> speech;  // 1 = speech
  RealMatrix noise_floor;
  RealMatrix smoothed_power;

  std::size_t frames() const { return smoothed_power.cols(); }
};

/// Minimum-controlled recursive averaging:
///   S(f, t) = a * S(f, t-1) + (1 - a) * P(f, t),   S(f, -1) = P(f, 0)
///   N(f, t) = min S(f, t') over the trailing min_window frames
/// (fewer frames at the start). Leaves `speech` empty.
VadTrack TrackNoise(const RealMatrix &power, const NoiseTrackerConfig &config);

/// Energy-ratio test: frame t is speech iff
///   mean_f S(f, t) / max(N(f, t), eps) > nu.
std::vector<std::uint8_t> DetectSpeech(const VadTrack &track,
                                       const NoiseTrackerConfig &config);

/// TrackNoise followed by DetectSpeech, with the flags stored in the track.
VadTrack RunVad(const RealMatrix &power, const NoiseTrackerConfig &config);

}  // namespace psyfe

#endif  // PSYFE_VAD_HPP_
