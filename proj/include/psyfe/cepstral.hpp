// include/psyfe/cepstral.hpp

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

#ifndef PSYFE_CEPSTRAL_HPP_
#define PSYFE_CEPSTRAL_HPP_

#include <string>
#include <vector>

#include "psyfe/matrix.hpp"

namespace psyfe {

struct MelConfig {
  std::size_t n_mels = 23;
  double fmin = 64.0;
  double fmax = 4000.0;
  std::size_t n_ceps = 13;  // c0 .. c12
  std::size_t delta_window = 2;
  bool use_cmvn = false;
  double log_floor = 1e-10;

  /// Checks 0 <= fmin < fmax <= fs/2, n_ceps <= n_mels and the rest.
  void Validate(int sample_rate) const;
};

/// Frames x dims real matrix with one label per column.
struct FeatureMatrix {
  RealMatrix data;
  std::vector<std::string> labels;

  std::size_t frames() const { return data.rows(); }
  std::size_t dims() const { return data.cols(); }
};

double HzToMel(double hz);
double MelToHz(double mel);

/// Centre frequencies (Hz) of the n_mels triangular filters.
std::vector<double> MelCenters(const MelConfig &config);

/// n_mels x (nfft/2 + 1) triangular weights with unit peak at each centre.
RealMatrix MelFilterbank(std::size_t nfft, int sample_rate, const MelConfig &config);

/// Orthonormal DCT-II of a vector, first `count` coefficients.
std::vector<double> Dct2(const std::vector<double> &x, std::size_t count);
/// Inverse of the full orthonormal DCT-II (that is, DCT-III).
std::vector<double> InverseDct2(const std::vector<double> &c);

/// Static cepstra from a bins x frames power spectrogram:
///   c = DCT-II(log(max(mel energies, log_floor)))[0 .. n_ceps).
FeatureMatrix Mfcc(const RealMatrix &power, std::size_t nfft, int sample_rate,
                   const MelConfig &config);

/// Appends regression deltas and accelerations:
///   d_t = sum_{k=1..W} k (c_{t+k} - c_{t-k}) / (2 sum k^2),
/// with frame indices clamped to the utterance.
FeatureMatrix AddDeltas(const FeatureMatrix &features, std::size_t delta_window);

/// Per-dimension mean 0, variance 1 (population variance). Constant
/// dimensions map to 0. Needs at least 2 frames.
FeatureMatrix Cmvn(const FeatureMatrix &features);

}  // namespace psyfe

#endif  // PSYFE_CEPSTRAL_HPP_
