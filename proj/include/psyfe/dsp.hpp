// include/psyfe/dsp.hpp

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

#ifndef PSYFE_DSP_HPP_
#define PSYFE_DSP_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "psyfe/matrix.hpp"

namespace psyfe {

/// Mono waveform with samples nominally in [-1, 1].
struct Signal {
  std::vector<double> samples;
  int sample_rate = 8000;
};

enum class WindowType { kHamming, kHann, kRect };

WindowType ParseWindowType(const std::string &name);
std::string ToString(WindowType type);

struct FrameConfig {
  std::size_t frame_len = 200;  // 25 ms at 8 kHz
  std::size_t hop = 80;         // 10 ms at 8 kHz
  WindowType window = WindowType::kHamming;
  std::size_t nfft = 256;
  double preemph = 0.0;  // 0 disables; 0.97 is the usual value

  /// Throws std::invalid_argument unless 0 < hop <= frame_len <= nfft and
  /// nfft is a power of two.
  void Validate() const;
};

/// Complex STFT, rows = bins (nfft/2 + 1), cols = frames.
struct ComplexSpectrogram {
  ComplexMatrix data;
  int sample_rate = 8000;
  std::size_t hop = 80;

  std::size_t bins() const { return data.rows(); }
  std::size_t frames() const { return data.cols(); }
};

/// Reads a RIFF/WAVE file holding mono 16-bit little-endian PCM. Samples are
/// scaled by 1/32768. Throws InputError on anything else.
Signal LoadWav(const std::string &path);

/// Writes mono PCM16. Samples are clipped to [-1, 1) before quantization.
void WriteWav(const std::string &path, const Signal &signal);

std::vector<double> MakeWindow(WindowType type, std::size_t length);

/// Number of full frames; tail samples shorter than one frame are dropped.
std::size_t NumFrames(std::size_t num_samples, const FrameConfig &config);

/// Windowed frames, rows = frames, cols = frame_len. Applies pre-emphasis
/// per frame when config.preemph > 0.
RealMatrix FrameSignal(const Signal &signal, const FrameConfig &config);

/// Real-input DFT of every frame, zero padded to nfft.
ComplexSpectrogram Stft(const RealMatrix &frames, std::size_t nfft,
                        int sample_rate = 8000, std::size_t hop = 80);

/// Convenience: FrameSignal + Stft.
ComplexSpectrogram ComputeStft(const Signal &signal, const FrameConfig &config);

RealMatrix PowerSpectrogram(const ComplexMatrix &spec);
RealMatrix MagnitudeSpectrogram(const ComplexMatrix &spec);

}  // namespace psyfe

#endif  // PSYFE_DSP_HPP_
