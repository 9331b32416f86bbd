// include/psyfe/pipeline.hpp

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

#ifndef PSYFE_PIPELINE_HPP_
#define PSYFE_PIPELINE_HPP_

#include <cstdint>
#include <vector>

#include "psyfe/cepstral.hpp"
#include "psyfe/dsp.hpp"
#include "psyfe/masking.hpp"

namespace psyfe {

struct PipelineConfig {
  FrameConfig frame;
  EngineConfig engine;
  MelConfig mel;
  bool deltas = true;
  bool rasta = false;  // RASTA-filter static cepstra before deltas

  void Validate(int sample_rate) const;

  /// Plain MFCC(39): no OAE, no masking, no CMVN.
  static PipelineConfig Baseline();
  /// OAE + adaptive masking + MFCC(39) + CMVN.
  static PipelineConfig Proposed();
};

/// frame -> STFT -> OAE/masking -> |.|^2 -> MFCC -> (RASTA) -> deltas -> (CMVN).
/// Speech flags used for kernel selection are returned through `speech`.
FeatureMatrix ExtractFeatures(const Signal &signal, const PipelineConfig &config,
                              std::vector<std::uint8_t> *speech = nullptr);

}  // namespace psyfe

#endif  // PSYFE_PIPELINE_HPP_
