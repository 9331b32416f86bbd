// src/pipeline.cpp

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

#include "psyfe/pipeline.hpp"

#include "psyfe/eval.hpp"

namespace psyfe {

void PipelineConfig::Validate(int sample_rate) const {
  frame.Validate();
  engine.Validate();
  mel.Validate(sample_rate);
}

PipelineConfig PipelineConfig::Baseline() {
  PipelineConfig c;
  c.engine.oae_enabled = false;
  c.engine.filter_enabled = false;
  c.mel.use_cmvn = false;
  return c;
}

PipelineConfig PipelineConfig::Proposed() {
  PipelineConfig c;
  c.engine.oae_enabled = true;
  c.engine.filter_enabled = true;
  c.engine.adaptive = true;
  c.mel.use_cmvn = true;
  return c;
}

FeatureMatrix ExtractFeatures(const Signal &signal, const PipelineConfig &config,
                              std::vector<std::uint8_t> *speech) {
  config.Validate(signal.sample_rate);
  const ComplexSpectrogram spec = ComputeStft(signal, config.frame);
  const ComplexSpectrogram filtered = Process(spec, config.engine, speech);
  FeatureMatrix feats =
      Mfcc(PowerSpectrogram(filtered.data), config.frame.nfft, signal.sample_rate, config.mel);
  if (config.rasta) feats.data = RastaFilter(feats.data);
  if (config.deltas) feats = AddDeltas(feats, config.mel.delta_window);
  if (config.mel.use_cmvn) feats = Cmvn(feats);
  return feats;
}

}  // namespace psyfe
