// include/psyfe/feature_io.hpp

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

#ifndef PSYFE_FEATURE_IO_HPP_
#define PSYFE_FEATURE_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "psyfe/cepstral.hpp"

namespace psyfe {

/// Binary feature file. All integers little-endian:
///   "PFE1" | u32 frames | u32 dims | u32 sample_rate | u32 hop_samples
/// followed by frames * dims IEEE-754 float32 values, row-major.
struct FeatureFile {
  FeatureMatrix features;
  std::uint32_t sample_rate = 0;
  std::uint32_t hop = 0;
};

inline constexpr char kFeatureMagic[4] = {'P', 'F', 'E', '1'};

std::string EncodeFeaturesBinary(const FeatureMatrix &features, std::uint32_t sample_rate,
                                 std::uint32_t hop);
FeatureFile DecodeFeaturesBinary(const std::string &bytes);

/// One header row of labels, then one frame per row.
std::string EncodeFeaturesCsv(const FeatureMatrix &features);

void WriteFeaturesBinary(const std::string &path, const FeatureMatrix &features,
                         std::uint32_t sample_rate, std::uint32_t hop);
FeatureFile ReadFeaturesBinary(const std::string &path);
void WriteFeaturesCsv(const std::string &path, const FeatureMatrix &features);

/// Whole-file helpers shared by the writers.
void WriteFile(const std::string &path, const std::string &bytes);
std::string ReadFile(const std::string &path);

}  // namespace psyfe

#endif  // PSYFE_FEATURE_IO_HPP_
