// src/feature_io.cpp

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

#include "psyfe/feature_io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "psyfe/error.hpp"

namespace psyfe {

namespace {

void PutU32(std::string *out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
}

std::uint32_t GetU32(const std::string &s, std::size_t pos) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i)
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[pos + i])) << (8 * i);
  return v;
}

}  // namespace

std::string EncodeFeaturesBinary(const FeatureMatrix &features, std::uint32_t sample_rate,
                                 std::uint32_t hop) {
  std::string out(kFeatureMagic, 4);
  PutU32(&out, static_cast<std::uint32_t>(features.frames()));
  PutU32(&out, static_cast<std::uint32_t>(features.dims()));
  PutU32(&out, sample_rate);
  PutU32(&out, hop);
  out.reserve(out.size() + features.data.size() * 4);
  for (double v : features.data.values())
    PutU32(&out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  return out;
}

FeatureFile DecodeFeaturesBinary(const std::string &bytes) {
  if (bytes.size() < 20 || std::memcmp(bytes.data(), kFeatureMagic, 4) != 0)
    throw InputError("not a PFE1 feature file");
  FeatureFile file;
  const std::uint32_t frames = GetU32(bytes, 4), dims = GetU32(bytes, 8);
  file.sample_rate = GetU32(bytes, 12);
  file.hop = GetU32(bytes, 16);
  const std::size_t expected = 20 + static_cast<std::size_t>(frames) * dims * 4;
  if (bytes.size() != expected)
    throw InputError("feature file size does not match its header");
  file.features.data = RealMatrix(frames, dims);
  for (std::size_t i = 0; i < file.features.data.size(); ++i)
    file.features.data.values()[i] = std::bit_cast<float>(GetU32(bytes, 20 + 4 * i));
  for (std::uint32_t j = 0; j < dims; ++j) file.features.labels.push_back("f" + std::to_string(j));
  return file;
}

std::string EncodeFeaturesCsv(const FeatureMatrix &features) {
  std::ostringstream os;
  for (std::size_t j = 0; j < features.dims(); ++j) {
    if (j) os << ',';
    os << (j < features.labels.size() ? features.labels[j] : "f" + std::to_string(j));
  }
  os << '\n';
  char buf[32];
  for (std::size_t t = 0; t < features.frames(); ++t) {
    for (std::size_t j = 0; j < features.dims(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.9g", features.data(t, j));
      if (j) os << ',';
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

void WriteFile(const std::string &path, const std::string &bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot open output file: " + path);
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw std::runtime_error("write failed: " + path);
}

std::string ReadFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("cannot open file: " + path);
  return std::string((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
}

void WriteFeaturesBinary(const std::string &path, const FeatureMatrix &features,
                         std::uint32_t sample_rate, std::uint32_t hop) {
  WriteFile(path, EncodeFeaturesBinary(features, sample_rate, hop));
}

FeatureFile ReadFeaturesBinary(const std::string &path) {
  return DecodeFeaturesBinary(ReadFile(path));
}

void WriteFeaturesCsv(const std::string &path, const FeatureMatrix &features) {
  WriteFile(path, EncodeFeaturesCsv(features));
}

}  // namespace psyfe
