// src/wav.cpp

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

#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "psyfe/dsp.hpp"
#include "psyfe/error.hpp"

namespace psyfe {

namespace {

std::uint32_t ReadU32(const unsigned char *p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t ReadU16(const unsigned char *p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void PutU32(std::string *out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void PutU16(std::string *out, std::uint16_t v) {
  out->push_back(static_cast<char>(v & 0xff));
  out->push_back(static_cast<char>(v >> 8));
}

}  // namespace

Signal LoadWav(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("cannot open wav file: " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(is)),
                                   std::istreambuf_iterator<char>());
  const std::size_t n = bytes.size();
  if (n < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw InputError(path + ": not a RIFF/WAVE file");

  bool have_fmt = false;
  int channels = 0, bits = 0;
  std::uint32_t rate = 0;
  std::size_t pos = 12;
  while (pos + 8 <= n) {
    const unsigned char *hdr = bytes.data() + pos;
    const std::uint32_t chunk_size = ReadU32(hdr + 4);
    const std::size_t body = pos + 8;
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_size < 16 || body + 16 > n)
        throw InputError(path + ": truncated fmt chunk");
      const unsigned char *f = bytes.data() + body;
      const std::uint16_t format = ReadU16(f);
      channels = ReadU16(f + 2);
      rate = ReadU32(f + 4);
      bits = ReadU16(f + 14);
      if (format != 1)
        throw InputError(path + ": unsupported encoding (only PCM is read)");
      if (channels != 1)
        throw InputError(path + ": unsupported channel count " +
                         std::to_string(channels));
      if (bits != 16)
        throw InputError(path + ": unsupported bit depth " +
                         std::to_string(bits));
      if (rate == 0) throw InputError(path + ": zero sample rate");
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      if (!have_fmt) throw InputError(path + ": data chunk before fmt chunk");
      if (body + chunk_size > n || chunk_size % 2 != 0)
        throw InputError(path + ": truncated data chunk");
      Signal signal;
      signal.sample_rate = static_cast<int>(rate);
      signal.samples.resize(chunk_size / 2);
      const unsigned char *d = bytes.data() + body;
      for (std::size_t i = 0; i < signal.samples.size(); ++i) {
        const auto v = static_cast<std::int16_t>(ReadU16(d + 2 * i));
        signal.samples[i] = v / 32768.0;
      }
      return signal;
    }
    pos = body + chunk_size + (chunk_size & 1u);
  }
  throw InputError(path + (have_fmt ? ": missing data chunk" : ": missing fmt chunk"));
}

void WriteWav(const std::string &path, const Signal &signal) {
  if (signal.sample_rate <= 0)
    throw std::invalid_argument("sample rate must be positive");
  const auto data_bytes = static_cast<std::uint32_t>(signal.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  PutU32(&out, 36 + data_bytes);
  out += "WAVEfmt ";
  PutU32(&out, 16);
  PutU16(&out, 1);
  PutU16(&out, 1);
  PutU32(&out, static_cast<std::uint32_t>(signal.sample_rate));
  PutU32(&out, static_cast<std::uint32_t>(signal.sample_rate) * 2);
  PutU16(&out, 2);
  PutU16(&out, 16);
  out += "data";
  PutU32(&out, data_bytes);
  for (double x : signal.samples) {
    double scaled = std::round(x * 32768.0);
    if (scaled > 32767.0) scaled = 32767.0;
    if (scaled < -32768.0) scaled = -32768.0;
    PutU16(&out, static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)));
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot write wav file: " + path);
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace psyfe
