// tests/test_dsp.cpp

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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "psyfe/dsp.hpp"
#include "psyfe/error.hpp"
#include "psyfe/feature_io.hpp"
#include "test_util.hpp"

using namespace psyfe;

TEST_SUITE("dsp") {

TEST_CASE("wav loading") {
  testutil::TempDir dir;
  SUBCASE("one second of 8 kHz PCM16") {
    const std::string path = dir.file("zeros.wav");
    WriteFile(path, testutil::WavBytes(1, 1, 8000, 16, std::string(16000, '\0')));
    const Signal s = LoadWav(path);
    CHECK(s.sample_rate == 8000);
    REQUIRE(s.samples.size() == 8000);
    for (double v : s.samples) CHECK(v == 0.0);
  }
  SUBCASE("stereo is rejected") {
    const std::string path = dir.file("stereo.wav");
    WriteFile(path, testutil::WavBytes(1, 2, 8000, 16, std::string(64, '\0')));
    try {
      LoadWav(path);
      FAIL("expected an error");
    } catch (const InputError &e) {
      CHECK(std::string(e.what()).find("unsupported channel count") != std::string::npos);
    }
  }
  SUBCASE("non-PCM encoding is rejected") {
    const std::string path = dir.file("float.wav");
    WriteFile(path, testutil::WavBytes(3, 1, 8000, 32, std::string(64, '\0')));
    CHECK_THROWS_AS(LoadWav(path), InputError);
  }
  SUBCASE("missing file names the path") {
    try {
      LoadWav(dir.file("absent.wav"));
      FAIL("expected an error");
    } catch (const InputError &e) {
      CHECK(std::string(e.what()).find("absent.wav") != std::string::npos);
    }
  }
  SUBCASE("truncated data chunk") {
    const std::string path = dir.file("short.wav");
    std::string bytes = testutil::WavBytes(1, 1, 8000, 16, std::string(100, '\0'));
    bytes.resize(bytes.size() - 50);
    WriteFile(path, bytes);
    CHECK_THROWS_AS(LoadWav(path), InputError);
  }
  SUBCASE("write then read round trip at 16-bit resolution") {
    Signal s;
    s.sample_rate = 16000;
    for (int i = 0; i < 500; ++i) s.samples.push_back(0.9 * std::sin(0.01 * i));
    const std::string path = dir.file("rt.wav");
    WriteWav(path, s);
    const Signal r = LoadWav(path);
    CHECK(r.sample_rate == 16000);
    REQUIRE(r.samples.size() == s.samples.size());
    for (std::size_t i = 0; i < s.samples.size(); ++i)
      CHECK(std::abs(r.samples[i] - s.samples[i]) <= 1.0 / 32767);
  }
}

TEST_CASE("framing") {
  FrameConfig cfg;
  CHECK(NumFrames(8000, cfg) == 98);
  CHECK(NumFrames(199, cfg) == 0);
  CHECK(NumFrames(200, cfg) == 1);

  Signal ones;
  ones.samples.assign(1000, 1.0);
  cfg.window = WindowType::kRect;
  const RealMatrix rect = FrameSignal(ones, cfg);
  CHECK(rect.rows() == NumFrames(1000, cfg));
  for (double v : rect.values()) CHECK(v == 1.0);

  Signal impulse;
  impulse.samples.assign(400, 0.0);
  impulse.samples[0] = 1.0;
  cfg.window = WindowType::kHamming;
  const RealMatrix ham = FrameSignal(impulse, cfg);
  const auto w = MakeWindow(WindowType::kHamming, 200);
  CHECK(ham(0, 0) == w[0]);
  CHECK(w[0] == doctest::Approx(0.08));
  CHECK(w[199] == doctest::Approx(0.08));
  for (std::size_t i = 1; i < 200; ++i) CHECK(ham(0, i) == 0.0);

  Signal tiny;
  tiny.samples.assign(10, 0.0);
  CHECK_THROWS_AS(FrameSignal(tiny, cfg), std::invalid_argument);
}

TEST_CASE("frame config validation") {
  FrameConfig cfg;
  CHECK_NOTHROW(cfg.Validate());
  cfg.nfft = 100;
  CHECK_THROWS_AS(cfg.Validate(), std::invalid_argument);
  cfg = FrameConfig{};
  cfg.hop = 0;
  CHECK_THROWS_AS(cfg.Validate(), std::invalid_argument);
  cfg = FrameConfig{};
  cfg.frame_len = 300;
  CHECK_THROWS_AS(cfg.Validate(), std::invalid_argument);
  CHECK(ParseWindowType("hann") == WindowType::kHann);
  CHECK_THROWS_AS(ParseWindowType("kaiser"), std::invalid_argument);
}

TEST_CASE("stft") {
  SUBCASE("constant frame puts everything in bin 0") {
    RealMatrix frame(1, 256, 1.0);
    const ComplexSpectrogram s = Stft(frame, 256);
    CHECK(s.bins() == 129);
    CHECK(std::abs(s.data(0, 0)) == doctest::Approx(256.0));
    for (std::size_t k = 1; k < s.bins(); ++k) CHECK(std::abs(s.data(k, 0)) < 1e-9);
  }
  SUBCASE("1 kHz tone peaks at bin 32") {
    RealMatrix frame(1, 256);
    for (std::size_t i = 0; i < 256; ++i)
      frame(0, i) = std::sin(2 * std::numbers::pi * 1000.0 * i / 8000.0);
    const RealMatrix p = PowerSpectrogram(Stft(frame, 256).data);
    std::size_t best = 0;
    for (std::size_t k = 0; k < p.rows(); ++k)
      if (p(k, 0) > p(best, 0)) best = k;
    CHECK(best == 32);
  }
  SUBCASE("matches a direct DFT and Parseval") {
    std::mt19937_64 gen(11);
    std::normal_distribution<double> n(0.0, 1.0);
    RealMatrix frames(3, 200);
    for (auto &v : frames.values()) v = n(gen);
    const ComplexSpectrogram s = Stft(frames, 256);
    for (std::size_t t = 0; t < 3; ++t) {
      std::vector<double> x(frames.row(t).begin(), frames.row(t).end());
      const auto ref = oracle::Dft(x, 256);
      double time_energy = 0.0, freq_energy = 0.0;
      for (double v : x) time_energy += v * v;
      for (std::size_t k = 0; k < 256; ++k) freq_energy += std::norm(ref[k]);
      CHECK(time_energy == doctest::Approx(freq_energy / 256.0).epsilon(1e-12));
      for (std::size_t k = 0; k < 129; ++k)
        CHECK(std::abs(s.data(k, t) - ref[k]) < 1e-9);
      // One-sided Parseval: interior bins count twice.
      double half = std::norm(s.data(0, t)) + std::norm(s.data(128, t));
      for (std::size_t k = 1; k < 128; ++k) half += 2.0 * std::norm(s.data(k, t));
      CHECK(time_energy == doctest::Approx(half / 256.0).epsilon(1e-12));
    }
  }
  SUBCASE("nfft shorter than a frame is rejected") {
    CHECK_THROWS_AS(Stft(RealMatrix(1, 300), 256), std::invalid_argument);
  }
}

TEST_CASE("pre-emphasis") {
  Signal s;
  s.samples.assign(400, 1.0);
  FrameConfig cfg;
  cfg.window = WindowType::kRect;
  cfg.preemph = 0.97;
  const RealMatrix f = FrameSignal(s, cfg);
  CHECK(f(1, 10) == doctest::Approx(0.03));
}

}  // TEST_SUITE
