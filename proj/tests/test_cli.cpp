// tests/test_cli.cpp

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
#include <sstream>

#include "cli.hpp"
#include "psyfe/dsp.hpp"
#include "psyfe/feature_io.hpp"
#include "psyfe/pipeline.hpp"
#include "psyfe/rng.hpp"
#include "test_util.hpp"

using namespace psyfe;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "psyfe");
  std::ostringstream out, err;
  const int code = cli::RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

Signal Noise(std::size_t n, std::uint64_t seed, double sd) {
  Rng rng(seed);
  Signal s;
  s.samples.resize(n);
  for (auto &v : s.samples) v = sd * rng.Gaussian();
  return s;
}

double Concentration(const std::string &out) {
  const auto pos = out.find("concentration ");
  REQUIRE(pos != std::string::npos);
  return std::stod(out.substr(pos + 14));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("kernel dump") {
  const Result low = Cli({"kernel", "dump", "--band", "low", "--speech"});
  CHECK(low.code == 0);
  CHECK(low.out.find("\n0,5.0000,-0.4736,") != std::string::npos);
  const Result norm = Cli({"kernel", "dump", "--band", "low", "--speech", "--normalize"});
  CHECK(norm.out.find("\n0,1.00000000,") != std::string::npos);
  const Result high = Cli({"kernel", "dump", "--band", "high", "--no-speech"});
  CHECK(high.out.find("\n0,3.0000,-0.4375,") != std::string::npos);
  CHECK(Cli({"kernel", "dump", "--band", "mid"}).code == 2);
  CHECK(Cli({"kernel"}).code == 2);
}

TEST_CASE("extract") {
  testutil::TempDir dir;
  const std::string wav = dir.file("in.wav");
  WriteWav(wav, Noise(8000, 1, 0.1));

  const Result r = Cli({"extract", wav, "-o", dir.file("f.bin")});
  CHECK(r.code == 0);
  const FeatureFile f = ReadFeaturesBinary(dir.file("f.bin"));
  CHECK(f.features.frames() == 98);
  CHECK(f.features.dims() == 39);
  CHECK(f.sample_rate == 8000);
  CHECK(f.hop == 80);

  CHECK(Cli({"extract", wav, "-o", dir.file("b.bin"), "--no-oae", "--no-adaptive", "--no-filter"}).code == 0);
  const FeatureMatrix want = ExtractFeatures(LoadWav(wav), PipelineConfig::Baseline());
  const FeatureFile base = ReadFeaturesBinary(dir.file("b.bin"));
  REQUIRE(base.features.data.size() == want.data.size());
  for (std::size_t i = 0; i < want.data.size(); ++i)
    CHECK(base.features.data.values()[i] == static_cast<double>(static_cast<float>(want.data.values()[i])));

  CHECK(Cli({"extract", wav, "-o", dir.file("f.csv"), "--format", "csv"}).code == 0);
  const std::string csv = ReadFile(dir.file("f.csv"));
  CHECK(csv.rfind("c0,c1,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 99);

  const Result missing = Cli({"extract", dir.file("nope.wav"), "-o", dir.file("x.bin")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("nope.wav") != std::string::npos);
  CHECK(Cli({"extract", wav}).code == 2);
  CHECK(Cli({"extract", wav, "-o", dir.file("x.bin"), "--format", "xml"}).code == 2);
  CHECK(Cli({"extract", wav, "-o", dir.file("x.bin"), "--nfft", "100"}).code == 2);

  Signal tiny;
  tiny.samples.assign(50, 0.1);
  WriteWav(dir.file("tiny.wav"), tiny);
  CHECK(Cli({"extract", dir.file("tiny.wav"), "-o", dir.file("x.bin")}).code != 0);
}

TEST_CASE("analyze-dt") {
  testutil::TempDir dir;
  Signal tone;
  for (int i = 0; i < 8000; ++i) tone.samples.push_back(0.5 * std::sin(2 * std::numbers::pi * 1000.0 * i / 8000.0));
  WriteWav(dir.file("tone.wav"), tone);
  WriteWav(dir.file("noise.wav"), Noise(8000, 3, 0.2));
  const Result t = Cli({"analyze-dt", dir.file("tone.wav"), "--out", dir.file("tone")});
  CHECK(t.code == 0);
  const double ct = Concentration(t.out);
  CHECK(ct > 0.99);
  const double cn = Concentration(Cli({"analyze-dt", dir.file("noise.wav")}).out);
  CHECK(cn < 0.9);
  CHECK(cn < ct);
  CHECK(ReadFile(dir.file("tone.pgm")).rfind("P5\n98 129\n255\n", 0) == 0);

  const Result k = Cli({"analyze-dt", "--kernel", "identity", "--grid", "16x32", "--out", dir.file("id")});
  CHECK(k.code == 0);
  const std::string pgm = ReadFile(dir.file("id.pgm"));
  CHECK(pgm.size() == std::string("P5\n32 16\n255\n").size() + 512);
  CHECK(pgm.find_first_not_of('\0', 13) == std::string::npos);
  CHECK(Cli({"analyze-dt", "--kernel", "low", "--grid", "4x4"}).code == 2);
  CHECK(Cli({"analyze-dt"}).code == 2);
}

TEST_CASE("vad") {
  testutil::TempDir dir;
  WriteWav(dir.file("n.wav"), Noise(16000, 4, 0.05));
  const Result r = Cli({"vad", dir.file("n.wav")});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 198);
  CHECK(r.out.find_first_not_of("01\n") == std::string::npos);
  CHECK(Cli({"vad", dir.file("n.wav"), "--vad-threshold", "inf"}).out.find('1') == std::string::npos);
}

TEST_CASE("eval") {
  testutil::TempDir dir;
  const Result clean = Cli({"eval", "--synthetic", "42", "--snr", "inf", "--classes", "4", "--out", dir.file("c")});
  CHECK(clean.code == 0);
  const std::string csv = ReadFile(dir.file("c.csv"));
  CHECK(csv.find("white,clean,100.00,100.00,") != std::string::npos);
  CHECK(ReadFile(dir.file("c.txt")) == clean.out);

  const Result grid = Cli({"eval", "--synthetic", "7", "--classes", "3", "--tests-per-class", "1", "--out", dir.file("g")});
  CHECK(grid.code == 0);
  const std::string g = ReadFile(dir.file("g.csv"));
  for (const char *snr : {"clean", "20", "15", "10", "5", "0", "-5"})
    CHECK(g.find(std::string("\nwhite,") + snr + ",") != std::string::npos);
  Cli({"eval", "--synthetic", "7", "--classes", "3", "--tests-per-class", "1", "--out", dir.file("g2")});
  CHECK(ReadFile(dir.file("g2.csv")) == g);

  WriteFile(dir.file("bad.txt"), "[templates]\nonly_a_label\n");
  CHECK(Cli({"eval", "--manifest", dir.file("bad.txt")}).code == 2);
  WriteFile(dir.file("syn.txt"), "synthetic 42\n");
  const Result syn = Cli({"eval", "--manifest", dir.file("syn.txt"), "--snr", "clean", "--classes", "4"});
  CHECK(syn.code == 0);
  CHECK(syn.out == clean.out);
  CHECK(Cli({"eval", "--synthetic", "1", "--noise", "purple"}).code == 2);
  CHECK(Cli({"eval", "--synthetic", "1", "--snr", "loud"}).code == 2);
}

TEST_CASE("config files") {
  testutil::TempDir dir;
  const std::string conf = dir.file("a.conf");
  CHECK(Cli({"--write-config", conf, "--hop", "100", "--no-oae", "--window", "hann"}).code == 0);
  const std::string text = ReadFile(conf);
  CHECK(text.find("hop = 100\n") != std::string::npos);
  CHECK(text.find("oae = false\n") != std::string::npos);
  CHECK(text.find("window = hann\n") != std::string::npos);

  // Reading the file back and writing again reproduces it.
  CHECK(Cli({"--config", conf, "--write-config", dir.file("b.conf")}).code == 0);
  CHECK(ReadFile(dir.file("b.conf")) == text);

  // Command-line flags override file values.
  CHECK(Cli({"--config", conf, "--hop", "80", "--oae", "--write-config", dir.file("c.conf")}).code == 0);
  const std::string over = ReadFile(dir.file("c.conf"));
  CHECK(over.find("hop = 80\n") != std::string::npos);
  CHECK(over.find("oae = true\n") != std::string::npos);

  // Every key in the dump is accepted by the parser.
  std::istringstream lines(text);
  std::string line;
  int keys = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++keys;
    WriteFile(dir.file("one.conf"), line + "\n");
    CAPTURE(line);
    CHECK(Cli({"--config", dir.file("one.conf"), "--write-config", dir.file("o.conf")}).code == 0);
  }
  CHECK(keys >= 20);

  WriteFile(dir.file("bad.conf"), "no-such-key = 1\n");
  CHECK(Cli({"--config", dir.file("bad.conf"), "kernel", "dump"}).code == 2);
  CHECK(Cli({"--config", dir.file("missing.conf"), "kernel", "dump"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(Cli({}).code == 2);
  CHECK(Cli({"--help"}).code == 0);
  CHECK(Cli({"frobnicate"}).code == 2);
  CHECK(Cli({"--hop", "x", "kernel", "dump"}).code == 2);
}

}  // TEST_SUITE
