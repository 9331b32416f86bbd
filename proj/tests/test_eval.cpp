// tests/test_eval.cpp

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
#include <functional>
#include <limits>
#include <random>

#include "psyfe/error.hpp"
#include "psyfe/eval.hpp"
#include "psyfe/feature_io.hpp"
#include "test_util.hpp"

using namespace psyfe;

namespace {

double Power(const std::vector<double> &x, std::size_t a, std::size_t b) {
  double s = 0.0;
  for (std::size_t i = a; i < b; ++i) s += x[i] * x[i];
  return s / static_cast<double>(b - a);
}

// Exhaustive DTW over all monotone paths by memoized recursion; returns the
// (cost, length) pair with the lowest cost, shorter on ties.
std::pair<double, std::size_t> BruteDtw(const RealMatrix &a, const RealMatrix &b) {
  const std::size_t n = a.rows(), m = b.rows();
  std::vector<std::pair<double, std::size_t>> memo(n * m, {-1.0, 0});
  std::function<std::pair<double, std::size_t>(std::size_t, std::size_t)> go =
      [&](std::size_t i, std::size_t j) {
        auto &slot = memo[i * m + j];
        if (slot.first >= 0.0) return slot;
        double d = 0.0;
        for (std::size_t k = 0; k < a.cols(); ++k) d += (a(i, k) - b(j, k)) * (a(i, k) - b(j, k));
        d = std::sqrt(d);
        if (i == 0 && j == 0) return slot = {d, 1};
        std::pair<double, std::size_t> best{std::numeric_limits<double>::infinity(), 0};
        auto consider = [&](std::pair<double, std::size_t> c) {
          if (c.first < best.first || (c.first == best.first && c.second < best.second)) best = c;
        };
        if (i > 0 && j > 0) consider(go(i - 1, j - 1));
        if (i > 0) consider(go(i - 1, j));
        if (j > 0) consider(go(i, j - 1));
        return slot = {best.first + d, best.second + 1};
      };
  return go(n - 1, m - 1);
}

}  // namespace

TEST_SUITE("eval") {

TEST_CASE("noise generators are seeded and shaped") {
  Rng a(5), b(5);
  const Signal w1 = MakeNoise(NoiseKind::kWhite, 20000, 8000, a);
  const Signal w2 = MakeNoise(NoiseKind::kWhite, 20000, 8000, b);
  CHECK(w1.samples == w2.samples);
  CHECK(Power(w1.samples, 0, 20000) == doctest::Approx(1.0).epsilon(0.05));

  // Pink noise carries more low-frequency than high-frequency power: compare
  // the first difference (high-pass) against the signal itself.
  Rng c(6);
  const Signal pink = MakeNoise(NoiseKind::kPink, 40000, 8000, c);
  std::vector<double> diff(pink.samples.size() - 1);
  for (std::size_t i = 0; i + 1 < pink.samples.size(); ++i) diff[i] = pink.samples[i + 1] - pink.samples[i];
  CHECK(Power(diff, 0, diff.size()) < 0.5 * Power(pink.samples, 0, pink.samples.size()));

  Rng d(7);
  const Signal babble = MakeNoise(NoiseKind::kBabbleSynth, 16000, 8000, d);
  CHECK(babble.samples.size() == 16000);
  CHECK(Power(babble.samples, 0, 16000) > 0.0);
  Rng e(7);
  CHECK(MakeNoise(NoiseKind::kBabbleSynth, 16000, 8000, e).samples == babble.samples);

  CHECK(ParseNoiseKind("babble_synth") == NoiseKind::kBabbleSynth);
  CHECK(ToString(NoiseKind::kPink) == "pink");
  CHECK_THROWS_AS(ParseNoiseKind("brown"), std::invalid_argument);
}

TEST_CASE("SNR mixing") {
  Signal clean;
  clean.samples.assign(4000, 0.0);
  for (std::size_t i = 1000; i < 3000; ++i) clean.samples[i] = std::sin(0.05 * i);
  Rng rng(1);
  const Signal noise = MakeNoise(NoiseKind::kWhite, 4000, 8000, rng);
  const auto [a, b] = ActiveRegion(clean);
  CHECK(a >= 1000);
  CHECK(b <= 3000);
  CHECK(b - a > 1900);

  for (double snr : {0.0, 20.0, -5.0}) {
    const Signal mixed = MixAtSnr(clean, noise, snr);
    std::vector<double> added(4000);
    for (std::size_t i = 0; i < 4000; ++i) added[i] = mixed.samples[i] - clean.samples[i];
    const double ratio = Power(clean.samples, a, b) / Power(added, a, b);
    CHECK(ratio == doctest::Approx(std::pow(10.0, snr / 10.0)).epsilon(1e-9));
    CHECK(MeasureSnr(clean, mixed) == doctest::Approx(snr).epsilon(1e-9));
  }
  CHECK(MixAtSnr(clean, noise, kCleanSnr).samples == clean.samples);
  CHECK_THROWS_AS(MixAtSnr(Signal{std::vector<double>(10, 0.0), 8000}, noise, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(MixAtSnr(clean, noise, std::nan("")), std::invalid_argument);
}

TEST_CASE("DTW") {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> n(0.0, 1.0);
  auto random = [&](std::size_t rows) {
    RealMatrix m(rows, 3);
    for (auto &v : m.values()) v = n(gen);
    return m;
  };
  SUBCASE("identity and warping") {
    std::vector<Template> templates;
    for (int i = 0; i < 4; ++i) templates.push_back({"w" + std::to_string(i), {random(12), {}}});
    const Classification self = DtwClassify(templates[2].features, templates);
    CHECK(self.label == "w2");
    CHECK(self.distance == 0.0);
    FeatureMatrix stretched;
    stretched.data = RealMatrix(24, 3);
    for (std::size_t t = 0; t < 24; ++t)
      for (std::size_t k = 0; k < 3; ++k) stretched.data(t, k) = templates[1].features.data(t / 2, k);
    const Classification warped = DtwClassify(stretched, templates);
    CHECK(warped.label == "w1");
    CHECK(warped.distance == 0.0);
  }
  SUBCASE("matches exhaustive search") {
    for (int i = 0; i < 20; ++i) {
      const RealMatrix x = random(1 + gen() % 9), y = random(1 + gen() % 9);
      const DtwResult r = Dtw(x, y);
      const auto [cost, len] = BruteDtw(x, y);
      CHECK(r.path_length == len);
      CHECK(r.distance == doctest::Approx(cost / len).epsilon(1e-12));
      CHECK(Dtw(y, x).distance == doctest::Approx(r.distance).epsilon(1e-12));
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(Dtw(RealMatrix(3, 2), RealMatrix(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(Dtw(RealMatrix(0, 2), RealMatrix(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(DtwClassify(FeatureMatrix{}, {}), std::invalid_argument);
  }
}

TEST_CASE("RASTA") {
  RealMatrix dc(200, 1, 3.0);
  for (std::size_t t = 0; t < 200; ++t) CHECK(std::abs(RastaFilter(dc)(t, 0)) < 1e-12);

  // Unit impulse at frame k: the numerator taps appear as the increments
  // out[n] - 0.98 out[n - 1] for n = k - 4 .. k.
  const std::size_t k = 50;
  RealMatrix imp(120, 1, 0.0);
  imp(k, 0) = 1.0;
  const RealMatrix y = RastaFilter(imp);
  const double taps[5] = {0.2, 0.1, 0.0, -0.1, -0.2};
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t n = k - 4 + i;
    CHECK(y(n, 0) - 0.98 * y(n - 1, 0) == doctest::Approx(taps[i]).scale(1.0).epsilon(1e-14));
  }
  for (std::size_t n = 0; n < k - 4; ++n) CHECK(y(n, 0) == 0.0);
  for (std::size_t n = k + 1; n < 120; ++n) CHECK(y(n, 0) == doctest::Approx(0.98 * y(n - 1, 0)));

  std::mt19937_64 gen(2);
  std::normal_distribution<double> nd(0.0, 1.0);
  RealMatrix a(60, 2), b(60, 2), mix(60, 2);
  for (auto &v : a.values()) v = nd(gen);
  for (auto &v : b.values()) v = nd(gen);
  for (std::size_t i = 0; i < mix.size(); ++i) mix.values()[i] = 2.0 * a.values()[i] - 0.5 * b.values()[i];
  const RealMatrix ya = RastaFilter(a), yb = RastaFilter(b), ym = RastaFilter(mix);
  for (std::size_t i = 0; i < ym.size(); ++i)
    CHECK(ym.values()[i] == doctest::Approx(2.0 * ya.values()[i] - 0.5 * yb.values()[i]).scale(1.0));
}

TEST_CASE("metrics") {
  CHECK(std::abs(RelativeImprovement(85.28, 71.29) - 19.62) <= 0.01);
  CHECK(RelativeImprovement(50.0, 50.0) == 0.0);
  CHECK(std::abs(RelativeImprovement(24.67, 13.04) - 89.19) <= 0.01);
  CHECK_THROWS_AS(RelativeImprovement(1.0, 0.0), std::invalid_argument);

  const std::vector<double> x = {1, 2, 3}, y = {2, 3, 4};
  CHECK(CohensD(y, x) == doctest::Approx(1.0));
  CHECK(CohensD(x, y) == doctest::Approx(-1.0));
  CHECK(CohensD(x, x) == 0.0);
  const std::vector<double> c1 = {5, 5}, c2 = {3, 3};
  CHECK(std::isinf(CohensD(c1, c2)));
  CHECK(CohensD(c1, c2) > 0);
  CHECK(CohensD(c1, c1) == 0.0);
  CHECK_THROWS_AS(CohensD(std::vector<double>{1.0}, x), std::invalid_argument);
}

TEST_CASE("synthetic vocabulary") {
  const SyntheticVocabulary v(10);
  CHECK(v.size() == 10);
  CHECK(v.Label(3) == "w3");
  Rng a(1), b(1), c(2);
  const Signal s1 = v.Render(4, a), s2 = v.Render(4, b), s3 = v.Render(4, c);
  CHECK(s1.samples == s2.samples);
  CHECK(s1.samples != s3.samples);
  CHECK(s1.sample_rate == 8000);
  // Silence pads on both ends.
  CHECK(s1.samples.front() == 0.0);
  CHECK(s1.samples.back() == 0.0);
  CHECK_THROWS_AS(v.Render(10, a), std::out_of_range);
  CHECK_THROWS_AS(SyntheticVocabulary(0), std::invalid_argument);
}

TEST_CASE("harness") {
  EvalConfig cfg;
  cfg.num_classes = 3;
  cfg.tests_per_class = 2;
  cfg.snrs = {kCleanSnr};
  const EvalReport clean = RunSyntheticEval(cfg);
  REQUIRE(clean.conditions.size() == 1);
  CHECK(clean.conditions[0].BaselineMean() == 100.0);
  CHECK(clean.conditions[0].ProposedMean() == 100.0);
  CHECK(clean.items_per_condition == 6);

  cfg.snrs = {kCleanSnr, 20, 15, 10, 5, 0, -5};
  cfg.noises = {NoiseKind::kWhite, NoiseKind::kPink};
  cfg.num_seeds = 2;
  const EvalReport full = RunSyntheticEval(cfg);
  CHECK(full.conditions.size() == 14);
  const std::string csv = ReportCsv(full);
  CHECK(csv.rfind("noise,snr,baseline_acc,proposed_acc,rel_imp,cohens_d,seeds,items\n", 0) == 0);
  for (const char *snr : {",clean,", ",20,", ",15,", ",10,", ",5,", ",0,", ",-5,", ",avg0-20,"})
    CHECK(csv.find(std::string("white") + snr) != std::string::npos);
  CHECK(ReportCsv(RunSyntheticEval(cfg)) == csv);
  CHECK(ReportTable(full).find("pink") != std::string::npos);

  cfg.noises = {NoiseKind::kFile};
  CHECK_THROWS_AS(RunSyntheticEval(cfg), std::invalid_argument);
}

TEST_CASE("manifest") {
  const Manifest m = ParseManifest(
      "# vocabulary\n[templates]\nyes a/yes.wav\nno /abs/no.wav\n\n[tests]\nyes t1.wav  # first\n",
      "/data");
  REQUIRE(m.templates.size() == 2);
  CHECK(m.templates[0] == std::make_pair(std::string("yes"), std::string("/data/a/yes.wav")));
  CHECK(m.templates[1].second == "/abs/no.wav");
  REQUIRE(m.tests.size() == 1);
  CHECK(m.tests[0].second == "/data/t1.wav");
  CHECK_FALSE(m.synthetic_seed);

  CHECK(*ParseManifest("synthetic 42\n").synthetic_seed == 42);
  CHECK_THROWS_AS(ParseManifest("yes a.wav\n"), InputError);
  CHECK_THROWS_AS(ParseManifest("[templates]\nyes\n[tests]\nx y\n"), InputError);
  CHECK_THROWS_AS(ParseManifest("[templates]\nyes a b\n"), InputError);
  CHECK_THROWS_AS(ParseManifest("[templates]\nyes a.wav\n"), InputError);
  CHECK_THROWS_AS(ParseManifest("synthetic x\n"), InputError);

  // File-based evaluation over rendered words.
  testutil::TempDir dir;
  const SyntheticVocabulary vocab(3);
  Rng rng(4);
  std::string text = "[templates]\n";
  for (std::size_t c = 0; c < 3; ++c) {
    WriteWav(dir.file("t" + std::to_string(c) + ".wav"), vocab.Render(c, rng));
    text += vocab.Label(c) + " t" + std::to_string(c) + ".wav\n";
  }
  text += "[tests]\n";
  for (std::size_t c = 0; c < 3; ++c) {
    WriteWav(dir.file("q" + std::to_string(c) + ".wav"), vocab.Render(c, rng));
    text += vocab.Label(c) + " q" + std::to_string(c) + ".wav\n";
  }
  EvalConfig cfg;
  cfg.snrs = {kCleanSnr, 10};
  const EvalReport r = RunManifestEval(ParseManifest(text, dir.file("")), cfg);
  CHECK(r.conditions.size() == 2);
  CHECK(r.conditions[0].ProposedMean() == 100.0);
  CHECK(r.items_per_condition == 3);
}

}  // TEST_SUITE
