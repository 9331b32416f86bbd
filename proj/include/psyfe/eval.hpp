// include/psyfe/eval.hpp

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

#ifndef PSYFE_EVAL_HPP_
#define PSYFE_EVAL_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "psyfe/cepstral.hpp"
#include "psyfe/dsp.hpp"
#include "psyfe/pipeline.hpp"
#include "psyfe/rng.hpp"

namespace psyfe {

// ---------------------------------------------------------------------------
// Noise and mixing

enum class NoiseKind { kWhite, kPink, kBabbleSynth, kFile };

NoiseKind ParseNoiseKind(const std::string &name);
std::string ToString(NoiseKind kind);

inline constexpr double kCleanSnr = std::numeric_limits<double>::infinity();

struct SnrSpec {
  double snr_db = kCleanSnr;  // +inf means no noise
  NoiseKind noise_kind = NoiseKind::kWhite;
};

/// Generated noise of `length` samples at unit-order power. kFile is not
/// generated; pass the file's signal to MixAtSnr directly.
Signal MakeNoise(NoiseKind kind, std::size_t length, int sample_rate, Rng &rng);

/// [begin, end) between the first and last sample whose magnitude exceeds
/// 1e-3 of the peak. Empty for an all-zero signal.
std::pair<std::size_t, std::size_t> ActiveRegion(const Signal &clean);

/// Adds noise (tiled to the clean length) scaled so that the clean/noise
/// power ratio over the clean signal's active region equals snr_db. +inf
/// returns the clean signal unchanged. Zero-power clean or noise throws.
Signal MixAtSnr(const Signal &clean, const Signal &noise, double snr_db);

/// 10 log10(P_clean / P_(noisy - clean)) over the clean active region.
double MeasureSnr(const Signal &clean, const Signal &noisy);

// ---------------------------------------------------------------------------
// DTW template matching

struct DtwResult {
  double distance = 0.0;  // accumulated Euclidean cost / path length
  std::size_t path_length = 0;
};

/// Steps (1,0), (0,1), (1,1) with unit weights. Among equal-cost paths the
/// shortest wins; the result is symmetric in its arguments.
DtwResult Dtw(const RealMatrix &a, const RealMatrix &b);

struct Template {
  std::string label;
  FeatureMatrix features;
};

struct Classification {
  std::string label;
  std::size_t index = 0;
  double distance = 0.0;
};

/// Label of the nearest template; earliest template wins ties.
Classification DtwClassify(const FeatureMatrix &query, std::span<const Template> templates);

// ---------------------------------------------------------------------------
// RASTA

/// Filters every column of a frames x dims trajectory matrix with
///   H(z) = 0.1 z^4 (2 + z^-1 - z^-3 - 2 z^-4) / (1 - 0.98 z^-1).
/// The z^4 advance is realized by delaying the causal filter 4 frames and
/// shifting back; history before the first frame and input past the last
/// frame replicate the edge values, with the pole state starting at rest.
RealMatrix RastaFilter(const RealMatrix &trajectories);

// ---------------------------------------------------------------------------
// Reporting metrics

/// (r_p - r_t) / r_t * 100. Throws for r_t <= 0.
double RelativeImprovement(double proposed, double target);

/// (mean_a - mean_b) / pooled standard deviation. Zero pooled deviation gives
/// 0 for equal means and +/-inf otherwise. Each sample needs >= 2 values.
double CohensD(std::span<const double> a, std::span<const double> b);

// ---------------------------------------------------------------------------
// Synthetic word task

/// Multi-tone chirp "words": each class is three formant-like tone tracks with
/// class-specific start/end frequencies. A speaker applies pitch and duration
/// jitter. Words are padded with silence on both sides.
class SyntheticVocabulary {
 public:
  explicit SyntheticVocabulary(std::size_t num_classes, int sample_rate = 8000);

  std::size_t size() const { return classes_.size(); }
  std::string Label(std::size_t cls) const;

  /// Renders class `cls` for a speaker drawn from `rng`.
  Signal Render(std::size_t cls, Rng &rng) const;

 private:
  struct Track {
    double start_hz, end_hz, amplitude, curve;
  };
  struct WordClass {
    Track tracks[3];
    double duration_s;
  };

  int sample_rate_;
  std::vector<WordClass> classes_;
};

// ---------------------------------------------------------------------------
// Evaluation harness

struct EvalConfig {
  std::vector<double> snrs = {kCleanSnr, 20, 15, 10, 5, 0, -5};
  std::vector<NoiseKind> noises = {NoiseKind::kWhite};
  std::size_t num_classes = 10;
  std::size_t tests_per_class = 3;
  std::size_t num_seeds = 1;
  std::uint64_t seed = 42;
  PipelineConfig baseline = PipelineConfig::Baseline();
  PipelineConfig proposed = PipelineConfig::Proposed();
  Signal noise_file;  // used when a noise kind is kFile
};

struct ConditionResult {
  NoiseKind noise = NoiseKind::kWhite;
  double snr_db = kCleanSnr;
  std::vector<double> baseline;  // accuracy (%) per seed
  std::vector<double> proposed;

  double BaselineMean() const;
  double ProposedMean() const;
  double RelImp() const;   // relative improvement of the means
  double CohensD() const;  // proposed vs baseline over seeds, NaN if < 2 seeds
};

struct EvalReport {
  std::vector<ConditionResult> conditions;  // noise-major, SNRs in config order
  std::size_t num_seeds = 0;
  std::size_t items_per_condition = 0;

  /// Mean over conditions with 0 <= SNR <= 20 for one noise kind.
  std::pair<double, double> Avg0To20(NoiseKind noise) const;
};

struct Manifest {
  std::vector<std::pair<std::string, std::string>> templates;  // label, path
  std::vector<std::pair<std::string, std::string>> tests;
  std::optional<std::uint64_t> synthetic_seed;  // "synthetic SEED" line
};

/// Text manifest with "[templates]" and "[tests]" sections, one
/// "label path" per line; blank lines and '#' comments are ignored. Relative
/// paths resolve against `base_dir`. Alternatively a single "synthetic SEED"
/// line selects the synthetic task. Throws InputError when malformed.
Manifest ParseManifest(const std::string &text, const std::string &base_dir = "");

EvalReport RunSyntheticEval(const EvalConfig &config);
EvalReport RunManifestEval(const Manifest &manifest, const EvalConfig &config);

std::string ReportCsv(const EvalReport &report);
std::string ReportTable(const EvalReport &report);

/// "clean" for +inf, otherwise the integer-valued dB figure.
std::string SnrName(double snr_db);

}  // namespace psyfe

#endif  // PSYFE_EVAL_HPP_
