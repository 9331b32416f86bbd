// tools/cli.cpp

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

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "psyfe/cepstral.hpp"
#include "psyfe/double_transform.hpp"
#include "psyfe/dsp.hpp"
#include "psyfe/error.hpp"
#include "psyfe/eval.hpp"
#include "psyfe/feature_io.hpp"
#include "psyfe/kernels.hpp"
#include "psyfe/pipeline.hpp"

namespace psyfe::cli {

namespace {

// Parsed state for every option. Defaults mirror the library defaults.
struct RunConfig {
  PipelineConfig pipeline;
  std::string window = "hamming";
  std::string vad_threshold = "3";
  std::uint64_t seed = 42;
  std::string format = "bin";

  // extract / vad / analyze-dt
  std::string input;
  std::string output;

  // kernel dump
  std::string band = "low";
  bool speech = true;
  bool normalize = false;
  int precision = -1;

  // analyze-dt
  std::string kernel_band;
  std::string grid;
  std::string out_prefix;
  bool log_magnitude = false;
  bool processed = false;

  // eval
  std::string synthetic_seed;
  std::string manifest;
  std::vector<std::string> snrs = {"clean", "20", "15", "10", "5", "0", "-5"};
  std::vector<std::string> noises = {"white"};
  std::string noise_file;
  std::size_t seeds = 1;
  std::size_t classes = 10;
  std::size_t tests_per_class = 3;
};

double ParseSnr(const std::string &s) {
  if (s == "clean" || s == "inf" || s == "+inf") return kCleanSnr;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument("bad SNR value: " + s);
  return v;
}

double ParseThreshold(const std::string &s) {
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != s.size()) throw std::invalid_argument("bad VAD threshold: " + s);
  return v;
}

// CLI11 prints the negated alias value next to a flag pair, so state the
// actual default in the description.
std::string WithDefault(const std::string &desc, bool on) {
  return desc + (on ? " [on]" : " [off]");
}

void AddProcessingOptions(CLI::App &app, RunConfig &rc) {
  auto &p = rc.pipeline;
  const std::string fr = "Framing", en = "Masking engine", vd = "VAD", ml = "Cepstra";
  app.add_option("--frame-len", p.frame.frame_len, "Frame length in samples")
      ->capture_default_str()->group(fr);
  app.add_option("--hop", p.frame.hop, "Frame hop in samples")->capture_default_str()->group(fr);
  app.add_option("--window", rc.window, "Window: hamming, hann or rect")
      ->capture_default_str()->check(CLI::IsMember({"hamming", "hann", "rect"}))->group(fr);
  app.add_option("--nfft", p.frame.nfft, "FFT size (power of two)")->capture_default_str()->group(fr);
  app.add_option("--preemph", p.frame.preemph, "Pre-emphasis coefficient, 0 disables")
      ->capture_default_str()->group(fr);

  app.add_flag("--oae,!--no-oae", p.engine.oae_enabled,
               WithDefault("OAE pre-filter", p.engine.oae_enabled))->group(en);
  app.add_flag("--adaptive,!--no-adaptive", p.engine.adaptive,
               WithDefault("Band split and VAD-switched kernels", p.engine.adaptive))->group(en);
  app.add_flag("--filter,!--no-filter", p.engine.filter_enabled,
               WithDefault("Psychoacoustic masking stage", p.engine.filter_enabled))->group(en);
  app.add_flag("--normalize-kernels,!--raw-kernels", p.engine.normalize_kernels,
               WithDefault("Scale kernels to a unit centre tap", p.engine.normalize_kernels))
      ->group(en);
  app.add_option("--oae-mu", p.engine.oae_mu, "OAE strength")->capture_default_str()->group(en);

  app.add_option("--vad-alpha", p.engine.vad.smooth_alpha, "Recursive smoothing constant")
      ->capture_default_str()->group(vd);
  app.add_option("--vad-min-window", p.engine.vad.min_window, "Minimum-tracking window (frames)")
      ->capture_default_str()->group(vd);
  app.add_option("--vad-threshold", rc.vad_threshold, "Energy-ratio threshold (or inf)")
      ->capture_default_str()->group(vd);
  app.add_option("--vad-eps", p.engine.vad.floor_eps, "Noise floor clamp")
      ->capture_default_str()->group(vd);

  app.add_option("--n-mels", p.mel.n_mels, "Mel filters")->capture_default_str()->group(ml);
  app.add_option("--fmin", p.mel.fmin, "Lowest mel edge (Hz)")->capture_default_str()->group(ml);
  app.add_option("--fmax", p.mel.fmax, "Highest mel edge (Hz)")->capture_default_str()->group(ml);
  app.add_option("--n-ceps", p.mel.n_ceps, "Cepstra incl. c0")->capture_default_str()->group(ml);
  app.add_option("--delta-window", p.mel.delta_window, "Delta regression half-width")
      ->capture_default_str()->group(ml);
  app.add_option("--log-floor", p.mel.log_floor, "Mel energy floor before log")
      ->capture_default_str()->group(ml);
  app.add_flag("--cmvn,!--no-cmvn", p.mel.use_cmvn, WithDefault("Utterance CMVN", p.mel.use_cmvn))
      ->group(ml);
  app.add_flag("--deltas,!--no-deltas", p.deltas,
               WithDefault("Append deltas and accelerations", p.deltas))->group(ml);
  app.add_flag("--rasta,!--no-rasta", p.rasta, WithDefault("RASTA-filter static cepstra", p.rasta))
      ->group(ml);

  app.add_option("--seed", rc.seed, "Seed for every random draw")->capture_default_str();
}

void Finalize(RunConfig &rc) {
  rc.pipeline.frame.window = ParseWindowType(rc.window);
  rc.pipeline.engine.vad.ratio_threshold = ParseThreshold(rc.vad_threshold);
}

// Shortest text that parses back to the same double.
std::string Num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string DumpConfig(const RunConfig &rc) {
  const auto &p = rc.pipeline;
  std::ostringstream os;
  auto b = [](bool v) { return v ? "true" : "false"; };
  os << "# psyfe configuration\n"
     << "frame-len = " << p.frame.frame_len << '\n'
     << "hop = " << p.frame.hop << '\n'
     << "window = " << rc.window << '\n'
     << "nfft = " << p.frame.nfft << '\n'
     << "preemph = " << Num(p.frame.preemph) << '\n'
     << "oae = " << b(p.engine.oae_enabled) << '\n'
     << "adaptive = " << b(p.engine.adaptive) << '\n'
     << "filter = " << b(p.engine.filter_enabled) << '\n'
     << "normalize-kernels = " << b(p.engine.normalize_kernels) << '\n'
     << "oae-mu = " << Num(p.engine.oae_mu) << '\n'
     << "vad-alpha = " << Num(p.engine.vad.smooth_alpha) << '\n'
     << "vad-min-window = " << p.engine.vad.min_window << '\n'
     << "vad-threshold = " << rc.vad_threshold << '\n'
     << "vad-eps = " << Num(p.engine.vad.floor_eps) << '\n'
     << "n-mels = " << p.mel.n_mels << '\n'
     << "fmin = " << Num(p.mel.fmin) << '\n'
     << "fmax = " << Num(p.mel.fmax) << '\n'
     << "n-ceps = " << p.mel.n_ceps << '\n'
     << "delta-window = " << p.mel.delta_window << '\n'
     << "log-floor = " << Num(p.mel.log_floor) << '\n'
     << "cmvn = " << b(p.mel.use_cmvn) << '\n'
     << "deltas = " << b(p.deltas) << '\n'
     << "rasta = " << b(p.rasta) << '\n'
     << "seed = " << rc.seed << '\n';
  return os.str();
}

int CmdExtract(RunConfig &rc, std::ostream &out) {
  const Signal signal = LoadWav(rc.input);
  rc.pipeline.Validate(signal.sample_rate);
  const FeatureMatrix feats = ExtractFeatures(signal, rc.pipeline);
  if (rc.format == "csv")
    WriteFeaturesCsv(rc.output, feats);
  else
    WriteFeaturesBinary(rc.output, feats, static_cast<std::uint32_t>(signal.sample_rate),
                        static_cast<std::uint32_t>(rc.pipeline.frame.hop));
  out << "wrote " << feats.frames() << " frames x " << feats.dims() << " dims to "
      << rc.output << '\n';
  return kExitOk;
}

int CmdKernelDump(const RunConfig &rc, std::ostream &out) {
  const MaskKernel k = PsychoKernel(ParseBand(rc.band), rc.speech, rc.normalize);
  const int precision = rc.precision >= 0 ? rc.precision : (rc.normalize ? 8 : 4);
  out << KernelCsv(k, precision);
  return kExitOk;
}

int CmdVad(RunConfig &rc, std::ostream &out) {
  const Signal signal = LoadWav(rc.input);
  rc.pipeline.Validate(signal.sample_rate);
  const ComplexSpectrogram spec = ComputeStft(signal, rc.pipeline.frame);
  const VadTrack track = RunVad(PowerSpectrogram(spec.data), rc.pipeline.engine.vad);
  std::string text;
  for (std::uint8_t s : track.speech) text += s ? "1\n" : "0\n";
  out << text;
  return kExitOk;
}

std::pair<std::size_t, std::size_t> ParseGrid(const std::string &g) {
  const auto x = g.find('x');
  if (x == std::string::npos) throw std::invalid_argument("grid must look like ROWSxCOLS");
  try {
    return {std::stoul(g.substr(0, x)), std::stoul(g.substr(x + 1))};
  } catch (const std::exception &) {
    throw std::invalid_argument("grid must look like ROWSxCOLS");
  }
}

int CmdAnalyzeDt(RunConfig &rc, std::ostream &out) {
  DtSpectrum dt;
  if (!rc.kernel_band.empty()) {
    const MaskKernel k = rc.kernel_band == "identity"
                             ? MaskKernel::Identity()
                             : PsychoKernel(ParseBand(rc.kernel_band), rc.speech, rc.normalize);
    const auto [rows, cols] = ParseGrid(rc.grid.empty() ? "64x64" : rc.grid);
    dt = KernelResponse(k, rows, cols);
  } else if (!rc.input.empty()) {
    const Signal signal = LoadWav(rc.input);
    rc.pipeline.Validate(signal.sample_rate);
    ComplexSpectrogram spec = ComputeStft(signal, rc.pipeline.frame);
    if (rc.processed) spec = Process(spec, rc.pipeline.engine);
    RealMatrix mag = MagnitudeSpectrogram(spec.data);
    if (!rc.grid.empty()) {
      const auto [rows, cols] = ParseGrid(rc.grid);
      if (rows > mag.rows() || cols > mag.cols())
        throw std::invalid_argument("grid exceeds the spectrogram size");
      RealMatrix crop(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) crop(r, c) = mag(r, c);
      mag = std::move(crop);
    }
    dt = DoubleTransform(mag, DtOptions{rc.log_magnitude});
  } else {
    throw std::invalid_argument("analyze-dt needs a wav file or --kernel");
  }
  if (!rc.out_prefix.empty()) {
    WriteFile(rc.out_prefix + ".csv", DtCsv(dt));
    WriteFile(rc.out_prefix + ".pgm", DtPgm(dt));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", CenterColumnConcentration(dt));
  out << "concentration " << buf << '\n';
  return kExitOk;
}

int CmdEval(RunConfig &rc, std::ostream &out) {
  EvalConfig ec;
  ec.snrs.clear();
  for (const auto &s : rc.snrs) ec.snrs.push_back(ParseSnr(s));
  ec.noises.clear();
  for (const auto &n : rc.noises) ec.noises.push_back(ParseNoiseKind(n));
  if (!rc.noise_file.empty()) ec.noise_file = LoadWav(rc.noise_file);
  ec.num_seeds = rc.seeds;
  ec.num_classes = rc.classes;
  ec.tests_per_class = rc.tests_per_class;
  ec.seed = rc.seed;
  // Shared front-end settings apply to both systems; the stage switches that
  // define baseline vs proposed stay fixed.
  ec.baseline = rc.pipeline;
  ec.baseline.engine.oae_enabled = false;
  ec.baseline.engine.filter_enabled = false;
  ec.baseline.mel.use_cmvn = false;
  ec.proposed = rc.pipeline;
  ec.proposed.engine.oae_enabled = true;
  ec.proposed.engine.filter_enabled = true;
  ec.proposed.engine.adaptive = true;
  ec.proposed.mel.use_cmvn = true;

  EvalReport report;
  if (!rc.manifest.empty()) {
    const std::string text = ReadFile(rc.manifest);
    const auto dir = std::filesystem::path(rc.manifest).parent_path().string();
    const Manifest manifest = ParseManifest(text, dir);
    if (manifest.synthetic_seed) {
      ec.seed = *manifest.synthetic_seed;
      report = RunSyntheticEval(ec);
    } else {
      report = RunManifestEval(manifest, ec);
    }
  } else {
    report = RunSyntheticEval(ec);
  }
  const std::string table = ReportTable(report);
  if (!rc.out_prefix.empty()) {
    WriteFile(rc.out_prefix + ".csv", ReportCsv(report));
    WriteFile(rc.out_prefix + ".txt", table);
  }
  out << table;
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  RunConfig rc;
  CLI::App app{"psyfe: psychoacoustic speech front end"};
  app.name(args.empty() ? "psyfe" : std::filesystem::path(args[0]).filename().string());
  app.require_subcommand(0, 1);
  app.set_config("--config", "", "Flat 'key = value' config file (CLI flags win)");
  app.allow_config_extras(false);
  std::string write_config;
  app.add_option("--write-config", write_config, "Write the effective configuration and exit");
  AddProcessingOptions(app, rc);

  auto *extract = app.add_subcommand("extract", "Extract MFCC(39) features from a wav file");
  extract->fallthrough();
  extract->add_option("wav", rc.input, "Input wav (mono PCM16)")->required();
  extract->add_option("-o,--output", rc.output, "Output feature file")->required();
  extract->add_option("--format", rc.format, "bin or csv")
      ->capture_default_str()->check(CLI::IsMember({"bin", "csv"}));

  auto *kernel = app.add_subcommand("kernel", "Kernel utilities");
  kernel->require_subcommand(1);
  auto *dump = kernel->add_subcommand("dump", "Print a mask kernel as CSV");
  dump->fallthrough();
  dump->add_option("--band", rc.band, "low or high")->capture_default_str();
  dump->add_flag("--speech,!--no-speech", rc.speech, WithDefault("Speech-frame centre tap", rc.speech));
  dump->add_flag("--normalize", rc.normalize, "Divide by 1 + alpha_TI");
  dump->add_option("--precision", rc.precision, "Decimals (default 4 raw, 8 normalized)");

  auto *adt = app.add_subcommand("analyze-dt", "Double-transform spectrum of a wav or kernel");
  adt->fallthrough();
  adt->add_option("wav", rc.input, "Input wav");
  adt->add_option("--kernel", rc.kernel_band, "Analyze a kernel instead: low, high or identity");
  adt->add_flag("--speech,!--no-speech", rc.speech, WithDefault("Kernel centre variant", rc.speech));
  adt->add_flag("--normalize", rc.normalize, "Normalized kernel");
  adt->add_option("--grid", rc.grid, "ROWSxCOLS (kernel default 64x64; wav crops)");
  adt->add_option("--out", rc.out_prefix, "Write PREFIX.csv and PREFIX.pgm");
  adt->add_flag("--log", rc.log_magnitude, "Transform log magnitude");
  adt->add_flag("--processed", rc.processed, "Run OAE and masking first");

  auto *vad = app.add_subcommand("vad", "Print one 0/1 speech flag per frame");
  vad->fallthrough();
  vad->add_option("wav", rc.input, "Input wav")->required();

  auto *ev = app.add_subcommand("eval", "Baseline vs proposed on the DTW word task");
  ev->fallthrough();
  ev->add_option("--synthetic", rc.synthetic_seed, "Synthetic task with this seed");
  ev->add_option("--manifest", rc.manifest, "Manifest of template and test wavs");
  ev->add_option("--snr", rc.snrs, "SNR conditions (dB or clean/inf)")->delimiter(',');
  ev->add_option("--noise", rc.noises, "white, pink, babble_synth, file")->delimiter(',');
  ev->add_option("--noise-file", rc.noise_file, "Noise wav for --noise file");
  ev->add_option("--seeds", rc.seeds, "Number of seeds")->capture_default_str();
  ev->add_option("--classes", rc.classes, "Vocabulary size")->capture_default_str();
  ev->add_option("--tests-per-class", rc.tests_per_class, "Test items per class")
      ->capture_default_str();
  ev->add_option("--out", rc.out_prefix, "Write PREFIX.csv and PREFIX.txt");

  std::vector<char *> argv;
  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"psyfe"} : args;
  for (auto &a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (!write_config.empty()) {
      WriteFile(write_config, DumpConfig(rc));
      return kExitOk;
    }
    Finalize(rc);
    if (!rc.synthetic_seed.empty()) {
      try {
        rc.seed = std::stoull(rc.synthetic_seed);
      } catch (const std::exception &) {
        throw std::invalid_argument("--synthetic expects an integer seed");
      }
    }
    if (*extract) return CmdExtract(rc, out);
    if (*dump) return CmdKernelDump(rc, out);
    if (*adt) return CmdAnalyzeDt(rc, out);
    if (*vad) return CmdVad(rc, out);
    if (*ev) {
      if (!rc.manifest.empty() && !rc.synthetic_seed.empty())
        throw std::invalid_argument("use either --synthetic or --manifest");
      return CmdEval(rc, out);
    }
    err << "error: a subcommand is required\n" << app.help();
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitProcessing;
  }
  return kExitUsage;
}

}  // namespace psyfe::cli
