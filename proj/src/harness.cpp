// src/harness.cpp

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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "psyfe/error.hpp"
#include "psyfe/eval.hpp"

namespace psyfe {

namespace {

double Mean(const std::vector<double> &v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

struct Item {
  std::string label;
  Signal signal;
};

// Accuracy (%) of both systems for every (noise, snr) condition with one set
// of templates and test items. Noise draws depend only on `seed` and the
// condition/item indices.
void ScoreConditions(const std::vector<Item> &templates, const std::vector<Item> &tests,
                     const EvalConfig &config, std::uint64_t seed,
                     std::vector<double> *baseline, std::vector<double> *proposed) {
  std::vector<Template> tb, tp;
  for (const Item &t : templates) {
    tb.push_back({t.label, ExtractFeatures(t.signal, config.baseline)});
    tp.push_back({t.label, ExtractFeatures(t.signal, config.proposed)});
  }
  const std::size_t n_snr = config.snrs.size();
  baseline->assign(config.noises.size() * n_snr, 0.0);
  proposed->assign(config.noises.size() * n_snr, 0.0);
  for (std::size_t ni = 0; ni < config.noises.size(); ++ni) {
    for (std::size_t si = 0; si < n_snr; ++si) {
      std::size_t hits_b = 0, hits_p = 0;
      for (std::size_t i = 0; i < tests.size(); ++i) {
        const Signal &clean = tests[i].signal;
        Signal noisy = clean;
        if (!(std::isinf(config.snrs[si]) && config.snrs[si] > 0)) {
          Signal noise;
          if (config.noises[ni] == NoiseKind::kFile) {
            noise = config.noise_file;
          } else {
            Rng rng(Rng::Derive(seed, 1000000 + (ni * n_snr + si) * 100000 + i));
            noise = MakeNoise(config.noises[ni], clean.samples.size(), clean.sample_rate, rng);
          }
          noisy = MixAtSnr(clean, noise, config.snrs[si]);
        }
        if (DtwClassify(ExtractFeatures(noisy, config.baseline), tb).label == tests[i].label)
          ++hits_b;
        if (DtwClassify(ExtractFeatures(noisy, config.proposed), tp).label == tests[i].label)
          ++hits_p;
      }
      const double n = static_cast<double>(tests.size());
      (*baseline)[ni * n_snr + si] = 100.0 * static_cast<double>(hits_b) / n;
      (*proposed)[ni * n_snr + si] = 100.0 * static_cast<double>(hits_p) / n;
    }
  }
}

EvalReport Assemble(const EvalConfig &config, const std::vector<std::vector<double>> &base,
                    const std::vector<std::vector<double>> &prop, std::size_t items) {
  EvalReport report;
  report.num_seeds = base.size();
  report.items_per_condition = items;
  const std::size_t n_snr = config.snrs.size();
  for (std::size_t ni = 0; ni < config.noises.size(); ++ni)
    for (std::size_t si = 0; si < n_snr; ++si) {
      ConditionResult c;
      c.noise = config.noises[ni];
      c.snr_db = config.snrs[si];
      for (std::size_t s = 0; s < base.size(); ++s) {
        c.baseline.push_back(base[s][ni * n_snr + si]);
        c.proposed.push_back(prop[s][ni * n_snr + si]);
      }
      report.conditions.push_back(std::move(c));
    }
  return report;
}

void CheckConfig(const EvalConfig &config) {
  if (config.snrs.empty()) throw std::invalid_argument("no SNR conditions");
  if (config.noises.empty()) throw std::invalid_argument("no noise kinds");
  if (config.num_seeds < 1) throw std::invalid_argument("num_seeds must be >= 1");
  for (double s : config.snrs)
    if (std::isnan(s) || (std::isinf(s) && s < 0)) throw std::invalid_argument("invalid SNR");
  for (NoiseKind k : config.noises)
    if (k == NoiseKind::kFile && config.noise_file.samples.empty())
      throw std::invalid_argument("file noise requested but no noise signal given");
}

std::string Fmt(const char *fmt, double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

double ConditionResult::BaselineMean() const { return Mean(baseline); }
double ConditionResult::ProposedMean() const { return Mean(proposed); }

double ConditionResult::RelImp() const {
  const double b = BaselineMean();
  if (!(b > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return RelativeImprovement(ProposedMean(), b);
}

double ConditionResult::CohensD() const {
  if (baseline.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  return psyfe::CohensD(proposed, baseline);
}

std::pair<double, double> EvalReport::Avg0To20(NoiseKind noise) const {
  std::vector<double> b, p;
  for (const auto &c : conditions)
    if (c.noise == noise && c.snr_db >= 0.0 && c.snr_db <= 20.0) {
      b.push_back(c.BaselineMean());
      p.push_back(c.ProposedMean());
    }
  return {Mean(b), Mean(p)};
}

std::string SnrName(double snr_db) {
  if (std::isinf(snr_db) && snr_db > 0) return "clean";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", snr_db);
  return buf;
}

Manifest ParseManifest(const std::string &text, const std::string &base_dir) {
  Manifest m;
  std::istringstream is(text);
  std::string line;
  int section = 0;  // 1 = templates, 2 = tests
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (a == "[templates]" || a == "[tests]") {
      if (ls >> extra) throw InputError("manifest line " + std::to_string(lineno) + ": junk after section header");
      section = a == "[templates]" ? 1 : 2;
      continue;
    }
    if (a == "synthetic" && section == 0) {
      std::string seed_text;
      if (!(ls >> seed_text) || (ls >> extra) ||
          seed_text.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("manifest line " + std::to_string(lineno) + ": expected 'synthetic SEED'");
      try {
        m.synthetic_seed = std::stoull(seed_text);
      } catch (const std::exception &) {
        throw InputError("manifest line " + std::to_string(lineno) + ": seed out of range");
      }
      continue;
    }
    if (section == 0)
      throw InputError("manifest line " + std::to_string(lineno) + ": entry before any section header");
    if (!(ls >> b) || (ls >> extra))
      throw InputError("manifest line " + std::to_string(lineno) + ": expected 'label path'");
    std::filesystem::path p(b);
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    (section == 1 ? m.templates : m.tests).emplace_back(a, p.string());
  }
  if (m.synthetic_seed) {
    if (!m.templates.empty() || !m.tests.empty())
      throw InputError("a synthetic manifest cannot also list files");
    return m;
  }
  if (m.templates.empty()) throw InputError("manifest has no templates");
  if (m.tests.empty()) throw InputError("manifest has no test items");
  return m;
}

EvalReport RunSyntheticEval(const EvalConfig &config) {
  CheckConfig(config);
  const SyntheticVocabulary vocab(config.num_classes);
  std::vector<std::vector<double>> base(config.num_seeds), prop(config.num_seeds);
  const auto n_seeds = static_cast<long>(config.num_seeds);
  // Seeds are independent; results land in per-seed slots, so the report
  // does not depend on scheduling.
#pragma omp parallel for schedule(dynamic, 1)
  for (long s = 0; s < n_seeds; ++s) {
    const std::uint64_t seed = Rng::Derive(config.seed, static_cast<std::uint64_t>(s));
    Rng speaker_rng(Rng::Derive(seed, 1));
    std::vector<Item> templates, tests;
    for (std::size_t c = 0; c < vocab.size(); ++c)
      templates.push_back({vocab.Label(c), vocab.Render(c, speaker_rng)});
    Rng test_rng(Rng::Derive(seed, 2));
    for (std::size_t c = 0; c < vocab.size(); ++c)
      for (std::size_t k = 0; k < config.tests_per_class; ++k)
        tests.push_back({vocab.Label(c), vocab.Render(c, test_rng)});
    ScoreConditions(templates, tests, config, seed, &base[static_cast<std::size_t>(s)],
                    &prop[static_cast<std::size_t>(s)]);
  }
  return Assemble(config, base, prop, vocab.size() * config.tests_per_class);
}

EvalReport RunManifestEval(const Manifest &manifest, const EvalConfig &config) {
  CheckConfig(config);
  std::vector<Item> templates, tests;
  for (const auto &[label, path] : manifest.templates) templates.push_back({label, LoadWav(path)});
  for (const auto &[label, path] : manifest.tests) tests.push_back({label, LoadWav(path)});
  std::vector<std::vector<double>> base(config.num_seeds), prop(config.num_seeds);
  for (std::size_t s = 0; s < config.num_seeds; ++s)
    ScoreConditions(templates, tests, config, Rng::Derive(config.seed, s), &base[s], &prop[s]);
  return Assemble(config, base, prop, tests.size());
}

std::string ReportCsv(const EvalReport &report) {
  std::ostringstream os;
  os << "noise,snr,baseline_acc,proposed_acc,rel_imp,cohens_d,seeds,items\n";
  auto row = [&](const std::string &noise, const std::string &snr, double b, double p,
                 double ri, double d) {
    os << noise << ',' << snr << ',' << Fmt("%.2f", b) << ',' << Fmt("%.2f", p) << ','
       << Fmt("%.2f", ri) << ',' << Fmt("%.4f", d) << ',' << report.num_seeds << ','
       << report.items_per_condition << '\n';
  };
  std::vector<NoiseKind> seen;
  for (const auto &c : report.conditions) {
    row(ToString(c.noise), SnrName(c.snr_db), c.BaselineMean(), c.ProposedMean(), c.RelImp(),
        c.CohensD());
    if (std::find(seen.begin(), seen.end(), c.noise) == seen.end()) seen.push_back(c.noise);
  }
  for (NoiseKind k : seen) {
    const auto [b, p] = report.Avg0To20(k);
    const double ri = b > 0.0 ? RelativeImprovement(p, b) : std::numeric_limits<double>::quiet_NaN();
    row(ToString(k), "avg0-20", b, p, ri, std::numeric_limits<double>::quiet_NaN());
  }
  return os.str();
}

std::string ReportTable(const EvalReport &report) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-13s %-8s %10s %10s %9s %10s\n", "noise", "SNR/dB",
                "baseline%", "proposed%", "rel.imp%", "cohen's d");
  os << buf;
  for (const auto &c : report.conditions) {
    std::snprintf(buf, sizeof(buf), "%-13s %-8s %10s %10s %9s %10s\n", ToString(c.noise).c_str(),
                  SnrName(c.snr_db).c_str(), Fmt("%.2f", c.BaselineMean()).c_str(),
                  Fmt("%.2f", c.ProposedMean()).c_str(), Fmt("%.2f", c.RelImp()).c_str(),
                  Fmt("%.4f", c.CohensD()).c_str());
    os << buf;
  }
  std::snprintf(buf, sizeof(buf), "(%zu seed(s), %zu test items per condition)\n",
                report.num_seeds, report.items_per_condition);
  os << buf;
  return os.str();
}

}  // namespace psyfe
