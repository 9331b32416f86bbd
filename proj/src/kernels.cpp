// src/kernels.cpp

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

#include "psyfe/kernels.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace psyfe {

namespace {

constexpr int kRows = 7;   // df = -1 .. 5
constexpr int kCols = 17;  // dt = 0 .. 16
using Table = std::array<std::array<double, kCols>, kRows>;

// Forward-masking filter for the low band (1 kHz masking parameters).
// Row df = 0, column 0 is the temporal-integration centre and is filled in
// by PsychoKernel.
constexpr Table kLowBand = {{
    {-0.0137, -0.0065, -0.005, -0.0041, -0.0034, -0.0029, -0.0025, -0.0022, -0.0019,
     -0.0017, -0.0014, -0.0012, -0.001, -0.0008, -0.0007, -0.0005, -0.0004},
    {0.0, -0.4736, -0.3622, -0.2971, -0.2508, -0.215, -0.1857, -0.1609, -0.1395,
     -0.1205, -0.1036, -0.0883, -0.0743, -0.0614, -0.0495, -0.0384, -0.0281},
    {-0.0914, -0.0433, -0.0331, -0.0272, -0.0229, -0.0196, -0.017, -0.0147, -0.0127,
     -0.011, -0.0095, -0.0081, -0.0068, -0.0056, -0.0045, -0.0035, -0.0026},
    {-0.1757, -0.0832, -0.0636, -0.0522, -0.0441, -0.0378, -0.0326, -0.0283, -0.0245,
     -0.0212, -0.0182, -0.0155, -0.0131, -0.0108, -0.0087, -0.0068, -0.0049},
    {-0.2386, -0.113, -0.0864, -0.0709, -0.0598, -0.0513, -0.0443, -0.0384, -0.0333,
     -0.0288, -0.0247, -0.0211, -0.0177, -0.0147, -0.0118, -0.0092, -0.0067},
    {-0.2129, -0.1008, -0.0771, -0.0632, -0.0534, -0.0458, -0.0395, -0.0343, -0.0297,
     -0.0257, -0.0221, -0.0188, -0.0158, -0.0131, -0.0105, -0.0082, -0.0060},
    {-0.0986, -0.0467, -0.0357, -0.0293, -0.0247, -0.0212, -0.0183, -0.0159, -0.0138,
     -0.0119, -0.0102, -0.0087, -0.0073, -0.0061, -0.0049, -0.0038, -0.0028},
}};

// High band (4 kHz masking parameters).
constexpr Table kHighBand = {{
    {-0.0137, -0.0060, -0.0046, -0.0037, -0.0031, -0.0026, -0.0023, -0.0019, -0.0017,
     -0.0014, -0.0012, -0.0010, -0.0008, -0.0007, -0.0005, -0.0004, -0.0002},
    {0.0, -0.4375, -0.3321, -0.2705, -0.2268, -0.1929, -0.1651, -0.1417, -0.1214,
     -0.1035, -0.0875, -0.0730, -0.0598, -0.0476, -0.0364, -0.0259, -0.0161},
    {-0.0914, -0.0400, -0.0304, -0.0247, -0.0207, -0.0176, -0.0151, -0.0130, -0.0111,
     -0.0095, -0.0080, -0.0067, -0.0055, -0.0044, -0.0033, -0.0024, -0.0015},
    {-0.1757, -0.0769, -0.0584, -0.0475, -0.0398, -0.0339, -0.0290, -0.0249, -0.0213,
     -0.0182, -0.0154, -0.0128, -0.0105, -0.0084, -0.0064, -0.0045, -0.0028},
    {-0.2386, -0.1044, -0.0792, -0.0645, -0.0541, -0.0460, -0.0394, -0.0338, -0.0290,
     -0.0247, -0.0209, -0.0174, -0.0143, -0.0114, -0.0087, -0.0062, -0.0038},
    {-0.2129, -0.0931, -0.0707, -0.0576, -0.0483, -0.0411, -0.0352, -0.0302, -0.0258,
     -0.0220, -0.0186, -0.0155, -0.0127, -0.0101, -0.0077, -0.0055, -0.0034},
    {-0.0986, -0.0431, -0.0327, -0.0267, -0.0224, -0.0190, -0.0163, -0.0140, -0.0120,
     -0.0102, -0.0086, -0.0072, -0.0059, -0.0047, -0.0036, -0.0026, -0.0016},
}};

constexpr double Abs(double x) { return x < 0 ? -x : x; }

// Off-centre taps are strictly negative, and masking in the low band is at
// least as strong as in the high band at every delayed position.
constexpr bool TablesConsistent() {
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) {
      if (r == 1 && c == 0) continue;
      if (!(kLowBand[r][c] < 0.0) || !(kHighBand[r][c] < 0.0)) return false;
      if (c >= 1 && Abs(kLowBand[r][c]) < Abs(kHighBand[r][c])) return false;
    }
  }
  return true;
}
static_assert(TablesConsistent(), "mask coefficient tables are inconsistent");

const Table &TableFor(Band band) { return band == Band::kLow ? kLowBand : kHighBand; }

}  // namespace

Band ParseBand(const std::string &name) {
  if (name == "low") return Band::kLow;
  if (name == "high") return Band::kHigh;
  throw std::invalid_argument("unknown band: " + name + " (expected low or high)");
}

std::string ToString(Band band) { return band == Band::kLow ? "low" : "high"; }

KernelGrid::KernelGrid(KernelGeometry geometry, std::vector<double> coeffs)
    : geometry_(geometry), coeffs_(std::move(coeffs)) {
  if (geometry_.df_min > 0 || geometry_.df_max < 0 || geometry_.dt_max < 0 ||
      geometry_.dt_back != 0)
    throw std::invalid_argument("kernel geometry must contain the centre tap and be causal");
  if (coeffs_.size() != static_cast<std::size_t>(geometry_.rows() * geometry_.cols()))
    throw std::invalid_argument("kernel coefficient count does not match geometry");
}

double KernelGrid::at(int df, int dt) const {
  if (df < geometry_.df_min || df > geometry_.df_max || dt < 0 || dt > geometry_.dt_max)
    throw std::out_of_range("kernel offset out of range");
  return (*this)(df, dt);
}

MaskKernel MaskKernel::Identity(KernelGeometry geometry) {
  std::vector<double> c(static_cast<std::size_t>(geometry.rows() * geometry.cols()), 0.0);
  MaskKernel k(geometry, std::move(c), 0.0, true);
  k.mutable_at(0, 0) = 1.0;
  return k;
}

MaskKernel MaskKernel::Normalized() const {
  if (normalized_) return *this;
  const double scale = 1.0 + center_ti_;
  std::vector<double> c(coeffs_.begin(), coeffs_.end());
  for (double &v : c) v /= scale;
  MaskKernel k(geometry_, std::move(c), center_ti_, true);
  // Exactly one at the centre, independent of rounding in the division.
  k.mutable_at(0, 0) = 1.0;
  return k;
}

double TemporalIntegration(Band band, bool speech) {
  if (band == Band::kLow) return speech ? 4.0 : 3.0;
  return speech ? 3.0 : 2.0;
}

double TableCoefficient(Band band, int df, int dt) {
  if (df < -1 || df > 5 || dt < 0 || dt > 16)
    throw std::out_of_range("table offset out of range");
  return TableFor(band)[df + 1][dt];
}

MaskKernel PsychoKernel(Band band, bool speech, bool normalize) {
  const Table &table = TableFor(band);
  std::vector<double> c;
  c.reserve(kRows * kCols);
  for (const auto &row : table) c.insert(c.end(), row.begin(), row.end());
  const double ti = TemporalIntegration(band, speech);
  c[1 * kCols + 0] = 1.0 + ti;
  MaskKernel k(KernelGeometry{}, std::move(c), ti, false);
  return normalize ? k.Normalized() : k;
}

OaeKernel MakeOaeKernel(Band band, double mu) {
  if (!(mu >= 0.0) || !std::isfinite(mu))
    throw std::invalid_argument("OAE strength mu must be a finite value >= 0");
  const Table &table = TableFor(band);
  std::vector<double> c;
  c.reserve(kRows * kCols);
  for (const auto &row : table)
    for (double v : row) c.push_back(mu * std::abs(v));
  c[1 * kCols + 0] = 1.0;
  return OaeKernel(KernelGeometry{}, std::move(c), mu);
}

double KernelL1Mass(const KernelGrid &kernel) {
  double sum = 0.0;
  for (double v : kernel.coeffs()) sum += std::abs(v);
  return sum;
}

std::string KernelCsv(const KernelGrid &kernel, int precision) {
  const KernelGeometry &g = kernel.geometry();
  std::ostringstream os;
  os << "df\\dt";
  for (int dt = 0; dt <= g.dt_max; ++dt) os << ',' << dt;
  os << '\n';
  char buf[64];
  for (int df = g.df_min; df <= g.df_max; ++df) {
    os << df;
    for (int dt = 0; dt <= g.dt_max; ++dt) {
      double v = kernel(df, dt);
      std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
      // Avoid "-0.0000" for taps that are exactly zero.
      if (v == 0.0) std::snprintf(buf, sizeof(buf), "%.*f", precision, 0.0);
      os << ',' << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace psyfe
