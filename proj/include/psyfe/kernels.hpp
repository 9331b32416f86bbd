// include/psyfe/kernels.hpp

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

#ifndef PSYFE_KERNELS_HPP_
#define PSYFE_KERNELS_HPP_

#include <span>
#include <string>
#include <vector>

namespace psyfe {

enum class Band { kLow, kHigh };

Band ParseBand(const std::string &name);
std::string ToString(Band band);

/// Extent of a 2D mask kernel. Frequency offsets run over [df_min, df_max]
/// bins; time offsets over [0, dt_max] past frames. dt_back is the reach into
/// future frames and is zero for every shipped kernel (forward masking only).
struct KernelGeometry {
  int df_min = -1;
  int df_max = 5;
  int dt_max = 16;
  int dt_back = 0;

  int rows() const { return df_max - df_min + 1; }
  int cols() const { return dt_max + 1; }
  bool operator==(const KernelGeometry &) const = default;
};

/// Coefficient grid indexed by (df, dt). The filtered value of a cell is
///   out(f, t) = sum_{df, dt} K(df, dt) * in(f + df, t - dt).
class KernelGrid {
 public:
  KernelGrid() = default;
  KernelGrid(KernelGeometry geometry, std::vector<double> coeffs);

  const KernelGeometry &geometry() const { return geometry_; }
  std::span<const double> coeffs() const { return coeffs_; }

  double operator()(int df, int dt) const {
    return coeffs_[static_cast<std::size_t>((df - geometry_.df_min) * geometry_.cols() + dt)];
  }
  /// Bounds-checked access; throws std::out_of_range.
  double at(int df, int dt) const;

 protected:
  double &mutable_at(int df, int dt) {
    return coeffs_[static_cast<std::size_t>((df - geometry_.df_min) * geometry_.cols() + dt)];
  }

  KernelGeometry geometry_;
  std::vector<double> coeffs_;
};

/// Psychoacoustic mask: negative masking taps around a centre of 1 + alpha_TI.
class MaskKernel : public KernelGrid {
 public:
  MaskKernel(KernelGeometry geometry, std::vector<double> coeffs,
             double center_ti, bool normalized)
      : KernelGrid(geometry, std::move(coeffs)),
        center_ti_(center_ti), normalized_(normalized) {}

  /// Centre 1, every other tap 0.
  static MaskKernel Identity(KernelGeometry geometry = {});

  double center_ti() const { return center_ti_; }
  bool normalized() const { return normalized_; }

  /// Copy with every tap divided by (1 + alpha_TI), so the centre becomes 1.
  MaskKernel Normalized() const;

 private:
  double center_ti_ = 0.0;
  bool normalized_ = false;
};

/// Otoacoustic-emission kernel: centre 1, off-centre taps mu * |alpha|.
class OaeKernel : public KernelGrid {
 public:
  OaeKernel(KernelGeometry geometry, std::vector<double> coeffs, double mu)
      : KernelGrid(geometry, std::move(coeffs)), mu_(mu) {}
  double mu() const { return mu_; }

 private:
  double mu_ = 0.0;
};

/// Temporal-integration boost: low band 4 (speech) / 3 (non-speech),
/// high band 3 / 2.
double TemporalIntegration(Band band, bool speech);

/// Raw published coefficient at (df, dt). The centre (0, 0) has no table
/// value and returns 0.
double TableCoefficient(Band band, int df, int dt);

MaskKernel PsychoKernel(Band band, bool speech, bool normalize);

/// Throws std::invalid_argument for mu < 0.
OaeKernel MakeOaeKernel(Band band, double mu);

/// Sum of |coefficients|.
double KernelL1Mass(const KernelGrid &kernel);

/// CSV with a header row of dt indices and a leading df column. Values use
/// fixed notation with `precision` decimals.
std::string KernelCsv(const KernelGrid &kernel, int precision);

}  // namespace psyfe

#endif  // PSYFE_KERNELS_HPP_
