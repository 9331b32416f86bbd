// include/psyfe/double_transform.hpp

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

#ifndef PSYFE_DOUBLE_TRANSFORM_HPP_
#define PSYFE_DOUBLE_TRANSFORM_HPP_

#include <string>

#include "psyfe/kernels.hpp"
#include "psyfe/matrix.hpp"

namespace psyfe {

/// Centred 2D spectrum of a time-frequency matrix. Rows follow the spectral
/// axis of the input (spatial frequency v), columns the temporal axis
/// (spatial frequency u). The zero-frequency cell sits at (v0, u0).
struct DtSpectrum {
  RealMatrix power;  // |X(v, u)|^2, linear
  RealMatrix db;     // 10 log10 power, floored at kDtFloorDb
  std::size_t v0 = 0;
  std::size_t u0 = 0;
};

inline constexpr double kDtFloorDb = -120.0;

struct DtOptions {
  bool log_magnitude = false;  // transform log(max(x, 1e-12)) instead of x
};

/// 2D DFT of a bins x frames real matrix, shifted so DC is central.
DtSpectrum DoubleTransform(const RealMatrix &tf, const DtOptions &options = {});

/// Kernel zero-embedded into a rows x cols grid (df along rows, dt along
/// columns, top-left aligned), then transformed. Throws std::invalid_argument
/// if the grid is smaller than the kernel.
DtSpectrum KernelResponse(const KernelGrid &kernel, std::size_t rows, std::size_t cols);

/// Fraction of linear power in the zero temporal-modulation column u = u0.
double CenterColumnConcentration(const DtSpectrum &dt);

/// dB grid as CSV, one row per spectral index.
std::string DtCsv(const DtSpectrum &dt);

/// Binary 8-bit PGM (P5) of the dB grid, min -> 0 and max -> 255. A flat
/// grid maps to all zeros. Highest spectral row is the top image row.
std::string DtPgm(const DtSpectrum &dt);

}  // namespace psyfe

#endif  // PSYFE_DOUBLE_TRANSFORM_HPP_
