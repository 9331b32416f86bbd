// src/double_transform.cpp

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

#include "psyfe/double_transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "fft.hpp"

namespace psyfe {

namespace {

DtSpectrum FromComplex(const ComplexMatrix &x) {
  const std::size_t rows = x.rows(), cols = x.cols();
  DtSpectrum dt;
  dt.v0 = rows / 2;
  dt.u0 = cols / 2;
  dt.power = RealMatrix(rows, cols);
  dt.db = RealMatrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t rr = (r + dt.v0) % rows, cc = (c + dt.u0) % cols;
      const double p = std::norm(x(r, c));
      dt.power(rr, cc) = p;
      dt.db(rr, cc) = p > 0.0 ? std::max(10.0 * std::log10(p), kDtFloorDb) : kDtFloorDb;
    }
  return dt;
}

}  // namespace

DtSpectrum DoubleTransform(const RealMatrix &tf, const DtOptions &options) {
  if (tf.rows() == 0 || tf.cols() == 0)
    throw std::invalid_argument("double transform needs a non-empty matrix");
  ComplexMatrix in(tf.rows(), tf.cols());
  for (std::size_t i = 0; i < tf.size(); ++i) {
    double v = tf.values()[i];
    if (!std::isfinite(v)) throw std::invalid_argument("double transform input must be finite");
    if (options.log_magnitude) v = std::log(std::max(v, 1e-12));
    in.values()[i] = Complex(v, 0.0);
  }
  return FromComplex(internal::ComplexDft2d(in));
}

DtSpectrum KernelResponse(const KernelGrid &kernel, std::size_t rows, std::size_t cols) {
  const KernelGeometry &g = kernel.geometry();
  if (rows < static_cast<std::size_t>(g.rows()) || cols < static_cast<std::size_t>(g.cols()))
    throw std::invalid_argument("response grid " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " is smaller than the kernel " +
                                std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
  ComplexMatrix in(rows, cols);
  for (int df = g.df_min; df <= g.df_max; ++df)
    for (int dt = 0; dt <= g.dt_max; ++dt)
      in(static_cast<std::size_t>(df - g.df_min), static_cast<std::size_t>(dt)) =
          Complex(kernel(df, dt), 0.0);
  return FromComplex(internal::ComplexDft2d(in));
}

double CenterColumnConcentration(const DtSpectrum &dt) {
  double column = 0.0, total = 0.0;
  for (std::size_t r = 0; r < dt.power.rows(); ++r)
    for (std::size_t c = 0; c < dt.power.cols(); ++c) {
      const double p = dt.power(r, c);
      total += p;
      if (c == dt.u0) column += p;
    }
  if (!(total > 0.0)) return 0.0;
  return column / total;
}

std::string DtCsv(const DtSpectrum &dt) {
  std::ostringstream os;
  char buf[32];
  for (std::size_t r = 0; r < dt.db.rows(); ++r) {
    for (std::size_t c = 0; c < dt.db.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.6f", dt.db(r, c));
      if (c) os << ',';
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

std::string DtPgm(const DtSpectrum &dt) {
  const std::size_t rows = dt.db.rows(), cols = dt.db.cols();
  std::string out = "P5\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n255\n";
  if (rows == 0 || cols == 0) return out;
  const auto [lo_it, hi_it] = std::minmax_element(dt.db.values().begin(), dt.db.values().end());
  const double lo = *lo_it, span = *hi_it - *lo_it;
  for (std::size_t r = rows; r-- > 0;)
    for (std::size_t c = 0; c < cols; ++c) {
      // Sub-micro-dB spread is FFT round-off; such a map is drawn flat.
      const double level = span > 1e-6 ? (dt.db(r, c) - lo) / span * 255.0 : 0.0;
      out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(level))));
    }
  return out;
}

}  // namespace psyfe
