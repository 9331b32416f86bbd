// src/fft.hpp

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

#ifndef PSYFE_SRC_FFT_HPP_
#define PSYFE_SRC_FFT_HPP_

#include <cstddef>

#include "psyfe/matrix.hpp"

// Thin RAII layer over FFTW. Plans use FFTW_ESTIMATE so the chosen algorithm,
// and therefore every output bit, does not depend on timing measurements.
namespace psyfe::internal {

/// Forward DFT of `count` contiguous real rows of length n. Writes n/2 + 1
/// bins per row to `out` (row-major, count rows).
void RealDftRows(const double *in, std::size_t count, std::size_t n,
                 Complex *out);

/// Forward 2D DFT of a row-major matrix, unnormalized.
ComplexMatrix ComplexDft2d(const ComplexMatrix &in);

}  // namespace psyfe::internal

#endif  // PSYFE_SRC_FFT_HPP_
