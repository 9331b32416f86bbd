// src/fft.cpp

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

#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace psyfe::internal {

namespace {

// Planner calls are not thread-safe in FFTW; execution is.
std::mutex &PlannerMutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void *p) const { fftw_free(p); }
};

template <typename T>
std::unique_ptr<T[], FftwFree> Alloc(std::size_t n) {
  auto *p = static_cast<T *>(fftw_malloc(sizeof(T) * std::max<std::size_t>(n, 1)));
  if (p == nullptr) throw std::bad_alloc();
  return std::unique_ptr<T[], FftwFree>(p);
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {
    if (plan_ == nullptr) throw std::runtime_error("fftw planning failed");
  }
  ~Plan() {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan &) = delete;
  Plan &operator=(const Plan &) = delete;
  void Execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

}  // namespace

void RealDftRows(const double *in, std::size_t count, std::size_t n,
                 Complex *out) {
  if (count == 0 || n == 0) return;
  const std::size_t bins = n / 2 + 1;
  auto buf_in = Alloc<double>(count * n);
  auto buf_out = Alloc<fftw_complex>(count * bins);
  std::unique_ptr<Plan> plan;
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    int len = static_cast<int>(n);
    plan = std::make_unique<Plan>(fftw_plan_many_dft_r2c(
        1, &len, static_cast<int>(count), buf_in.get(), nullptr, 1,
        static_cast<int>(n), buf_out.get(), nullptr, 1,
        static_cast<int>(bins), FFTW_ESTIMATE));
  }
  std::copy(in, in + count * n, buf_in.get());
  plan->Execute();
  for (std::size_t i = 0; i < count * bins; ++i)
    out[i] = Complex(buf_out[i][0], buf_out[i][1]);
}

ComplexMatrix ComplexDft2d(const ComplexMatrix &in) {
  const std::size_t rows = in.rows(), cols = in.cols();
  ComplexMatrix out(rows, cols);
  if (in.empty()) return out;
  auto buf = Alloc<fftw_complex>(rows * cols);
  std::unique_ptr<Plan> plan;
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    plan = std::make_unique<Plan>(fftw_plan_dft_2d(
        static_cast<int>(rows), static_cast<int>(cols), buf.get(), buf.get(),
        FFTW_FORWARD, FFTW_ESTIMATE));
  }
  const Complex *src = in.data();
  for (std::size_t i = 0; i < rows * cols; ++i) {
    buf[i][0] = src[i].real();
    buf[i][1] = src[i].imag();
  }
  plan->Execute();
  Complex *dst = out.data();
  for (std::size_t i = 0; i < rows * cols; ++i)
    dst[i] = Complex(buf[i][0], buf[i][1]);
  return out;
}

}  // namespace psyfe::internal
