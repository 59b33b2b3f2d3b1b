// Copyright 2026 The privnet-cpd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privnet/prob_matrix.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace privnet {

absl::StatusOr<ProbMatrix> ProbMatrix::Create(int64_t rows, int64_t cols,
                                              std::vector<double> values,
                                              bool symmetric) {
  if (rows <= 0 || cols <= 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("matrix shape %dx%d must be positive", rows, cols));
  }
  if (static_cast<int64_t>(values.size()) != rows * cols) {
    return absl::InvalidArgumentError(
        absl::StrFormat("expected %d values for a %dx%d matrix, got %d",
                        rows * cols, rows, cols, values.size()));
  }
  for (int64_t k = 0; k < rows * cols; ++k) {
    const double p = values[k];
    if (!(p >= 0.0 && p <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("entry (%d,%d) = %g is outside [0,1]", k / cols,
                          k % cols, p));
    }
  }
  if (symmetric) {
    if (rows != cols) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "symmetric matrix must be square, got %dx%d", rows, cols));
    }
    for (int64_t i = 0; i < rows; ++i) {
      for (int64_t j = i + 1; j < cols; ++j) {
        if (values[i * cols + j] != values[j * cols + i]) {
          return absl::InvalidArgumentError(
              absl::StrFormat("matrix is not symmetric at (%d,%d)", i, j));
        }
      }
    }
  }
  return ProbMatrix(rows, cols, std::move(values), symmetric);
}

absl::StatusOr<ProbMatrix> ProbMatrix::Constant(int64_t rows, int64_t cols,
                                                double p, bool symmetric) {
  if (rows <= 0 || cols <= 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("matrix shape %dx%d must be positive", rows, cols));
  }
  return Create(rows, cols, std::vector<double>(rows * cols, p), symmetric);
}

double ProbMatrix::MaxEntry() const {
  return *std::max_element(values_.begin(), values_.end());
}

bool ProbMatrix::IsConstant(double* value) const {
  const double first = values_.front();
  for (double v : values_) {
    if (v != first) return false;
  }
  if (value != nullptr) *value = first;
  return true;
}

double FrobeniusDistance(const ProbMatrix& a, const ProbMatrix& b) {
  double sum = 0.0;
  const auto av = a.values();
  const auto bv = b.values();
  for (size_t k = 0; k < av.size(); ++k) {
    const double diff = av[k] - bv[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace privnet
