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

#ifndef PRIVNET_PROB_MATRIX_H_
#define PRIVNET_PROB_MATRIX_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace privnet {

// Dense row-major matrix of edge probabilities. Immutable once built.
class ProbMatrix {
 public:
  // Empty 0 x 0 matrix.
  ProbMatrix() = default;

  // Fails if any entry lies outside [0, 1], if the value count does not
  // match rows * cols, or if `symmetric` is set and the matrix is not.
  static absl::StatusOr<ProbMatrix> Create(int64_t rows, int64_t cols,
                                           std::vector<double> values,
                                           bool symmetric);
  static absl::StatusOr<ProbMatrix> Constant(int64_t rows, int64_t cols,
                                             double p, bool symmetric);

  int64_t rows() const { return rows_; }
  int64_t cols() const { return cols_; }
  bool symmetric() const { return symmetric_; }
  double operator()(int64_t i, int64_t j) const {
    return values_[i * cols_ + j];
  }
  std::span<const double> values() const { return values_; }

  // ||Theta||_inf in the entrywise sense.
  double MaxEntry() const;
  // Returns the common value if every entry is equal.
  bool IsConstant(double* value = nullptr) const;

 private:
  ProbMatrix(int64_t rows, int64_t cols, std::vector<double> values,
             bool symmetric)
      : rows_(rows), cols_(cols), symmetric_(symmetric),
        values_(std::move(values)) {}

  int64_t rows_ = 0;
  int64_t cols_ = 0;
  bool symmetric_ = false;
  std::vector<double> values_;
};

double FrobeniusDistance(const ProbMatrix& a, const ProbMatrix& b);

}  // namespace privnet

#endif  // PRIVNET_PROB_MATRIX_H_
