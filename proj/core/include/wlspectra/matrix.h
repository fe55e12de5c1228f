// Copyright 2026 The wlspectra Authors
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
#ifndef WLSPECTRA_MATRIX_H_
#define WLSPECTRA_MATRIX_H_

#include <span>
#include <vector>

namespace wlspectra {

// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  static DenseMatrix Identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  std::span<const double> row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }
  std::span<const double> data() const { return data_; }

  DenseMatrix Transpose() const;
  // Largest absolute entrywise difference; shapes must match.
  double MaxAbsDiff(const DenseMatrix& other) const;
  double FrobeniusNorm() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column i pairs with values[i]
  int sweeps = 0;
};

inline constexpr double kJacobiOffDiagonalTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic Jacobi eigensolver for a dense symmetric matrix. Stops once the
// off-diagonal Frobenius norm drops below kJacobiOffDiagonalTolerance times
// max(1, ||A||_F). Throws NumericalError past kJacobiMaxSweeps sweeps and
// ValidationError on non-square or asymmetric input.
SymmetricEigen JacobiEigen(const DenseMatrix& a);

}  // namespace wlspectra

#endif  // WLSPECTRA_MATRIX_H_
