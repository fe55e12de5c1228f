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
#include "wlspectra/matrix.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wlspectra/errors.h"

namespace wlspectra {

DenseMatrix DenseMatrix::Identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::Transpose() const {
  DenseMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double DenseMatrix::MaxAbsDiff(const DenseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ValidationError("matrix shapes differ");
  }
  double worst = 0.0;
  for (size_t i = 0; i < data_.size(); ++i)
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

double DenseMatrix::FrobeniusNorm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix product shape mismatch");
  DenseMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

namespace {

double OffDiagonalNorm(const DenseMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

SymmetricEigen JacobiEigen(const DenseMatrix& input) {
  const int n = input.rows();
  if (input.cols() != n) throw ValidationError("eigensolver needs a square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(input(i, j) - input(j, i)) > 1e-12 * (1.0 + std::abs(input(i, j)))) {
        throw ValidationError("eigensolver needs a symmetric matrix");
      }

  DenseMatrix a = input;
  DenseMatrix v = DenseMatrix::Identity(n);
  const double threshold = kJacobiOffDiagonalTolerance * std::max(1.0, input.FrobeniusNorm());
  int sweeps = 0;
  while (OffDiagonalNorm(a) >= threshold) {
    if (sweeps == kJacobiMaxSweeps) {
      throw NumericalError("Jacobi eigensolver did not converge in " +
                           std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    ++sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation J with J_pp = J_qq = c, J_pq = s, J_qp = -s zeroes a_pq
        // in J^T A J.
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
  SymmetricEigen out;
  out.sweeps = sweeps;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (int col = 0; col < n; ++col) {
    out.values[col] = a(order[col], order[col]);
    for (int r = 0; r < n; ++r) out.vectors(r, col) = v(r, order[col]);
  }
  return out;
}

}  // namespace wlspectra
