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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "random_graphs.h"
#include "wlspectra/errors.h"
#include "wlspectra/spectral.h"

namespace wlspectra {
namespace {

DenseMatrix RandomSymmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) a(i, j) = a(j, i) = normal(rng);
  }
  return a;
}

Eigen::MatrixXd ToEigen(const DenseMatrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  return m;
}

DenseMatrix Reconstruct(const SymmetricEigen& e) {
  const int n = static_cast<int>(e.values.size());
  DenseMatrix scaled = e.vectors;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) scaled(i, j) *= e.values[j];
  }
  return scaled * e.vectors.Transpose();
}

TEST(DenseMatrixTest, Basics) {
  DenseMatrix a(2, 3);
  a(0, 1) = 2.0;
  a(1, 2) = -1.0;
  EXPECT_EQ(a.Transpose()(1, 0), 2.0);
  const DenseMatrix p = a * a.Transpose();
  EXPECT_EQ(p(0, 0), 4.0);
  EXPECT_EQ(p(1, 1), 1.0);
  EXPECT_EQ(p(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(a.FrobeniusNorm(), std::sqrt(5.0));
  EXPECT_EQ(DenseMatrix::Identity(3).MaxAbsDiff(DenseMatrix(3, 3)), 1.0);
  EXPECT_THROW(a * a, ValidationError);
  EXPECT_THROW(a.MaxAbsDiff(p), ValidationError);
}

TEST(JacobiTest, AgreesWithEigenOnRandomSymmetric) {
  std::mt19937_64 rng(61);
  for (int n : {1, 2, 3, 5, 8, 13, 20}) {
    const DenseMatrix a = RandomSymmetric(n, rng);
    const SymmetricEigen mine = JacobiEigen(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oracle(ToEigen(a));
    for (int i = 0; i < n; ++i) EXPECT_NEAR(mine.values[i], oracle.eigenvalues()(i), 1e-10);
    EXPECT_LT(Reconstruct(mine).MaxAbsDiff(a), 1e-10);
    EXPECT_LT((mine.vectors.Transpose() * mine.vectors).MaxAbsDiff(DenseMatrix::Identity(n)),
              1e-12);
  }
}

TEST(JacobiTest, AgreesWithEigenOnLaplacians) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::RandomGraph(1, 16, rng);
    const DenseMatrix l = LaplacianMatrix(g).matrix();
    const SymmetricEigen mine = JacobiEigen(l);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oracle(ToEigen(l));
    for (int i = 0; i < g.num_vertices(); ++i) {
      EXPECT_NEAR(mine.values[i], oracle.eigenvalues()(i), 1e-10);
    }
    EXPECT_LT(Reconstruct(mine).MaxAbsDiff(l), 1e-10);
  }
}

TEST(JacobiTest, ValuesAscendAndDiagonalNeedsNoSweeps) {
  DenseMatrix d(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  d(2, 2) = 2.0;
  const SymmetricEigen e = JacobiEigen(d);
  EXPECT_EQ(e.values, (std::vector<double>{-1.0, 2.0, 3.0}));
  EXPECT_EQ(e.sweeps, 0);
}

TEST(JacobiTest, IsDeterministic) {
  std::mt19937_64 rng(63);
  const DenseMatrix a = RandomSymmetric(9, rng);
  const SymmetricEigen x = JacobiEigen(a), y = JacobiEigen(a);
  EXPECT_EQ(x.values, y.values);
  EXPECT_EQ(x.vectors.MaxAbsDiff(y.vectors), 0.0);
}

TEST(JacobiTest, RejectsBadInput) {
  DenseMatrix asym(2, 2);
  asym(0, 1) = 1.0;
  EXPECT_THROW(JacobiEigen(asym), ValidationError);
  EXPECT_THROW(JacobiEigen(DenseMatrix(2, 3)), ValidationError);
  EXPECT_TRUE(JacobiEigen(DenseMatrix(0, 0)).values.empty());
}

}  // namespace
}  // namespace wlspectra
