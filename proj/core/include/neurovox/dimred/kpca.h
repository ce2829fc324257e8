// core/include/neurovox/dimred/kpca.h

// Copyright 2026  NeuroVox Authors

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

#ifndef NEUROVOX_DIMRED_KPCA_H_
#define NEUROVOX_DIMRED_KPCA_H_

#include <cstdint>
#include <vector>

#include "neurovox/common/matrix.h"

namespace neurovox::dimred {

// Polynomial-kernel parameters: k(x, y) = (gamma * <x, y> + coef0)^degree.
// gamma < 0 means "use 1/input_dim". degree 1 exists for the linear-PCA
// equivalence mode used in tests.
struct KpcaParams {
  double gamma = -1.0;
  double coef0 = 1.0;
  int degree = 3;
  // Exact KPCA is O(n^2) memory and O(n^3) time in the number of training
  // rows; fits beyond this cap are refused so the cost stays explicit.
  std::size_t max_train_points = 20000;
  double eigenvalue_tolerance = 1e-10;
};

// Fitted model. Training points are retained for out-of-sample projection.
// alphas are centered-kernel eigenvectors scaled by 1/sqrt(eigenvalue), sign
// canonicalized so each eigenvector's largest-magnitude entry is positive.
struct KpcaModel {
  Matrix training_points;           // n x d
  Matrix alphas;                    // n x k
  std::vector<double> eigenvalues;  // k, non-increasing, all > tolerance
  std::vector<double> kernel_col_mean;  // n, column means of the uncentered K
  double kernel_grand_mean = 0.0;
  double gamma = 0.0;
  double coef0 = 1.0;
  int degree = 3;
  std::size_t input_dim = 0;
  std::size_t output_dim = 0;
  // Fit-time projections of the training rows (n x k); kpca_transform on the
  // training matrix reproduces these.
  Matrix training_projections;
};

// Fits on X (n x d) keeping at most `k` components; components whose
// eigenvalue falls below the tolerance are dropped and output_dim records
// the kept count. Throws for k > n, non-finite input, or n over the cap.
KpcaModel kpca_fit(const Matrix& x, std::size_t k, const KpcaParams& params = {});

// Out-of-sample projection through the centered cross-kernel. Y is m x d.
Matrix kpca_transform(const KpcaModel& model, const Matrix& y);

// Seeded uniform subsample of rows (without replacement, original order
// preserved); returns X itself when it already fits the cap.
Matrix subsample_rows(const Matrix& x, std::size_t cap, std::uint64_t seed);

}  // namespace neurovox::dimred

#endif  // NEUROVOX_DIMRED_KPCA_H_
