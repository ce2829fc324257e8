// core/src/dimred/pca.cc

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

#include "neurovox/dimred/pca.h"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Dense>

namespace neurovox::dimred {

std::vector<double> pca_explained_variance(const Matrix& x) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  if (n < 2) throw std::invalid_argument("pca_explained_variance: need at least 2 rows");
  if (!x.all_finite()) {
    throw std::invalid_argument("pca_explained_variance: non-finite input");
  }

  using Emat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const Emat> xm(x.data(), static_cast<Eigen::Index>(n),
                            static_cast<Eigen::Index>(d));
  const Eigen::RowVectorXd mean = xm.colwise().mean();
  const Emat centered = xm.rowwise() - mean;
  const Eigen::MatrixXd cov =
      (centered.transpose() * centered) / static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("pca_explained_variance: eigendecomposition failed");
  }

  // Ascending from Eigen; flip and clamp the tiny negatives that centering
  // noise produces.
  std::vector<double> eigs(d);
  for (std::size_t i = 0; i < d; ++i) {
    eigs[i] = std::max(0.0, solver.eigenvalues()(static_cast<Eigen::Index>(d - 1 - i)));
  }
  double total = 0.0;
  for (double e : eigs) total += e;

  const double scale = xm.squaredNorm() / static_cast<double>(n * d);
  if (total <= 1e-15 * (scale + 1e-300) || total == 0.0) {
    throw std::invalid_argument("pca_explained_variance: zero total variance (degenerate data)");
  }

  std::vector<double> curve(d);
  double acc = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    acc += eigs[i];
    curve[i] = std::min(1.0, acc / total);
  }
  curve.back() = 1.0;
  return curve;
}

}  // namespace neurovox::dimred
