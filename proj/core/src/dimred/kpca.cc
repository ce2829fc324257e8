// core/src/dimred/kpca.cc

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

#include "neurovox/dimred/kpca.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "neurovox/common/rng.h"

namespace neurovox::dimred {
namespace {

using Emat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const Emat> as_eigen(const Matrix& m) {
  return {m.data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols())};
}

double resolve_gamma(const KpcaParams& p, std::size_t d) {
  return p.gamma < 0.0 ? 1.0 / static_cast<double>(d) : p.gamma;
}

Emat polynomial_kernel(const Emat& gram, double gamma, double coef0, int degree) {
  Emat k = (gamma * gram.array() + coef0).matrix();
  Emat out = Emat::Ones(k.rows(), k.cols());
  for (int i = 0; i < degree; ++i) out = out.cwiseProduct(k);
  return out;
}

}  // namespace

Matrix subsample_rows(const Matrix& x, std::size_t cap, std::uint64_t seed) {
  if (cap == 0) throw std::invalid_argument("subsample_rows: cap must be positive");
  if (x.rows() <= cap) return x;
  std::vector<std::size_t> idx(x.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  Rng rng(seed);
  rng.shuffle(idx);
  idx.resize(cap);
  std::sort(idx.begin(), idx.end());
  Matrix out(cap, x.cols());
  for (std::size_t r = 0; r < cap; ++r) {
    const auto src = x.row(idx[r]);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

KpcaModel kpca_fit(const Matrix& x, std::size_t k, const KpcaParams& params) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  if (n == 0 || d == 0) throw std::invalid_argument("kpca_fit: empty input");
  if (k < 1 || k > n) throw std::invalid_argument("kpca_fit: need 1 <= k <= n");
  if (!x.all_finite()) throw std::invalid_argument("kpca_fit: non-finite input");
  if (n > params.max_train_points) {
    throw std::invalid_argument(
        "kpca_fit: " + std::to_string(n) + " training rows exceed the cap of " +
        std::to_string(params.max_train_points) + "; subsample first (kernel PCA is O(n^2))");
  }
  if (params.degree < 1) throw std::invalid_argument("kpca_fit: degree must be >= 1");

  const double gamma = resolve_gamma(params, d);
  const auto xm = as_eigen(x);
  const Emat gram = xm * xm.transpose();
  const Emat kernel = polynomial_kernel(gram, gamma, params.coef0, params.degree);

  // Double centering in feature space: K~ = K - 1K - K1 + 1K1.
  const Eigen::VectorXd col_mean = kernel.colwise().mean();
  const double grand_mean = col_mean.mean();
  Emat centered = kernel;
  centered.array().rowwise() -= col_mean.transpose().array();
  centered.array().colwise() -= col_mean.array();  // K is symmetric
  centered.array() += grand_mean;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(centered);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("kpca_fit: eigendecomposition failed");
  }

  KpcaModel model;
  model.training_points = x;
  model.gamma = gamma;
  model.coef0 = params.coef0;
  model.degree = params.degree;
  model.input_dim = d;
  model.kernel_col_mean.assign(col_mean.data(), col_mean.data() + n);
  model.kernel_grand_mean = grand_mean;

  // Eigenvalues ascend in Eigen's solver; keep the top k above tolerance.
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < k; ++j) {
    const auto idx = static_cast<Eigen::Index>(n - 1 - j);
    if (solver.eigenvalues()(idx) > params.eigenvalue_tolerance) kept.push_back(n - 1 - j);
  }
  model.output_dim = kept.size();
  model.eigenvalues.resize(kept.size());
  model.alphas = Matrix(n, kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) {
    const auto idx = static_cast<Eigen::Index>(kept[j]);
    const double lambda = solver.eigenvalues()(idx);
    model.eigenvalues[j] = lambda;
    Eigen::VectorXd u = solver.eigenvectors().col(idx);
    // Sign canonicalization: largest-magnitude entry positive.
    Eigen::Index arg_max = 0;
    u.cwiseAbs().maxCoeff(&arg_max);
    if (u(arg_max) < 0.0) u = -u;
    u /= std::sqrt(lambda);
    for (std::size_t i = 0; i < n; ++i) model.alphas(i, j) = u(static_cast<Eigen::Index>(i));
  }

  // Training projections: K~ * alpha = lambda * u / sqrt(lambda).
  Eigen::Map<const Emat> alphas(model.alphas.data(), static_cast<Eigen::Index>(n),
                                static_cast<Eigen::Index>(model.output_dim));
  const Emat proj = centered * alphas;
  model.training_projections = Matrix(n, model.output_dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < model.output_dim; ++j) {
      model.training_projections(i, j) = proj(static_cast<Eigen::Index>(i),
                                              static_cast<Eigen::Index>(j));
    }
  }
  return model;
}

Matrix kpca_transform(const KpcaModel& model, const Matrix& y) {
  if (y.cols() != model.input_dim) {
    throw std::invalid_argument("kpca_transform: input width " + std::to_string(y.cols()) +
                                " != model input_dim " + std::to_string(model.input_dim));
  }
  if (!y.all_finite()) throw std::invalid_argument("kpca_transform: non-finite input");
  const std::size_t m = y.rows();
  const std::size_t n = model.training_points.rows();

  const auto ym = as_eigen(y);
  const auto xm = as_eigen(model.training_points);
  const Emat cross_gram = ym * xm.transpose();
  Emat kt = polynomial_kernel(cross_gram, model.gamma, model.coef0, model.degree);

  // Centered cross-kernel:
  // K~_t[r][i] = K_t[r][i] - rowmean(K_t)[r] - colmean(K)[i] + grandmean(K).
  const Eigen::VectorXd row_mean = kt.rowwise().mean();
  Eigen::Map<const Eigen::VectorXd> col_mean(model.kernel_col_mean.data(),
                                             static_cast<Eigen::Index>(n));
  kt.array().colwise() -= row_mean.array();
  kt.array().rowwise() -= col_mean.transpose().array();
  kt.array() += model.kernel_grand_mean;

  Eigen::Map<const Emat> alphas(model.alphas.data(), static_cast<Eigen::Index>(n),
                                static_cast<Eigen::Index>(model.output_dim));
  const Emat proj = kt * alphas;

  Matrix out(m, model.output_dim);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < model.output_dim; ++c) {
      out(r, c) = proj(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

}  // namespace neurovox::dimred
