// core/include/neurovox/dimred/pca.h

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

#ifndef NEUROVOX_DIMRED_PCA_H_
#define NEUROVOX_DIMRED_PCA_H_

#include <vector>

#include "neurovox/common/matrix.h"

namespace neurovox::dimred {

// Cumulative explained-variance fractions of linear PCA on mean-centered X:
// non-decreasing, in [0, 1], last element 1. Used to pick the kernel-PCA
// target dimension. Throws for n < 2 or zero total variance.
std::vector<double> pca_explained_variance(const Matrix& x);

}  // namespace neurovox::dimred

#endif  // NEUROVOX_DIMRED_PCA_H_
