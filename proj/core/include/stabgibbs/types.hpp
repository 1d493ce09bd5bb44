// Copyright 2026 The stabgibbs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABGIBBS_TYPES_HPP
#define STABGIBBS_TYPES_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace stabgibbs {

using cplx = std::complex<double>;
using Index = Eigen::Index;

using SpMat = Eigen::SparseMatrix<cplx, Eigen::ColMajor, Index>;
using SpMatR = Eigen::SparseMatrix<double, Eigen::ColMajor, Index>;
using Triplet = Eigen::Triplet<cplx, Index>;
using TripletR = Eigen::Triplet<double, Index>;
using DMat = Eigen::MatrixXcd;
using DMatR = Eigen::MatrixXd;
using DVec = Eigen::VectorXcd;
using DVecR = Eigen::VectorXd;

// Raised on violated preconditions; message names the broken requirement.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a numerical contract (hermiticity, leakage, convergence) fails.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stabgibbs

#endif  // STABGIBBS_TYPES_HPP
