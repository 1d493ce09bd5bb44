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


#ifndef STABGIBBS_DAVIES_HPP
#define STABGIBBS_DAVIES_HPP

#include <string>
#include <vector>

#include "stabgibbs/bohr.hpp"
#include "stabgibbs/gibbs.hpp"

namespace stabgibbs {

enum class Gauge { lindblad_heisenberg, lindblad_schrodinger, master_hamiltonian };

const char* gauge_name(Gauge g);

/// Linear map on d x d matrices, acting on column-major vec(X) (index i + d*j).
struct Superoperator {
  Index hilbert_dim = 0;
  SpMat matrix;
  Gauge gauge = Gauge::lindblad_heisenberg;
  BasisKind basis = BasisKind::computational;

  Index op_dim() const { return matrix.rows(); }
  DMat apply(const DMat& x) const;
};

DVec vectorize(const DMat& x);
DMat unvectorize(const DVec& v, Index d);

// Heisenberg-picture Davies generator in the model's working basis. Frame
// models use the direct label arithmetic; other models go through the
// generic Bohr decomposition.
Superoperator davies_lindbladian(const GibbsModel& model, const std::vector<PauliString>& couplings);

// Generator assembled from explicit Bohr components with Kronecker products.
Superoperator davies_from_components(const std::vector<std::vector<BohrComponent>>& components, double beta,
                                     Index hilbert_dim, BasisKind basis);

// Independent assembly: eigendecomposition of the computational-basis H,
// components moved into the working basis, Kronecker assembly. dim <= 256.
Superoperator davies_lindbladian_oracle(const GibbsModel& model, const std::vector<PauliString>& couplings);

// A -> O A O - A for a hermitian Pauli O commuting with H.
Superoperator dephasing_lindbladian(const GibbsModel& model, const PauliString& o);

Superoperator schrodinger_adjoint(const Superoperator& l);

// p L p^{-1} with p(X) = sigma^{1/4} X sigma^{1/4}; rejects generators whose
// transform is not hermitian to rel_tol.
Superoperator master_hamiltonian(const Superoperator& l, const GibbsModel& model, double rel_tol = 1e-10);

// |L^dag(sigma)|_F / |sigma|_F.
double stationarity_defect(const Superoperator& l, const GibbsModel& model);
// |L(I)|_F.
double unitality_defect(const Superoperator& l);
// max |M - M^dag| / max |M|.
double hermiticity_defect(const Superoperator& m);
// Unit vector vec(sqrt(sigma)) spanning the master Hamiltonian kernel.
DVec master_kernel_vector(const GibbsModel& model);

// Sum of superoperators with equal gauge and basis.
Superoperator sum(const std::vector<Superoperator>& parts);

}  // namespace stabgibbs

#endif  // STABGIBBS_DAVIES_HPP
