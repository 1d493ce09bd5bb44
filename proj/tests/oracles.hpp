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


#ifndef STABGIBBS_TESTS_ORACLES_HPP
#define STABGIBBS_TESTS_ORACLES_HPP

// Brute-force references built from explicit matrices only; nothing here
// calls into the library's assembly code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli_2x2(char c) {
  Mat m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

// letters[q] acts on qubit q, the least significant bit of the basis index.
inline Mat pauli(const std::string& letters) {
  Mat m = Mat::Identity(1, 1);
  for (char c : letters) m = kron(pauli_2x2(c), m);
  return m;
}

inline std::string single(std::size_t n, std::size_t q, char c) {
  std::string s(n, 'I');
  s[q] = c;
  return s;
}

// -J sum_j Z_j Z_{j+1} on a ring, summed term by term.
inline Mat ising_ring(std::size_t n, double j = 1.0) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Mat h = Mat::Zero(d, d);
  for (std::size_t b = 0; b < n; ++b) {
    std::string s(n, 'I');
    s[b] = 'Z';
    s[(b + 1) % n] = 'Z';
    h -= j * pauli(s);
  }
  return h;
}

inline double glauber(double omega, double beta) { return 2.0 / (std::exp(beta * omega) + 1.0); }

inline Eigen::VectorXd gibbs_weights(const Eigen::VectorXd& energies, double beta) {
  Eigen::VectorXd w = (-beta * energies.array()).exp();
  return w / w.sum();
}

// Heisenberg Davies generator on vec(X) (column-major) from eigenprojections.
inline Mat davies(const Mat& h, const std::vector<Mat>& couplings, double beta) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXd e = es.eigenvalues();
  const Mat u = es.eigenvectors();
  const Eigen::Index d = h.rows();
  const Mat id = Mat::Identity(d, d);
  Mat l = Mat::Zero(d * d, d * d);
  for (const Mat& s : couplings) {
    const Mat se = u.adjoint() * s * u;
    std::map<long long, Mat> parts;
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) {
        if (std::abs(se(b, a)) == 0.0) continue;
        const long long key = std::llround((e[b] - e[a]) * 1e8);
        auto it = parts.find(key);
        if (it == parts.end()) it = parts.emplace(key, Mat::Zero(d, d)).first;
        it->second(b, a) += se(b, a);
      }
    }
    for (const auto& [key, comp] : parts) {
      const Mat j = u * comp * u.adjoint();
      const Mat jd = j.adjoint();
      const Mat jj = jd * j;
      const double g = glauber(static_cast<double>(key) * 1e-8, beta);
      l += g * (kron(j.transpose(), jd) - 0.5 * kron(id, jj) - 0.5 * kron(jj.transpose(), id));
    }
  }
  return l;
}

inline Mat unvec(const Vec& v, Eigen::Index d) { return Eigen::Map<const Mat>(v.data(), d, d); }
inline Vec vec(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

inline Eigen::VectorXd sorted_real_eigenvalues(const Mat& hermitian) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (hermitian + hermitian.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

inline int popcount(unsigned long long x) { return __builtin_popcountll(x); }

}  // namespace oracle

#endif  // STABGIBBS_TESTS_ORACLES_HPP
