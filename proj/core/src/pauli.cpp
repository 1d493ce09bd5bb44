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

#include "stabgibbs/pauli.hpp"

#include <bit>

namespace stabgibbs {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

int mod4(int k) { return ((k % 4) + 4) % 4; }

}  // namespace

cplx ipow(int k) {
  switch (mod4(k)) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString::PauliString(std::size_t n_qubits)
    : n_(n_qubits), xs_(words_for(n_qubits), 0), zs_(words_for(n_qubits), 0) {}

PauliString PauliString::single(std::size_t n_qubits, std::size_t q, char letter) {
  return on(n_qubits, {q}, letter);
}

PauliString PauliString::on(std::size_t n_qubits, const std::vector<std::size_t>& qubits,
                            char letter) {
  PauliString p(n_qubits);
  for (std::size_t q : qubits) {
    if (q >= n_qubits) throw InvalidArgument("PauliString: qubit index out of range");
    PauliString s(n_qubits);
    switch (letter) {
      case 'X': s.set_x(q, true); break;
      case 'Z': s.set_z(q, true); break;
      case 'Y': s.set_x(q, true); s.set_z(q, true); break;
      case 'I': break;
      default: throw InvalidArgument("PauliString: letter must be one of IXYZ");
    }
    p *= s;
  }
  return p;
}

PauliString PauliString::parse(std::string_view text) {
  int k = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') k += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    k += 1;
    ++pos;
  }
  PauliString p(text.size() - pos);
  for (std::size_t q = 0; pos + q < text.size(); ++q) {
    switch (text[pos + q]) {
      case 'I': case '_': break;
      case 'X': p.set_x(q, true); break;
      case 'Z': p.set_z(q, true); break;
      case 'Y': p.set_x(q, true); p.set_z(q, true); break;
      default: throw InvalidArgument("PauliString::parse: bad character");
    }
  }
  p.mul_phase(k);
  return p;
}

void PauliString::set_x(std::size_t q, bool v) {
  const int keep = phase();
  const std::uint64_t bit = std::uint64_t{1} << (q & 63);
  if (v) xs_[q >> 6] |= bit; else xs_[q >> 6] &= ~bit;
  xz_phase_ = mod4(xz_phase_ + keep - phase());
}

void PauliString::set_z(std::size_t q, bool v) {
  const int keep = phase();
  const std::uint64_t bit = std::uint64_t{1} << (q & 63);
  if (v) zs_[q >> 6] |= bit; else zs_[q >> 6] &= ~bit;
  xz_phase_ = mod4(xz_phase_ + keep - phase());
}

char PauliString::letter(std::size_t q) const {
  static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  return kLetters[(x(q) ? 1 : 0) | (z(q) ? 2 : 0)];
}

int PauliString::phase() const {
  int ys = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) ys += std::popcount(xs_[w] & zs_[w]);
  // X Z = -i Y, so i^k X^x Z^z = i^(k - #Y) (letters).
  return mod4(xz_phase_ - ys);
}

PauliString& PauliString::mul_phase(int k) {
  xz_phase_ = mod4(xz_phase_ + k);
  return *this;
}

bool PauliString::commutes(const PauliString& other) const {
  check_same_size(other);
  int parity = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    parity ^= std::popcount((xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w])) & 1;
  }
  return parity == 0;
}

bool PauliString::is_identity() const {
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    if (xs_[w] | zs_[w]) return false;
  }
  return true;
}

std::size_t PauliString::weight() const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) c += std::popcount(xs_[w] | zs_[w]);
  return c;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n_; ++q) {
    if (x(q) || z(q)) out.push_back(q);
  }
  return out;
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  PauliString out = *this;
  out *= rhs;
  return out;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  check_same_size(rhs);
  // (X^a Z^b)(X^c Z^d) = (-1)^{b.c} X^{a+c} Z^{b+d}
  int sign = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    sign += std::popcount(zs_[w] & rhs.xs_[w]);
    xs_[w] ^= rhs.xs_[w];
    zs_[w] ^= rhs.zs_[w];
  }
  xz_phase_ = mod4(xz_phase_ + rhs.xz_phase_ + 2 * (sign & 1));
  return *this;
}

bool PauliString::operator==(const PauliString& rhs) const {
  return n_ == rhs.n_ && xz_phase_ == rhs.xz_phase_ && xs_ == rhs.xs_ && zs_ == rhs.zs_;
}

std::uint64_t PauliString::x_mask() const {
  if (n_ > 64) throw InvalidArgument("PauliString::x_mask: more than 64 qubits");
  return xs_.empty() ? 0 : xs_[0];
}

std::uint64_t PauliString::z_mask() const {
  if (n_ > 64) throw InvalidArgument("PauliString::z_mask: more than 64 qubits");
  return zs_.empty() ? 0 : zs_[0];
}

cplx PauliString::coeff(std::uint64_t basis_index) const {
  const int sign = std::popcount(z_mask() & basis_index) & 1;
  return ipow(xz_phase_ + 2 * sign);
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase()];
  for (std::size_t q = 0; q < n_; ++q) s.push_back(letter(q));
  return s;
}

DMat PauliString::to_dense() const {
  if (n_ > 14) throw InvalidArgument("PauliString::to_dense: too many qubits");
  const Index dim = Index{1} << n_;
  DMat m = DMat::Zero(dim, dim);
  const std::uint64_t xm = x_mask();
  for (Index b = 0; b < dim; ++b) {
    m(static_cast<Index>(static_cast<std::uint64_t>(b) ^ xm), b) = coeff(static_cast<std::uint64_t>(b));
  }
  return m;
}

SpMat PauliString::to_sparse() const {
  if (n_ > 26) throw InvalidArgument("PauliString::to_sparse: too many qubits");
  const Index dim = Index{1} << n_;
  SpMat m(dim, dim);
  m.reserve(Eigen::VectorX<Index>::Constant(dim, 1));
  const std::uint64_t xm = x_mask();
  for (Index b = 0; b < dim; ++b) {
    m.insert(static_cast<Index>(static_cast<std::uint64_t>(b) ^ xm), b) =
        coeff(static_cast<std::uint64_t>(b));
  }
  m.makeCompressed();
  return m;
}

void PauliString::check_same_size(const PauliString& rhs) const {
  if (n_ != rhs.n_) throw InvalidArgument("PauliString: qubit counts differ");
}

}  // namespace stabgibbs
