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


#include "stabgibbs/couplings.hpp"

#include "stabgibbs/ground_states.hpp"

namespace stabgibbs {

CouplingSet parse_coupling_set(std::string_view name) {
  if (name == "local_full") return CouplingSet::local_full;
  if (name == "local_only") return CouplingSet::local_only;
  if (name == "with_global") return CouplingSet::with_global;
  if (name == "gapped") return CouplingSet::gapped;
  if (name == "local_subset") return CouplingSet::local_subset;
  throw InvalidArgument("unknown coupling set: " + std::string(name));
}

const char* coupling_set_name(CouplingSet set) {
  switch (set) {
    case CouplingSet::local_full: return "local_full";
    case CouplingSet::local_only: return "local_only";
    case CouplingSet::with_global: return "with_global";
    case CouplingSet::gapped: return "gapped";
    default: return "local_subset";
  }
}

std::vector<PauliString> single_site_paulis(std::size_t n_qubits) {
  std::vector<PauliString> out;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    for (char c : {'X', 'Y', 'Z'}) out.push_back(PauliString::single(n_qubits, q, c));
  }
  return out;
}

std::vector<PauliString> local_subset(const StabilizerModel& model) {
  const std::size_t n = model.num_qubits();
  std::vector<PauliString> out;
  if (model.kind == StabilizerModel::Kind::ising) {
    for (std::size_t j = 1; j < n; ++j) out.push_back(PauliString::single(n, j, 'X'));
    return out;
  }
  for (std::size_t e : model.torus->snake_spins()) out.push_back(PauliString::single(n, e, 'X'));
  for (std::size_t e : model.torus->comb_spins()) out.push_back(PauliString::single(n, e, 'Z'));
  return out;
}

std::vector<PauliString> global_jumps(const StabilizerModel& model, bool with_zbar) {
  const std::size_t n = model.num_qubits();
  if (model.kind == StabilizerModel::Kind::ising) {
    std::vector<PauliString> out{ising_xbar(n)};
    if (with_zbar) out.push_back(ising_zbar(n));
    return out;
  }
  const LogicalOperators l = logical_operators(*model.torus);
  return {l.xbar1, l.zbar1, l.xbar2, l.zbar2};
}

std::vector<PauliString> coupling_operators(const StabilizerModel& model, CouplingSet set) {
  std::vector<PauliString> out;
  switch (set) {
    case CouplingSet::local_full:
    case CouplingSet::local_only:
      return single_site_paulis(model.num_qubits());
    case CouplingSet::local_subset:
      return local_subset(model);
    case CouplingSet::with_global:
      out = single_site_paulis(model.num_qubits());
      for (auto& g : global_jumps(model, false)) out.push_back(std::move(g));
      return out;
    case CouplingSet::gapped:
      out = local_subset(model);
      for (auto& g : global_jumps(model, true)) out.push_back(std::move(g));
      return out;
  }
  return out;
}

}  // namespace stabgibbs
