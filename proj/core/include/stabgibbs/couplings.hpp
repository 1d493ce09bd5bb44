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


#ifndef STABGIBBS_COUPLINGS_HPP
#define STABGIBBS_COUPLINGS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "stabgibbs/frame.hpp"

namespace stabgibbs {

// local_full   every single-site Pauli
// local_only   same jump list as local_full (the local-jump sampler without globals)
// with_global  local_full plus the global logical jumps
// gapped       local_subset plus the global logical jumps
// local_subset snake sigma^x and comb sigma^z (ring: sigma^x_j, j >= 1)
enum class CouplingSet { local_full, local_only, with_global, gapped, local_subset };

CouplingSet parse_coupling_set(std::string_view name);
const char* coupling_set_name(CouplingSet set);

std::vector<PauliString> single_site_paulis(std::size_t n_qubits);
std::vector<PauliString> local_subset(const StabilizerModel& model);
// Torus: Xbar1, Zbar1, Xbar2, Zbar2. Ring: Xbar, plus Zbar when with_zbar.
std::vector<PauliString> global_jumps(const StabilizerModel& model, bool with_zbar);

std::vector<PauliString> coupling_operators(const StabilizerModel& model, CouplingSet set);

}  // namespace stabgibbs

#endif  // STABGIBBS_COUPLINGS_HPP
