// Copyright 2026 The qpept Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qpept/bitvec.hpp"
#include "qpept/encoding.hpp"
#include "qpept/fermion.hpp"

namespace qpept {

enum class ExcitationKind : std::uint8_t { kSingle, kDouble, kPairedDouble };

/// One anti-Hermitian generator slot T - T^dag. Index meaning by kind:
///   kSingle       {from, to}       spin orbitals, from != to
///   kDouble       {i, j, a, b}     i<j occupied, a<b virtual (spin orbitals)
///   kPairedDouble {p, q}           spatial orbitals, p < q; expands to
///                                  (2p, 2p+1) -> (2q, 2q+1)
struct ExcitationGenerator {
    ExcitationKind kind;
    std::array<std::uint32_t, 4> idx{};
    std::uint32_t param_slot = 0;
};

enum class AnsatzKind : std::uint8_t { kUccsd, kKupccgsd };

/// Ordered generator list with dense parameter slots and the HF reference
/// occupation (lowest eta spin orbitals).
struct AnsatzSpec {
    AnsatzKind kind = AnsatzKind::kUccsd;
    std::size_t n_spin_orbitals = 0;
    std::size_t n_electrons = 0;
    std::size_t n_params = 0;
    std::size_t repetitions = 1;
    std::vector<ExcitationGenerator> generators;
    BitVec reference_occupation;

    std::string summary_json() const;
};

/// UCCSD over eta occupied and M - eta virtual spin orbitals. Doubles come
/// first, then singles, lexicographic within each class; parameter count is
/// eta(M-eta) + C(eta,2) C(M-eta,2).
AnsatzSpec build_uccsd(std::size_t M, std::size_t eta);

/// k repetitions of generalized spin-conserving singles plus paired
/// doubles. Independent real parameters live on unordered pairs; gate
/// accounting uses the ordered-pair term count (M/2)(M/2-1) for T2.
/// eta only fixes the reference occupation and may be deferred.
AnsatzSpec build_kupccgsd(std::size_t M, std::size_t k, std::size_t eta = 0);

/// Paper-convention ordered-pair count of paired-double terms, (M/2)(M/2-1).
std::size_t kupccgsd_paired_term_count(std::size_t M);

/// The bare excitation operator T for one generator (not anti-Hermitian
/// completed; the T - T^dag completion happens at compile time).
FermionOperator excitation_operator(const ExcitationGenerator& g);

/// One JW-mapped Pauli rotation: angle = coeff * params[slot].
struct PauliRotation {
    PauliString string;
    double coeff = 0.0;
    std::uint32_t slot = 0;
};

/// Ansatz lowered to an ordered Pauli-rotation program (what a single
/// first-order Trotter step executes).
struct CompiledAnsatz {
    std::size_t width = 0;
    std::size_t n_params = 0;
    std::vector<PauliRotation> rotations;
    BitVec reference;
};

CompiledAnsatz compile_ansatz(const AnsatzSpec& spec);

/// First-order Trotterization at fixed parameters: for each generator G
/// with parameter t, JW(G) = sum_s c_s P_s and the emitted angle per string
/// is 2 t Im(c_s), preserving generator order and a fixed within-generator
/// string order.
std::vector<std::pair<PauliTerm, double>> trotterize(const AnsatzSpec& spec,
                                                     const std::vector<double>& params);

}  // namespace qpept
