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

#include <cstdint>
#include <vector>

#include "qpept/ansatz.hpp"
#include "qpept/bitvec.hpp"
#include "qpept/encoding.hpp"

namespace qpept {

/// One Z2 symmetry of a qubit Hamiltonian: a coefficient-1 Pauli string
/// commuting with every Hamiltonian term, plus its sector eigenvalue.
struct SymmetryGenerator {
    PauliString pauli;
    int sector = +1;
};

/// Independent, mutually commuting generators of the Z2 symmetry group of
/// H, excluding the identity: GF(2) kernel of the symplectic form on H's
/// check matrix, reduced to a maximal isotropic set.
std::vector<SymmetryGenerator> find_z2_symmetries(const QubitOperator& h);

/// Clifford data shared by every tapering application for one Hamiltonian:
/// each generator is rotated onto a single-qubit Pauli at a dedicated pivot
/// qubit, which is then replaced by its sector eigenvalue.
class Taperer {
public:
    /// gens must commute with h and with each other; throws DomainError
    /// otherwise.
    Taperer(const QubitOperator& h, std::vector<SymmetryGenerator> gens);

    std::size_t n_generators() const { return gens_.size(); }
    std::size_t full_width() const { return width_; }
    std::size_t tapered_width() const { return width_ - gens_.size(); }
    const std::vector<SymmetryGenerator>& generators() const { return gens_; }
    const std::vector<std::uint32_t>& pivot_qubits() const { return pivots_; }

    /// Taper any operator whose terms all commute with every generator.
    QubitOperator apply(const QubitOperator& op, const std::vector<int>& sector) const;

    /// Occupation bits restricted to the retained qubits.
    BitVec map_occupation(const BitVec& occupation) const;

    /// Eigenvalues of the (Z-type) generators on a computational basis
    /// state; DomainError if a generator is not Z-type.
    std::vector<int> sector_of_occupation(const BitVec& occupation) const;

    /// Default sector selection: minimal tapered energy expectation on the
    /// tapered reference state, over all 2^g sectors.
    std::vector<int> choose_sector(const QubitOperator& h, const BitVec& reference) const;

    /// Taper a compiled ansatz: rotations that commute with every generator
    /// are mapped into the reduced register (their angle coefficients pick
    /// up the sector signs); generator slots with non-commuting strings are
    /// dropped and the parameter slots are re-packed densely.
    CompiledAnsatz apply(const CompiledAnsatz& ansatz, const std::vector<int>& sector) const;

private:
    std::size_t width_;
    std::vector<SymmetryGenerator> gens_;
    std::vector<std::uint32_t> pivots_;
    std::vector<PauliString> pivot_paulis_;      // single-qubit X or Z
    std::vector<PauliTerm> rotation_products_;   // -G_i A_i, phase included
    std::vector<bool> retained_;
    // working generator i equals work_phases_[i] times the product of the
    // original generators in work_masks_[i]
    std::vector<double> work_phases_;
    std::vector<std::uint64_t> work_masks_;

    PauliString drop_pivots(const PauliString& s) const;
};

/// Single-shot convenience wrapper over the class above.
QubitOperator taper(const QubitOperator& h, const std::vector<SymmetryGenerator>& gens,
                    const std::vector<int>& sector);

}  // namespace qpept
