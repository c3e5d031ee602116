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
#include <complex>
#include <vector>

#include "qpept/bitvec.hpp"
#include "qpept/encoding.hpp"
#include "qpept/synth.hpp"

namespace qpept {

/// Dense 2^n statevector; qubit q is bit q of the amplitude index.
class StateVector {
public:
    explicit StateVector(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_; }
    std::vector<cplx>& amplitudes() { return amp_; }
    const std::vector<cplx>& amplitudes() const { return amp_; }
    cplx amplitude(std::size_t basis_index) const { return amp_[basis_index]; }

    double norm() const;

    /// Width cap (default 24 qubits, overridable via QPEPT_MAX_QUBITS).
    static std::size_t width_cap();

private:
    std::size_t n_;
    std::vector<cplx> amp_;
};

/// Computational basis state with 1s at the occupied positions.
StateVector prepare_reference(const BitVec& occupation);

void apply_gate(StateVector& state, const Gate& g);
void apply_circuit(StateVector& state, const Circuit& c);

/// Exact term-wise expectation sum_i c_i <psi|P_i|psi>; requires a
/// Hermitian operator and asserts the imaginary residue is negligible.
double expectation(const StateVector& state, const QubitOperator& op);

/// <psi|P|psi> for a single string (complex, no hermiticity assumption).
cplx pauli_expectation(const StateVector& state, const PauliString& p);

/// Row-major 2x2 matrix {u00, u01, u10, u11} of a single-qubit gate kind.
std::array<cplx, 4> single_qubit_matrix(GateKind kind, double angle = 0.0);

}  // namespace qpept
