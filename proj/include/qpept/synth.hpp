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
#include <string>
#include <utility>
#include <vector>

#include "qpept/encoding.hpp"

namespace qpept {

struct AnsatzSpec;

/// Gate kinds. YBasis is the single-qubit gate (I + iX)/sqrt(2); together
/// with its inverse it rotates Z into Y for exponentiated-string synthesis
/// (YBasis Z YBasis^dag = Y). RZ(angle) = diag(e^{-i angle/2}, e^{+i angle/2}).
enum class GateKind : std::uint8_t { kH, kYBasis, kYBasisInv, kRZ, kCNOT, kX, kZ };

struct Gate {
    GateKind kind;
    std::uint32_t q0 = 0;  // target (single-qubit) or control (CNOT)
    std::uint32_t q1 = 0;  // CNOT target
    double angle = 0.0;    // RZ only

    bool is_two_qubit() const { return kind == GateKind::kCNOT; }
};

/// Ordered gate list over a fixed-width qubit register; gates[0] acts first.
struct Circuit {
    std::uint32_t width = 0;
    std::vector<Gate> gates;

    explicit Circuit(std::uint32_t w = 0) : width(w) {}

    void h(std::uint32_t q) { push({GateKind::kH, q}); }
    void y_basis(std::uint32_t q) { push({GateKind::kYBasis, q}); }
    void y_basis_inv(std::uint32_t q) { push({GateKind::kYBasisInv, q}); }
    void x(std::uint32_t q) { push({GateKind::kX, q}); }
    void z(std::uint32_t q) { push({GateKind::kZ, q}); }
    void rz(std::uint32_t q, double angle) { push({GateKind::kRZ, q, 0, angle}); }
    void cnot(std::uint32_t control, std::uint32_t target);

    std::size_t n_gates() const { return gates.size(); }
    std::size_t two_qubit_count() const;

    void push(Gate g);
};

/// Circuit implementing exp(i theta P) for a non-identity Pauli string:
/// basis changes into Z, a CNOT ladder onto the last active qubit, one
/// RZ(-2 theta), then the mirror. Exactly 2(w-1) CNOTs for weight w.
Circuit synthesize_pauli_exp(const PauliString& p, double theta);
Circuit synthesize_pauli_exp(const PauliTerm& term, double theta);

/// Append the same construction into an existing circuit.
void append_pauli_exp(Circuit& c, const PauliString& p, double theta);

/// Greedy ASAP layering: a gate joins the earliest layer after every gate
/// sharing one of its qubits. Returns the layer count.
std::size_t schedule_depth(const Circuit& c);

/// Same layering restricted to CNOTs (single-qubit gates are free).
std::size_t schedule_two_qubit_depth(const Circuit& c);

enum class CountMode { kNaive, kOptimized };

/// Two-qubit gate count over every Pauli string emitted by the ansatz:
/// 2(w-1) per string, where kNaive takes the full string weight (JW
/// Z-ladder included) and kOptimized only the excitation support.
/// For k-UpCCGSD specs the paired-double contribution is doubled, matching
/// the ordered-pair term count (M/2)(M/2-1).
std::size_t count_two_qubit_gates(const AnsatzSpec& spec, CountMode mode);

/// Closed-form equivalents used at roster scale (exactly equal to the
/// enumerated counts; cross-checked in tests).
std::size_t count_uccsd_gates(std::size_t M, std::size_t eta, CountMode mode);
std::size_t count_kupccgsd_gates(std::size_t M, std::size_t k, CountMode mode);

/// Groups of spatial pairs {p, q}, p > q, 1-based, with constant p + q;
/// within a group all pairs are strictly nested. M spin orbitals give
/// exactly M - 3 groups. Requires even M >= 8.
std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
nesting_partition(std::size_t M);

/// Depth of the k-UpCCGSD circuit skeleton: one repetition is built from
/// ladder-cancelled paired-double and generalized-single blocks packed over
/// mutually disjoint spatial pairs, scheduled with schedule_depth, then
/// multiplied by k.
std::size_t estimate_kupccgsd_depth(std::size_t M, std::size_t k);

struct DepthEstimate {
    std::size_t depth = 0;
    std::size_t two_qubit_depth = 0;
};

/// Same skeleton, reporting the all-gate and CNOT-only layer counts.
DepthEstimate estimate_kupccgsd_depth_detail(std::size_t M, std::size_t k);

/// One gate per line ("h 0", "cnot 0 1", "rz 2 -1.5707963267948966").
std::string serialize_netlist(const Circuit& c);
Circuit parse_netlist(const std::string& text);

}  // namespace qpept
