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

#include "qpept/sim.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>

#include "qpept/errors.hpp"

namespace qpept {

std::size_t StateVector::width_cap() {
    if (const char* env = std::getenv("QPEPT_MAX_QUBITS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 24;
}

StateVector::StateVector(std::size_t n_qubits) : n_(n_qubits) {
    if (n_ > width_cap())
        throw CapacityError("statevector width " + std::to_string(n_) +
                            " exceeds cap " + std::to_string(width_cap()) +
                            " (set QPEPT_MAX_QUBITS to raise it)");
    amp_.assign(std::size_t{1} << n_, cplx{0.0, 0.0});
    amp_[0] = cplx{1.0, 0.0};
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

StateVector prepare_reference(const BitVec& occupation) {
    StateVector state(occupation.size());
    std::size_t index = 0;
    for (std::size_t q = 0; q < occupation.size(); ++q)
        if (occupation.get(q)) index |= std::size_t{1} << q;
    state.amplitudes()[0] = cplx{0.0, 0.0};
    state.amplitudes()[index] = cplx{1.0, 0.0};
    return state;
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

inline void apply_single(std::vector<cplx>& amp, std::size_t n, std::uint32_t q,
                         cplx u00, cplx u01, cplx u10, cplx u11) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t base = 0; base < dim; base += 2 * bit) {
        for (std::size_t i = base; i < base + bit; ++i) {
            const cplx a0 = amp[i];
            const cplx a1 = amp[i | bit];
            amp[i] = u00 * a0 + u01 * a1;
            amp[i | bit] = u10 * a0 + u11 * a1;
        }
    }
}

}  // namespace

std::array<cplx, 4> single_qubit_matrix(GateKind kind, double angle) {
    switch (kind) {
        case GateKind::kH:
            return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
        case GateKind::kYBasis:
            return {kInvSqrt2, cplx{0, kInvSqrt2}, cplx{0, kInvSqrt2}, kInvSqrt2};
        case GateKind::kYBasisInv:
            return {kInvSqrt2, cplx{0, -kInvSqrt2}, cplx{0, -kInvSqrt2}, kInvSqrt2};
        case GateKind::kRZ:
            return {std::exp(cplx{0, -angle / 2}), 0, 0, std::exp(cplx{0, angle / 2})};
        case GateKind::kX:
            return {0, 1, 1, 0};
        case GateKind::kZ:
            return {1, 0, 0, -1};
        case GateKind::kCNOT:
            throw DomainError("CNOT is not a single-qubit gate");
    }
    throw DomainError("unknown gate kind");
}

void apply_gate(StateVector& state, const Gate& g) {
    auto& amp = state.amplitudes();
    const std::size_t n = state.n_qubits();
    if (g.q0 >= n || (g.is_two_qubit() && g.q1 >= n))
        throw DomainError("gate qubit out of range for state width");

    if (g.kind == GateKind::kCNOT) {
        const std::size_t cbit = std::size_t{1} << g.q0;
        const std::size_t tbit = std::size_t{1} << g.q1;
        const std::size_t dim = std::size_t{1} << n;
        for (std::size_t i = 0; i < dim; ++i)
            if ((i & cbit) && !(i & tbit)) std::swap(amp[i], amp[i | tbit]);
        return;
    }
    const auto m = single_qubit_matrix(g.kind, g.angle);
    apply_single(amp, n, g.q0, m[0], m[1], m[2], m[3]);
}

void apply_circuit(StateVector& state, const Circuit& c) {
    if (c.width != state.n_qubits())
        throw DomainError("circuit width " + std::to_string(c.width) +
                          " does not match state width " +
                          std::to_string(state.n_qubits()));
    for (const auto& g : c.gates) apply_gate(state, g);
}

cplx pauli_expectation(const StateVector& state, const PauliString& p) {
    if (p.n_qubits() != state.n_qubits()) throw DomainError("operator width mismatch");
    const auto& amp = state.amplitudes();
    const std::size_t dim = amp.size();

    std::size_t xmask = 0, zmask = 0;
    int y_count = 0;
    for (std::size_t q = 0; q < p.n_qubits(); ++q) {
        if (p.x.get(q)) xmask |= std::size_t{1} << q;
        if (p.z.get(q)) zmask |= std::size_t{1} << q;
        if (p.x.get(q) && p.z.get(q)) ++y_count;
    }
    static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx yphase = kIPow[y_count & 3];

    cplx acc{0.0, 0.0};
    for (std::size_t b = 0; b < dim; ++b) {
        const cplx a = amp[b];
        if (a == cplx{0.0, 0.0}) continue;
        // P|b> = yphase * (-1)^{|b & z|} |b ^ x>
        const bool neg = std::popcount(b & zmask) & 1;
        const cplx coeff = neg ? -yphase : yphase;
        acc += std::conj(amp[b ^ xmask]) * coeff * a;
    }
    return acc;
}

double expectation(const StateVector& state, const QubitOperator& op) {
    if (!op.is_hermitian(1e-10))
        throw DomainError("expectation requires a Hermitian operator");
    cplx acc{0.0, 0.0};
    for (const auto& [s, c] : op.terms()) acc += c * pauli_expectation(state, s);
    if (std::abs(acc.imag()) > 1e-10)
        throw DomainError("expectation imaginary residue " +
                          std::to_string(acc.imag()));
    return acc.real();
}

}  // namespace qpept
