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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpept/bitvec.hpp"
#include "qpept/fermion.hpp"

namespace qpept {

using cplx = std::complex<double>;

/// Pure Pauli string in binary symplectic form. Per qubit the (x, z) bit
/// pair encodes I/X/Z/Y as (0,0)/(1,0)/(0,1)/(1,1), with the global phase
/// convention Y = i*X*Z. The string itself carries no coefficient.
struct PauliString {
    BitVec x;
    BitVec z;

    PauliString() = default;
    explicit PauliString(std::size_t n) : x(n), z(n) {}

    std::size_t n_qubits() const { return x.size(); }
    std::size_t weight() const { return (x | z).popcount(); }
    bool is_identity() const { return x.none() && z.none(); }

    /// True when the two strings commute (symplectic product is zero).
    bool commutes_with(const PauliString& o) const {
        return BitVec::and_parity(x, o.z) == BitVec::and_parity(z, o.x);
    }

    friend bool operator==(const PauliString&, const PauliString&) = default;
    friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.z <=> b.z;
    }
};

/// Coefficient-weighted Pauli string.
struct PauliTerm {
    PauliString string;
    cplx coeff{1.0, 0.0};

    PauliTerm() = default;
    PauliTerm(PauliString s, cplx c) : string(std::move(s)), coeff(c) {}
    std::size_t n_qubits() const { return string.n_qubits(); }
    std::size_t weight() const { return string.weight(); }
};

/// Exact product of two Pauli terms: symplectic XOR of the bit vectors and
/// an integer power of i from the pairwise X/Z reorderings.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

/// Phase exponent k in a*b = i^k * (a xor b) for coefficient-free strings.
int multiply_phase_exponent(const PauliString& a, const PauliString& b);

/// Hermitian-friendly sum of Pauli strings with coefficients, merged on
/// identical strings and pruned below 1e-14.
class QubitOperator {
public:
    static constexpr double kPruneThreshold = 1e-14;

    QubitOperator() = default;
    explicit QubitOperator(std::size_t n_qubits) : n_(n_qubits) {}

    static QubitOperator identity(std::size_t n_qubits, cplx coeff) {
        QubitOperator op(n_qubits);
        op.add(PauliString(n_qubits), coeff);
        return op;
    }

    std::size_t n_qubits() const { return n_; }
    std::size_t n_terms() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    void add(const PauliString& s, cplx c);
    void add(const PauliTerm& t) { add(t.string, t.coeff); }

    QubitOperator& operator+=(const QubitOperator& o);
    QubitOperator& operator*=(cplx s);
    friend QubitOperator operator+(QubitOperator a, const QubitOperator& b) { return a += b; }

    /// Full operator product, expanding string-by-string.
    friend QubitOperator operator*(const QubitOperator& a, const QubitOperator& b);

    QubitOperator adjoint() const;

    /// All coefficients real within tol (self-adjoint under the fixed
    /// phase convention).
    bool is_hermitian(double tol = 1e-12) const;

    cplx coefficient(const PauliString& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? cplx{0, 0} : it->second;
    }

    const std::map<PauliString, cplx>& terms() const { return terms_; }

    /// <b|P|b> summed over terms for a computational basis state; only
    /// X-free strings contribute.
    double diagonal_expectation(const BitVec& bits) const;

private:
    std::size_t n_ = 0;
    std::map<PauliString, cplx> terms_;
};

/// Jordan-Wigner transform: a_i -> Z_0..Z_{i-1} (X_i + iY_i)/2 and
/// a^dag_i -> Z_0..Z_{i-1} (X_i - iY_i)/2, products expanded and collected.
QubitOperator jordan_wigner(const FermionOperator& op, std::size_t n_modes);

/// Exact information-theoretic qubit bounds for n electrons in M spin
/// orbitals: ceil(log2 C(M, n)) <= Q <= M.
struct QubitBounds {
    std::size_t lower;
    std::size_t upper;
};
QubitBounds qubit_count_bounds(std::size_t M, std::size_t n);

/// Text form "(re,im) * X0 Z1 Y4"; pure-real coefficients print bare.
std::string format_pauli(const PauliTerm& t);
std::string format_pauli(const PauliString& s);

/// Parse the serialization produced by format_pauli. n_qubits fixes the
/// register width; indices must be below it.
PauliTerm parse_pauli(const std::string& text, std::size_t n_qubits);

}  // namespace qpept
