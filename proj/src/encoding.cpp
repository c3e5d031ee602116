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

#include "qpept/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qpept/bigint.hpp"
#include "qpept/errors.hpp"

namespace qpept {

int multiply_phase_exponent(const PauliString& a, const PauliString& b) {
    // With the site convention P(x,z) = i^{xz} X^x Z^z (so (1,1) is Y),
    // the product P(x1,z1) P(x2,z2) = i^k P(x1^x2, z1^z2) where
    // k = sum[x1 z1] + sum[x2 z2] - sum[x3 z3] + 2 sum[z1 & x2]  (mod 4).
    const BitVec x3 = a.x ^ b.x;
    const BitVec z3 = a.z ^ b.z;
    long k = 0;
    k += static_cast<long>(BitVec::and_popcount(a.x, a.z));
    k += static_cast<long>(BitVec::and_popcount(b.x, b.z));
    k -= static_cast<long>(BitVec::and_popcount(x3, z3));
    k += 2 * static_cast<long>(BitVec::and_popcount(a.z, b.x));
    return static_cast<int>(((k % 4) + 4) % 4);
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
    if (a.n_qubits() != b.n_qubits())
        throw DomainError("pauli length mismatch: " + std::to_string(a.n_qubits()) +
                          " vs " + std::to_string(b.n_qubits()));
    static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    PauliTerm out;
    out.string.x = a.string.x ^ b.string.x;
    out.string.z = a.string.z ^ b.string.z;
    out.coeff = a.coeff * b.coeff * kIPow[multiply_phase_exponent(a.string, b.string)];
    return out;
}

void QubitOperator::add(const PauliString& s, cplx c) {
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        if (std::abs(c) >= kPruneThreshold) terms_.emplace(s, c);
        return;
    }
    it->second += c;
    if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

QubitOperator& QubitOperator::operator+=(const QubitOperator& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

QubitOperator& QubitOperator::operator*=(cplx s) {
    if (s == cplx{0, 0}) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

QubitOperator operator*(const QubitOperator& a, const QubitOperator& b) {
    QubitOperator out(a.n_qubits());
    for (const auto& [sa, ca] : a.terms_) {
        for (const auto& [sb, cb] : b.terms_) {
            PauliTerm prod = multiply(PauliTerm{sa, ca}, PauliTerm{sb, cb});
            out.add(prod.string, prod.coeff);
        }
    }
    return out;
}

QubitOperator QubitOperator::adjoint() const {
    QubitOperator out(n_);
    for (const auto& [s, c] : terms_) out.add(s, std::conj(c));
    return out;
}

bool QubitOperator::is_hermitian(double tol) const {
    for (const auto& [s, c] : terms_)
        if (std::abs(c.imag()) > tol) return false;
    return true;
}

double QubitOperator::diagonal_expectation(const BitVec& bits) const {
    double val = 0.0;
    for (const auto& [s, c] : terms_) {
        if (s.x.any()) continue;
        const bool parity = BitVec::and_parity(s.z, bits);
        val += (parity ? -1.0 : 1.0) * c.real();
    }
    return val;
}

namespace {

/// JW image of a single ladder operator: the two weight-(i+1) strings
/// Z_0..Z_{i-1} X_i and Z_0..Z_{i-1} Y_i with coefficients 1/2 and +-i/2.
QubitOperator jw_ladder(std::size_t n, std::uint32_t index, bool dagger) {
    QubitOperator op(n);
    PauliString base(n);
    for (std::uint32_t q = 0; q < index; ++q) base.z.set(q);

    PauliString xs = base;
    xs.x.set(index);
    op.add(xs, cplx{0.5, 0.0});

    PauliString ys = base;
    ys.x.set(index);
    ys.z.set(index);
    op.add(ys, dagger ? cplx{0.0, -0.5} : cplx{0.0, 0.5});
    return op;
}

}  // namespace

QubitOperator jordan_wigner(const FermionOperator& op, std::size_t n_modes) {
    if (op.max_mode() > n_modes)
        throw DomainError("mode index " + std::to_string(op.max_mode() - 1) +
                          " out of range for " + std::to_string(n_modes) + " modes");
    QubitOperator out(n_modes);
    for (const auto& [ops, c] : op.terms()) {
        QubitOperator acc = QubitOperator::identity(n_modes, c);
        for (const auto& lop : ops) acc = acc * jw_ladder(n_modes, lop.index, lop.dagger);
        out += acc;
    }
    return out;
}

QubitBounds qubit_count_bounds(std::size_t M, std::size_t n) {
    if (n > M) throw DomainError("electron count exceeds mode count");
    BigUint c = big_binomial(static_cast<unsigned>(M), static_cast<unsigned>(n));
    // ceil(log2 c): bit_length - 1 for powers of two, bit_length otherwise
    std::size_t lower = 0;
    if (!c.is_zero()) {
        std::size_t bl = c.bit_length();
        lower = c.is_power_of_two() ? bl - 1 : bl;
    }
    return {lower, M};
}

std::string format_pauli(const PauliString& s) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t q = 0; q < s.n_qubits(); ++q) {
        const bool x = s.x.get(q), z = s.z.get(q);
        if (!x && !z) continue;
        if (!first) os << " ";
        first = false;
        os << (x && z ? 'Y' : (x ? 'X' : 'Z')) << q;
    }
    if (first) os << "I";
    return os.str();
}

std::string format_pauli(const PauliTerm& t) {
    std::ostringstream os;
    os.precision(17);
    if (t.coeff.imag() == 0.0)
        os << t.coeff.real();
    else
        os << "(" << t.coeff.real() << (t.coeff.imag() < 0 ? "-" : "+")
           << std::abs(t.coeff.imag()) << "i)";
    os << " * " << format_pauli(t.string);
    return os.str();
}

PauliTerm parse_pauli(const std::string& text, std::size_t n_qubits) {
    PauliTerm term;
    term.string = PauliString(n_qubits);

    std::string coeff_part = text;
    std::string ops_part;
    if (auto star = text.find('*'); star != std::string::npos) {
        coeff_part = text.substr(0, star);
        ops_part = text.substr(star + 1);
    } else {
        coeff_part = "1";
        ops_part = text;
    }

    // coefficient: either "re" or "(re+imi)"
    {
        std::string c = coeff_part;
        c.erase(std::remove_if(c.begin(), c.end(), [](char ch) { return ch == ' '; }), c.end());
        if (!c.empty() && c.front() == '(') {
            if (c.back() != ')' || c.size() < 4 || c[c.size() - 2] != 'i')
                throw ParseError("bad complex coefficient '" + coeff_part + "'");
            std::string inner = c.substr(1, c.size() - 3);
            std::size_t split = inner.npos;
            for (std::size_t i = 1; i < inner.size(); ++i) {
                if ((inner[i] == '+' || inner[i] == '-') &&
                    inner[i - 1] != 'e' && inner[i - 1] != 'E')
                    split = i;
            }
            if (split == inner.npos) throw ParseError("bad complex coefficient '" + coeff_part + "'");
            term.coeff = {std::stod(inner.substr(0, split)), std::stod(inner.substr(split))};
        } else if (!c.empty()) {
            term.coeff = {std::stod(c), 0.0};
        }
    }

    std::istringstream is(ops_part);
    std::string tok;
    while (is >> tok) {
        if (tok == "I") continue;
        if (tok.size() < 2) throw ParseError("bad pauli token '" + tok + "'");
        char p = tok[0];
        std::size_t q = std::stoul(tok.substr(1));
        if (q >= n_qubits)
            throw ParseError("qubit index " + std::to_string(q) + " out of range");
        if (term.string.x.get(q) || term.string.z.get(q))
            throw ParseError("duplicate qubit " + std::to_string(q));
        switch (p) {
            case 'X': term.string.x.set(q); break;
            case 'Z': term.string.z.set(q); break;
            case 'Y': term.string.x.set(q); term.string.z.set(q); break;
            default: throw ParseError("bad pauli token '" + tok + "'");
        }
    }
    return term;
}

}  // namespace qpept
