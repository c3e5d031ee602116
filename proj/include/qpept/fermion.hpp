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

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qpept {

struct MolecularIntegrals;

/// One creation (dagger) or annihilation operator acting on a 0-based
/// spin-orbital index.
struct LadderOp {
    std::uint32_t index;
    bool dagger;

    friend bool operator==(const LadderOp&, const LadderOp&) = default;
    friend std::strong_ordering operator<=>(const LadderOp&, const LadderOp&) = default;
};

/// Ordered product of ladder operators with a complex coefficient.
struct LadderTerm {
    std::vector<LadderOp> ops;
    std::complex<double> coeff{1.0, 0.0};
};

/// Second-quantized operator kept in normal-ordered canonical form: within
/// each stored term all daggers precede all annihilators, dagger indices
/// strictly descending, annihilator indices strictly ascending. Terms with
/// identical factor sequences are merged; coefficients below 1e-14 pruned.
class FermionOperator {
public:
    static constexpr double kPruneThreshold = 1e-14;

    FermionOperator() = default;

    static FermionOperator identity(std::complex<double> c) {
        FermionOperator op;
        op.add_term({}, c);
        return op;
    }

    /// Insert coeff * ops, normal ordering as needed (anticommutation signs
    /// and contractions handled exactly).
    void add_term(const std::vector<LadderOp>& ops, std::complex<double> coeff);

    std::size_t n_terms() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Largest mode index referenced, plus one (0 for pure scalars).
    std::size_t max_mode() const;

    std::complex<double> coefficient(const std::vector<LadderOp>& canonical_ops) const {
        auto it = terms_.find(canonical_ops);
        return it == terms_.end() ? std::complex<double>{0, 0} : it->second;
    }

    const std::map<std::vector<LadderOp>, std::complex<double>>& terms() const {
        return terms_;
    }

    FermionOperator& operator+=(const FermionOperator& o);
    FermionOperator& operator*=(std::complex<double> s);
    friend FermionOperator operator+(FermionOperator a, const FermionOperator& b) {
        return a += b;
    }

    /// Operator product; the result is re-normal-ordered.
    friend FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

    FermionOperator adjoint() const;

    bool is_hermitian(double tol = 1e-12) const;

    std::string str() const;

private:
    std::map<std::vector<LadderOp>, std::complex<double>> terms_;
};

/// Rewrite a single product of ladder operators into canonical normal
/// order. Exposed mostly for tests; FermionOperator does this on insert.
FermionOperator normal_order_term(const LadderTerm& term);

/// Re-canonicalize an operator. Idempotent and linear.
FermionOperator normal_order(const FermionOperator& op);

/// [a, b] = ab - ba, normal ordered.
FermionOperator commutator(const FermionOperator& a, const FermionOperator& b);

/// Total-number operator sum_i a^dag_i a_i on n_modes modes.
FermionOperator number_operator(std::size_t n_modes);

/// S_z in the interleaved spin-orbital ordering (alpha on even modes,
/// beta on odd), in units of hbar: (N_alpha - N_beta) / 2.
FermionOperator sz_operator(std::size_t n_modes);

/// Molecular Hamiltonian from spatial-orbital integrals (chemists'
/// convention): E_core
///   + sum_{pq,s} h_pq a^dag_{p,s} a_{q,s}
///   + 1/2 sum_{pqrs,st} (pq|rs) a^dag_{p,s} a^dag_{r,t} a_{s_orb,t} a_{q,s}.
/// Spatial orbital p maps to modes 2p (alpha) and 2p+1 (beta).
FermionOperator build_hamiltonian(const MolecularIntegrals& ints);

}  // namespace qpept
