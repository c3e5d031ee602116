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

#include "qpept/ansatz.hpp"

#include <cmath>
#include <sstream>

#include "qpept/errors.hpp"

namespace qpept {

namespace {

BitVec hf_occupation(std::size_t M, std::size_t eta) {
    BitVec occ(M);
    for (std::size_t i = 0; i < eta; ++i) occ.set(i);
    return occ;
}

}  // namespace

AnsatzSpec build_uccsd(std::size_t M, std::size_t eta) {
    if (eta == 0 || eta >= M) throw DomainError("build_uccsd requires 0 < eta < M");
    AnsatzSpec spec;
    spec.kind = AnsatzKind::kUccsd;
    spec.n_spin_orbitals = M;
    spec.n_electrons = eta;
    spec.repetitions = 1;
    spec.reference_occupation = hf_occupation(M, eta);

    std::uint32_t slot = 0;
    for (std::uint32_t i = 0; i < eta; ++i)
        for (std::uint32_t j = i + 1; j < eta; ++j)
            for (std::uint32_t a = static_cast<std::uint32_t>(eta); a < M; ++a)
                for (std::uint32_t b = a + 1; b < M; ++b)
                    spec.generators.push_back(
                        {ExcitationKind::kDouble, {i, j, a, b}, slot++});
    for (std::uint32_t i = 0; i < eta; ++i)
        for (std::uint32_t a = static_cast<std::uint32_t>(eta); a < M; ++a)
            spec.generators.push_back({ExcitationKind::kSingle, {i, a, 0, 0}, slot++});
    spec.n_params = slot;
    return spec;
}

AnsatzSpec build_kupccgsd(std::size_t M, std::size_t k, std::size_t eta) {
    if (M % 2 != 0) throw DomainError("build_kupccgsd requires even M");
    if (k < 1) throw DomainError("build_kupccgsd requires k >= 1");
    AnsatzSpec spec;
    spec.kind = AnsatzKind::kKupccgsd;
    spec.n_spin_orbitals = M;
    spec.n_electrons = eta;
    spec.repetitions = k;
    spec.reference_occupation = hf_occupation(M, eta);

    const std::uint32_t n = static_cast<std::uint32_t>(M / 2);
    std::uint32_t slot = 0;
    for (std::size_t rep = 0; rep < k; ++rep) {
        // paired doubles on unordered spatial pairs
        for (std::uint32_t p = 0; p < n; ++p)
            for (std::uint32_t q = p + 1; q < n; ++q)
                spec.generators.push_back(
                    {ExcitationKind::kPairedDouble, {p, q, 0, 0}, slot++});
        // generalized spin-conserving singles on unordered spin-orbital pairs
        for (std::uint32_t p = 0; p < M; ++p)
            for (std::uint32_t q = p + 2; q < M; q += 2)
                spec.generators.push_back({ExcitationKind::kSingle, {p, q, 0, 0}, slot++});
    }
    spec.n_params = slot;
    return spec;
}

std::size_t kupccgsd_paired_term_count(std::size_t M) {
    if (M % 2 != 0) throw DomainError("even M required");
    return (M / 2) * (M / 2 - 1);
}

FermionOperator excitation_operator(const ExcitationGenerator& g) {
    FermionOperator t;
    switch (g.kind) {
        case ExcitationKind::kSingle: {
            const auto [from, to] = std::pair{g.idx[0], g.idx[1]};
            if (from == to) throw DomainError("single excitation needs distinct indices");
            t.add_term({{to, true}, {from, false}}, 1.0);
            break;
        }
        case ExcitationKind::kDouble: {
            const auto i = g.idx[0], j = g.idx[1], a = g.idx[2], b = g.idx[3];
            if (i == j || a == b) throw DomainError("double excitation needs distinct pairs");
            t.add_term({{a, true}, {b, true}, {j, false}, {i, false}}, 1.0);
            break;
        }
        case ExcitationKind::kPairedDouble: {
            const auto p = g.idx[0], q = g.idx[1];
            if (p == q) throw DomainError("paired double needs distinct spatial orbitals");
            t.add_term({{2 * q, true}, {2 * q + 1, true}, {2 * p + 1, false}, {2 * p, false}},
                       1.0);
            break;
        }
    }
    return t;
}

CompiledAnsatz compile_ansatz(const AnsatzSpec& spec) {
    CompiledAnsatz out;
    out.width = spec.n_spin_orbitals;
    out.n_params = spec.n_params;
    out.reference = spec.reference_occupation;
    for (const auto& g : spec.generators) {
        QubitOperator q = jordan_wigner(excitation_operator(g), spec.n_spin_orbitals);
        for (const auto& [s, c] : q.terms()) {
            if (std::abs(c.imag()) < 1e-14) continue;
            out.rotations.push_back({s, 2.0 * c.imag(), g.param_slot});
        }
    }
    return out;
}

std::vector<std::pair<PauliTerm, double>> trotterize(const AnsatzSpec& spec,
                                                     const std::vector<double>& params) {
    if (params.size() != spec.n_params)
        throw DomainError("parameter vector length " + std::to_string(params.size()) +
                          " does not match ansatz parameter count " +
                          std::to_string(spec.n_params));
    CompiledAnsatz compiled = compile_ansatz(spec);
    std::vector<std::pair<PauliTerm, double>> out;
    out.reserve(compiled.rotations.size());
    for (const auto& rot : compiled.rotations)
        out.emplace_back(PauliTerm{rot.string, {1.0, 0.0}}, rot.coeff * params[rot.slot]);
    return out;
}

std::string AnsatzSpec::summary_json() const {
    std::ostringstream os;
    os << "{\"kind\":\"" << (kind == AnsatzKind::kUccsd ? "uccsd" : "kupccgsd") << "\"";
    os << ",\"spin_orbitals\":" << n_spin_orbitals;
    os << ",\"parameters\":" << n_params;
    os << ",\"repetitions\":" << repetitions;
    os << ",\"generators\":" << generators.size();
    if (kind == AnsatzKind::kKupccgsd) {
        os << ",\"paired_double_terms_ordered\":" << kupccgsd_paired_term_count(n_spin_orbitals)
           << ",\"note\":\"gate counts use ordered-pair T2 terms; independent parameters"
              " live on unordered pairs\"";
    }
    os << "}";
    return os.str();
}

}  // namespace qpept
