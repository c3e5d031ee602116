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

#include "qpept/taper.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "qpept/errors.hpp"

namespace qpept {

namespace {

bool symplectic_product(const PauliString& a, const PauliString& b) {
    return BitVec::and_parity(a.x, b.z) ^ BitVec::and_parity(a.z, b.x);
}

/// GF(2) kernel basis of the rows (each row length n_cols, packed BitVec).
std::vector<BitVec> gf2_kernel(std::vector<BitVec> rows, std::size_t n_cols) {
    std::vector<std::size_t> pivot_of_row;
    std::vector<bool> is_pivot(n_cols, false);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n_cols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && !rows[sel].get(col)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
        pivot_of_row.push_back(col);
        is_pivot[col] = true;
        ++r;
    }
    rows.resize(r);

    std::vector<BitVec> kernel;
    for (std::size_t free_col = 0; free_col < n_cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVec v(n_cols);
        v.set(free_col);
        for (std::size_t i = 0; i < r; ++i)
            if (rows[i].get(free_col)) v.set(pivot_of_row[i]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

PauliString unpack_zx(const BitVec& v, std::size_t m) {
    // layout: bits 0..m-1 = z, bits m..2m-1 = x (z first so that RREF
    // prefers Z-type representatives)
    PauliString s(m);
    for (std::size_t q = 0; q < m; ++q) {
        if (v.get(q)) s.z.set(q);
        if (v.get(m + q)) s.x.set(q);
    }
    return s;
}

BitVec pack_zx(const PauliString& s) {
    const std::size_t m = s.n_qubits();
    BitVec v(2 * m);
    for (std::size_t q = 0; q < m; ++q) {
        if (s.z.get(q)) v.set(q);
        if (s.x.get(q)) v.set(m + q);
    }
    return v;
}

}  // namespace

std::vector<SymmetryGenerator> find_z2_symmetries(const QubitOperator& h) {
    const std::size_t m = h.n_qubits();
    if (m == 0) return {};

    // constraint rows: symplectic product with every Hamiltonian string
    // vanishes; unknown laid out as (z | x), so a row is (x_s | z_s)
    std::vector<BitVec> rows;
    rows.reserve(h.n_terms());
    for (const auto& [s, c] : h.terms()) {
        if (s.is_identity()) continue;
        BitVec row(2 * m);
        for (std::size_t q = 0; q < m; ++q) {
            if (s.x.get(q)) row.set(q);          // pairs with z_g
            if (s.z.get(q)) row.set(m + q);      // pairs with x_g
        }
        rows.push_back(std::move(row));
    }

    std::vector<BitVec> kernel = gf2_kernel(std::move(rows), 2 * m);

    // maximal isotropic (mutually commuting) subset via symplectic
    // Gram-Schmidt: keep one member of each hyperbolic pair plus the radical
    std::vector<PauliString> work;
    work.reserve(kernel.size());
    for (const auto& v : kernel) work.push_back(unpack_zx(v, m));

    std::vector<PauliString> isotropic;
    while (!work.empty()) {
        PauliString v = std::move(work.front());
        work.erase(work.begin());
        std::size_t partner = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (symplectic_product(v, work[i])) {
                partner = i;
                break;
            }
        }
        if (partner == work.size()) {
            isotropic.push_back(std::move(v));
            continue;
        }
        PauliString w = std::move(work[partner]);
        work.erase(work.begin() + partner);
        for (auto& u : work) {
            if (symplectic_product(u, v)) {
                u.x ^= w.x;
                u.z ^= w.z;
            }
            if (symplectic_product(u, w)) {
                u.x ^= v.x;
                u.z ^= v.z;
            }
        }
        isotropic.push_back(std::move(v));
    }

    // canonical basis: GF(2) RREF over the (z | x) packing
    std::vector<BitVec> basis;
    basis.reserve(isotropic.size());
    for (const auto& s : isotropic) basis.push_back(pack_zx(s));
    std::size_t r = 0;
    for (std::size_t col = 0; col < 2 * m && r < basis.size(); ++col) {
        std::size_t sel = r;
        while (sel < basis.size() && !basis[sel].get(col)) ++sel;
        if (sel == basis.size()) continue;
        std::swap(basis[r], basis[sel]);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (i != r && basis[i].get(col)) basis[i] ^= basis[r];
        ++r;
    }
    basis.resize(r);

    std::vector<SymmetryGenerator> gens;
    gens.reserve(basis.size());
    for (const auto& v : basis) gens.push_back({unpack_zx(v, m), +1});
    return gens;
}

// ---------------------------------------------------------------------------
// Taperer
// ---------------------------------------------------------------------------

namespace {

struct WorkingGen {
    PauliString pauli;
    double phase = 1.0;          // the operator is phase * pauli
    std::uint64_t source_mask;   // which original generators it multiplies
};

}  // namespace

Taperer::Taperer(const QubitOperator& h, std::vector<SymmetryGenerator> gens)
    : width_(h.n_qubits()), gens_(std::move(gens)) {
    if (gens_.size() > 64) throw CapacityError("more than 64 symmetry generators");
    for (const auto& g : gens_) {
        if (g.pauli.n_qubits() != width_)
            throw DomainError("generator width does not match the Hamiltonian");
        if (g.pauli.is_identity())
            throw DomainError("identity is not a valid symmetry generator");
        for (const auto& [s, c] : h.terms())
            if (symplectic_product(g.pauli, s))
                throw DomainError("generator does not commute with the Hamiltonian");
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (symplectic_product(gens_[i].pauli, gens_[j].pauli))
                throw DomainError("symmetry generators must mutually commute");

    // Gauss-Jordan over the generators, restricted to unused qubits, to give
    // every generator a private pivot qubit it anticommutes with.
    std::vector<WorkingGen> work;
    work.reserve(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i)
        work.push_back({gens_[i].pauli, 1.0, std::uint64_t{1} << i});

    std::vector<bool> qubit_used(width_, false);
    retained_.assign(width_, true);
    for (std::size_t i = 0; i < work.size(); ++i) {
        std::size_t pivot_q = width_;
        bool pivot_is_x = true;  // X pivot pairs with a z bit of the generator
        for (std::size_t q = 0; q < width_ && pivot_q == width_; ++q)
            if (!qubit_used[q] && work[i].pauli.z.get(q)) pivot_q = q;
        if (pivot_q == width_) {
            for (std::size_t q = 0; q < width_ && pivot_q == width_; ++q)
                if (!qubit_used[q] && work[i].pauli.x.get(q)) {
                    pivot_q = q;
                    pivot_is_x = false;
                }
        }
        if (pivot_q == width_)
            throw DomainError("cannot assign a private pivot qubit to every generator");

        PauliString pivot(width_);
        if (pivot_is_x)
            pivot.x.set(pivot_q);
        else
            pivot.z.set(pivot_q);

        // clear the anticommuting bit from every other working generator
        for (std::size_t j = 0; j < work.size(); ++j) {
            if (j == i) continue;
            if (!symplectic_product(pivot, work[j].pauli)) continue;
            PauliTerm prod = multiply(PauliTerm{work[j].pauli, {work[j].phase, 0.0}},
                                      PauliTerm{work[i].pauli, {work[i].phase, 0.0}});
            if (std::abs(prod.coeff.imag()) > 1e-12)
                throw DomainError("generator product is not Hermitian");
            work[j].pauli = prod.string;
            work[j].phase = prod.coeff.real();
            work[j].source_mask ^= work[i].source_mask;
        }

        qubit_used[pivot_q] = true;
        retained_[pivot_q] = false;
        pivots_.push_back(static_cast<std::uint32_t>(pivot_q));
        pivot_paulis_.push_back(std::move(pivot));
    }

    // rotation factor -G_i A_i applied to terms that anticommute with A_i
    for (std::size_t i = 0; i < work.size(); ++i) {
        PauliTerm ga = multiply(PauliTerm{work[i].pauli, {work[i].phase, 0.0}},
                                PauliTerm{pivot_paulis_[i], {1.0, 0.0}});
        ga.coeff *= -1.0;
        rotation_products_.push_back(ga);
    }

    // stash the eigenvalue bookkeeping inside the generators vector order:
    // working generator i has eigenvalue phase_i * prod_{k in mask} sector_k
    work_phases_.reserve(work.size());
    work_masks_.reserve(work.size());
    for (const auto& w : work) {
        work_phases_.push_back(w.phase);
        work_masks_.push_back(w.source_mask);
    }
}

PauliString Taperer::drop_pivots(const PauliString& s) const {
    PauliString out(tapered_width());
    std::size_t k = 0;
    for (std::size_t q = 0; q < width_; ++q) {
        if (!retained_[q]) continue;
        if (s.x.get(q)) out.x.set(k);
        if (s.z.get(q)) out.z.set(k);
        ++k;
    }
    return out;
}

QubitOperator Taperer::apply(const QubitOperator& op, const std::vector<int>& sector) const {
    if (sector.size() != gens_.size())
        throw DomainError("sector length must match the generator count");
    if (op.n_qubits() != width_) throw DomainError("operator width mismatch");

    std::vector<double> eigenvalue(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        double e = work_phases_[i];
        for (std::size_t k = 0; k < gens_.size(); ++k)
            if (work_masks_[i] >> k & 1) e *= sector[k];
        eigenvalue[i] = e;
    }

    QubitOperator out(tapered_width());
    for (const auto& [s, c] : op.terms()) {
        for (const auto& g : gens_)
            if (symplectic_product(g.pauli, s))
                throw DomainError("operator does not commute with a symmetry generator");

        PauliTerm cur{s, c};
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            if (symplectic_product(pivot_paulis_[i], cur.string))
                cur = multiply(rotation_products_[i], cur);

        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const std::uint32_t q = pivots_[i];
            const bool pivot_is_x = pivot_paulis_[i].x.get(q);
            if (pivot_is_x) {
                if (cur.string.z.get(q))
                    throw DomainError("internal: residual Z on an X pivot qubit");
                if (cur.string.x.get(q)) {
                    cur.coeff *= eigenvalue[i];
                    cur.string.x.set(q, false);
                }
            } else {
                if (cur.string.x.get(q))
                    throw DomainError("internal: residual X on a Z pivot qubit");
                if (cur.string.z.get(q)) {
                    cur.coeff *= eigenvalue[i];
                    cur.string.z.set(q, false);
                }
            }
        }
        out.add(drop_pivots(cur.string), cur.coeff);
    }
    return out;
}

BitVec Taperer::map_occupation(const BitVec& occupation) const {
    if (occupation.size() != width_) throw DomainError("occupation width mismatch");
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        if (!pivot_paulis_[i].x.get(pivots_[i]))
            throw DomainError("occupation mapping requires X pivots (Z-type generators)");
    BitVec out(tapered_width());
    std::size_t k = 0;
    for (std::size_t q = 0; q < width_; ++q) {
        if (!retained_[q]) continue;
        if (occupation.get(q)) out.set(k);
        ++k;
    }
    return out;
}

std::vector<int> Taperer::sector_of_occupation(const BitVec& occupation) const {
    std::vector<int> sector;
    sector.reserve(gens_.size());
    for (const auto& g : gens_) {
        if (g.pauli.x.any())
            throw DomainError("sector_of_occupation requires Z-type generators");
        sector.push_back(BitVec::and_parity(g.pauli.z, occupation) ? -1 : +1);
    }
    return sector;
}

std::vector<int> Taperer::choose_sector(const QubitOperator& h,
                                        const BitVec& reference) const {
    const std::size_t g = gens_.size();
    const BitVec ref = map_occupation(reference);
    std::vector<int> best;
    double best_score = 0.0;
    for (std::size_t bits = 0; bits < (std::size_t{1} << g); ++bits) {
        std::vector<int> sector(g);
        for (std::size_t i = 0; i < g; ++i) sector[i] = (bits >> i & 1) ? -1 : +1;
        const double score = apply(h, sector).diagonal_expectation(ref);
        if (best.empty() || score < best_score - 1e-15) {
            best = sector;
            best_score = score;
        }
    }
    return best;
}

CompiledAnsatz Taperer::apply(const CompiledAnsatz& ansatz,
                              const std::vector<int>& sector) const {
    if (ansatz.width != width_) throw DomainError("ansatz width mismatch");

    std::vector<double> eigenvalue(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        double e = work_phases_[i];
        for (std::size_t k = 0; k < gens_.size(); ++k)
            if (work_masks_[i] >> k & 1) e *= sector[k];
        eigenvalue[i] = e;
    }

    // a parameter slot survives only if all of its strings commute with
    // every generator
    std::vector<bool> slot_ok(ansatz.n_params, true);
    for (const auto& rot : ansatz.rotations)
        for (const auto& g : gens_)
            if (symplectic_product(g.pauli, rot.string)) slot_ok[rot.slot] = false;

    std::vector<std::uint32_t> new_slot(ansatz.n_params, 0);
    std::uint32_t next = 0;
    for (std::size_t s = 0; s < ansatz.n_params; ++s)
        if (slot_ok[s]) new_slot[s] = next++;

    CompiledAnsatz out;
    out.width = tapered_width();
    out.n_params = next;
    out.reference = map_occupation(ansatz.reference);
    for (const auto& rot : ansatz.rotations) {
        if (!slot_ok[rot.slot]) continue;
        PauliTerm cur{rot.string, {1.0, 0.0}};
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            if (symplectic_product(pivot_paulis_[i], cur.string))
                cur = multiply(rotation_products_[i], cur);
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const std::uint32_t q = pivots_[i];
            const bool pivot_is_x = pivot_paulis_[i].x.get(q);
            if (pivot_is_x ? cur.string.x.get(q) : cur.string.z.get(q)) {
                cur.coeff *= eigenvalue[i];
                if (pivot_is_x)
                    cur.string.x.set(q, false);
                else
                    cur.string.z.set(q, false);
            }
        }
        if (std::abs(cur.coeff.imag()) > 1e-12)
            throw DomainError("internal: tapered rotation picked up a complex phase");
        PauliString reduced = drop_pivots(cur.string);
        if (reduced.is_identity()) continue;  // pure phase, no rotation left
        out.rotations.push_back({reduced, rot.coeff * cur.coeff.real(), new_slot[rot.slot]});
    }
    return out;
}

QubitOperator taper(const QubitOperator& h, const std::vector<SymmetryGenerator>& gens,
                    const std::vector<int>& sector) {
    if (gens.empty()) return h;
    Taperer t(h, gens);
    return t.apply(h, sector);
}

}  // namespace qpept
