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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace qpept {

/// Element -> atom count, e.g. C4H8N2O3. Counts are strictly positive.
class MolecularFormula {
public:
    MolecularFormula() = default;
    explicit MolecularFormula(std::map<std::string, int> counts);

    /// Parse Hill-style text such as "C4H8N2O3" or "H2".
    static MolecularFormula parse(const std::string& text);

    const std::map<std::string, int>& counts() const { return counts_; }
    int count(const std::string& element) const;
    std::string str() const;

private:
    std::map<std::string, int> counts_;
};

/// Per-element orbital bookkeeping for one basis set: how many spatial
/// functions the basis assigns to the element, plus the basis-independent
/// valence/core orbital and valence electron counts.
struct BasisCatalogEntry {
    std::string basis_name;
    std::map<std::string, int> spatial_functions;
    std::map<std::string, int> valence_orbitals;
    std::map<std::string, int> core_orbitals;
    std::map<std::string, int> valence_electrons;
};

/// Versioned built-in table of basis-set function counts, overridable from
/// a key-value config file with lines "<basis> <element> <count>".
class BasisCatalog {
public:
    static const BasisCatalog& builtin();

    /// Copy of the built-in catalog with counts overridden from config text.
    static BasisCatalog with_overrides(const std::string& config_text);
    static BasisCatalog with_overrides_file(const std::string& path);

    BasisCatalogEntry entry(const std::string& basis_name) const;
    std::vector<std::string> basis_names() const;
    bool has_basis(const std::string& basis_name) const;

    int version() const { return version_; }

private:
    // basis -> element -> spatial function count
    std::map<std::string, std::map<std::string, int>> spatial_;
    int version_ = 1;
};

/// One-/two-electron integrals over spatial orbitals plus electron count
/// and core (scalar) energy. Two-electron integrals are stored dense in
/// chemists' convention, V[p][q][r][s] = (pq|rs), with all eight
/// permutation images populated.
struct MolecularIntegrals {
    std::size_t m_spatial = 0;
    std::size_t n_electrons = 0;
    double e_core = 0.0;
    std::vector<double> h;  // m^2, symmetric
    std::vector<double> v;  // m^4, 8-fold symmetric
    int ms2 = 0;

    MolecularIntegrals() = default;
    MolecularIntegrals(std::size_t m, std::size_t eta);

    double one_body(std::size_t p, std::size_t q) const { return h[p * m_spatial + q]; }
    double two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
        return v[((p * m_spatial + q) * m_spatial + r) * m_spatial + s];
    }

    /// Set h_pq and its transpose image.
    void set_one_body(std::size_t p, std::size_t q, double val);
    /// Set (pq|rs) and its other seven permutation images.
    void set_two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s, double val);
};

/// Parse an FCIDUMP-style text (header NORB/NELEC/MS2, then
/// "value i j k l" lines; 1-based indices, chemists' convention;
/// "i j 0 0" one-electron, "0 0 0 0" core energy).
MolecularIntegrals parse_integral_file(const std::string& text);
MolecularIntegrals parse_integral_path(const std::string& path);

/// Inverse of parse_integral_file; stable canonical entry order and full
/// double precision so a round trip reproduces values exactly.
std::string serialize_integrals(const MolecularIntegrals& ints);

/// Qubits for a full (all-orbital) simulation: twice the number of basis
/// functions over all atoms.
std::size_t count_qubits(const MolecularFormula& formula, const BasisCatalogEntry& basis);

/// Full-reaction-space accounting. M = 2 * total valence orbitals (spin
/// orbitals), eta = total valence electrons; independent of basis set.
struct ActiveSpaceCount {
    std::size_t m_spin_orbitals;
    std::size_t n_electrons;
};
ActiveSpaceCount count_active_qubits(const MolecularFormula& formula);

/// Freeze the lowest n_core spatial orbitals into the core energy using
/// the standard mean-field embedding (orbitals must be energy-ordered):
///   E_core += 2 sum_c h_cc + sum_cd [2(cc|dd) - (cd|dc)]
///   h'_pq   = h_pq + sum_c [2(pq|cc) - (pc|cq)]
MolecularIntegrals active_space_reduce(const MolecularIntegrals& ints, std::size_t n_core);

/// The 20 homodipeptides Xaa-Xaa, formula = 2 x (amino acid) - H2O.
struct RosterEntry {
    std::string label;
    MolecularFormula formula;
};
const std::vector<RosterEntry>& dipeptide_roster();

/// Parse a roster file: one "label formula" pair per non-comment line.
std::vector<RosterEntry> parse_roster(const std::string& text);

}  // namespace qpept
