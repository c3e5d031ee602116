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

#include "qpept/chemio.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qpept/errors.hpp"

namespace qpept {

// ---------------------------------------------------------------------------
// MolecularFormula
// ---------------------------------------------------------------------------

MolecularFormula::MolecularFormula(std::map<std::string, int> counts)
    : counts_(std::move(counts)) {
    for (const auto& [el, n] : counts_) {
        if (el.empty() || !std::isupper(static_cast<unsigned char>(el[0])))
            throw DomainError("invalid element symbol '" + el + "'");
        if (n <= 0)
            throw DomainError("element count for " + el + " must be positive");
    }
}

MolecularFormula MolecularFormula::parse(const std::string& text) {
    std::map<std::string, int> counts;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!std::isupper(static_cast<unsigned char>(text[i])))
            throw ParseError("bad formula '" + text + "' at position " + std::to_string(i));
        std::string el(1, text[i++]);
        while (i < text.size() && std::islower(static_cast<unsigned char>(text[i])))
            el += text[i++];
        int n = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            n = n * 10 + (text[i++] - '0');
        if (n == 0) n = 1;
        counts[el] += n;
    }
    if (counts.empty()) throw ParseError("empty formula");
    return MolecularFormula(std::move(counts));
}

int MolecularFormula::count(const std::string& element) const {
    auto it = counts_.find(element);
    return it == counts_.end() ? 0 : it->second;
}

std::string MolecularFormula::str() const {
    std::ostringstream os;
    for (const auto& [el, n] : counts_) {
        os << el;
        if (n > 1) os << n;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// BasisCatalog
// ---------------------------------------------------------------------------

namespace {

// Basis-independent per-element accounting (spherical-harmonic shells).
const std::map<std::string, int> kValenceOrbitals = {
    {"H", 1}, {"C", 4}, {"N", 4}, {"O", 4}, {"S", 4}};
const std::map<std::string, int> kCoreOrbitals = {
    {"H", 0}, {"C", 1}, {"N", 1}, {"O", 1}, {"S", 5}};
const std::map<std::string, int> kValenceElectrons = {
    {"H", 1}, {"C", 4}, {"N", 5}, {"O", 6}, {"S", 6}};

// Spatial function counts per element for the built-in basis sets
// (spherical d/f shells: 5 and 7 functions).
std::map<std::string, std::map<std::string, int>> builtin_spatial() {
    return {
        {"sto-3g", {{"H", 1}, {"C", 5}, {"N", 5}, {"O", 5}, {"S", 9}}},
        {"sto-6g", {{"H", 1}, {"C", 5}, {"N", 5}, {"O", 5}, {"S", 9}}},
        {"6-31g", {{"H", 2}, {"C", 9}, {"N", 9}, {"O", 9}, {"S", 13}}},
        {"cc-pvdz", {{"H", 5}, {"C", 14}, {"N", 14}, {"O", 14}, {"S", 18}}},
        {"cc-pvtz", {{"H", 14}, {"C", 30}, {"N", 30}, {"O", 30}, {"S", 34}}},
        // The "(-f)" truncation convention is ambiguous in the wild; these
        // defaults drop f from heavy atoms and d from hydrogen, and the
        // counts are overridable from a config file.
        {"cc-pvtz(-f)", {{"H", 9}, {"C", 23}, {"N", 23}, {"O", 23}, {"S", 27}}},
    };
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

const BasisCatalog& BasisCatalog::builtin() {
    static BasisCatalog cat = [] {
        BasisCatalog c;
        c.spatial_ = builtin_spatial();
        return c;
    }();
    return cat;
}

BasisCatalog BasisCatalog::with_overrides(const std::string& config_text) {
    BasisCatalog cat = builtin();
    std::istringstream is(config_text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::string trimmed = line;
        if (auto pos = trimmed.find('#'); pos != std::string::npos)
            trimmed.resize(pos);
        std::istringstream ls(trimmed);
        std::string basis, element;
        long count;
        if (!(ls >> basis)) continue;  // blank / comment line
        if (!(ls >> element >> count))
            throw ParseError("expected '<basis> <element> <count>'", line_no);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
        if (count < 0) throw ParseError("negative function count", line_no);
        cat.spatial_[lower(basis)][element] = static_cast<int>(count);
        cat.version_++;
    }
    return cat;
}

BasisCatalog BasisCatalog::with_overrides_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open basis config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return with_overrides(buf.str());
}

bool BasisCatalog::has_basis(const std::string& basis_name) const {
    return spatial_.count(lower(basis_name)) != 0;
}

std::vector<std::string> BasisCatalog::basis_names() const {
    std::vector<std::string> names;
    names.reserve(spatial_.size());
    for (const auto& [name, table] : spatial_) names.push_back(name);
    return names;
}

BasisCatalogEntry BasisCatalog::entry(const std::string& basis_name) const {
    auto it = spatial_.find(lower(basis_name));
    if (it == spatial_.end())
        throw CatalogError("unknown basis set '" + basis_name + "'");
    BasisCatalogEntry e;
    e.basis_name = it->first;
    e.spatial_functions = it->second;
    e.valence_orbitals = kValenceOrbitals;
    e.core_orbitals = kCoreOrbitals;
    e.valence_electrons = kValenceElectrons;
    return e;
}

// ---------------------------------------------------------------------------
// MolecularIntegrals and the FCIDUMP-style format
// ---------------------------------------------------------------------------

MolecularIntegrals::MolecularIntegrals(std::size_t m, std::size_t eta)
    : m_spatial(m),
      n_electrons(eta),
      h(m * m, 0.0),
      v(m * m * m * m, 0.0) {
    if (eta > 2 * m)
        throw DomainError("electron count " + std::to_string(eta) +
                          " exceeds 2 x " + std::to_string(m) + " orbitals");
}

void MolecularIntegrals::set_one_body(std::size_t p, std::size_t q, double val) {
    h[p * m_spatial + q] = val;
    h[q * m_spatial + p] = val;
}

void MolecularIntegrals::set_two_body(std::size_t p, std::size_t q, std::size_t r,
                                      std::size_t s, double val) {
    const std::size_t m = m_spatial;
    const std::array<std::array<std::size_t, 4>, 8> images = {{
        {p, q, r, s}, {q, p, r, s}, {p, q, s, r}, {q, p, s, r},
        {r, s, p, q}, {s, r, p, q}, {r, s, q, p}, {s, r, q, p},
    }};
    for (const auto& im : images)
        v[((im[0] * m + im[1]) * m + im[2]) * m + im[3]] = val;
}

namespace {

struct RawEntry {
    double value;
    long i, j, k, l;
    std::size_t line;
};

long parse_header_int(const std::string& header, const std::string& key,
                      std::size_t line_no) {
    auto pos = header.find(key + "=");
    if (pos == std::string::npos)
        throw ParseError("header is missing " + key, line_no);
    pos += key.size() + 1;
    std::size_t end = pos;
    while (end < header.size() &&
           (std::isdigit(static_cast<unsigned char>(header[end])) ||
            header[end] == '-' || header[end] == '+'))
        ++end;
    if (end == pos) throw ParseError("header value for " + key + " is empty", line_no);
    return std::stol(header.substr(pos, end - pos));
}

}  // namespace

MolecularIntegrals parse_integral_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;

    // header: everything up to &END (or a bare "/")
    std::string header;
    bool header_done = false;
    while (std::getline(is, line)) {
        ++line_no;
        header += line + " ";
        if (line.find("&END") != std::string::npos ||
            line.find("/") != std::string::npos) {
            header_done = true;
            break;
        }
    }
    if (!header_done) throw ParseError("unterminated header (no &END)", line_no);

    const long norb = parse_header_int(header, "NORB", line_no);
    const long nelec = parse_header_int(header, "NELEC", line_no);
    long ms2 = 0;
    if (header.find("MS2=") != std::string::npos)
        ms2 = parse_header_int(header, "MS2", line_no);
    if (norb <= 0) throw ParseError("NORB must be positive", line_no);
    if (nelec < 0) throw ParseError("NELEC must be nonnegative", line_no);
    if (nelec > 2 * norb)
        throw DomainError("NELEC=" + std::to_string(nelec) + " exceeds 2*NORB=" +
                          std::to_string(2 * norb));

    std::vector<RawEntry> entries;
    while (std::getline(is, line)) {
        ++line_no;
        // skip blank lines
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string vtok;
        RawEntry e{};
        e.line = line_no;
        if (!(ls >> vtok)) throw ParseError("empty entry", line_no);
        // Fortran-style D exponents
        for (auto& c : vtok)
            if (c == 'D' || c == 'd') c = 'e';
        try {
            std::size_t used = 0;
            e.value = std::stod(vtok, &used);
            if (used != vtok.size()) throw std::invalid_argument(vtok);
        } catch (const std::exception&) {
            throw ParseError("bad value token '" + vtok + "'", line_no);
        }
        auto read_index = [&](long& out) {
            std::string t;
            if (!(ls >> t)) throw ParseError("expected 4 orbital indices", line_no);
            try {
                std::size_t used = 0;
                out = std::stol(t, &used);
                if (used != t.size()) throw std::invalid_argument(t);
            } catch (const std::exception&) {
                throw ParseError("bad index token '" + t + "'", line_no);
            }
            if (out < 0) throw ParseError("negative orbital index", line_no);
            if (out > norb)
                throw ParseError("orbital index " + std::to_string(out) +
                                 " exceeds NORB=" + std::to_string(norb), line_no);
        };
        read_index(e.i);
        read_index(e.j);
        read_index(e.k);
        read_index(e.l);
        std::string extra;
        if (ls >> extra)
            throw ParseError("trailing token '" + extra + "'", line_no);
        entries.push_back(e);
    }

    MolecularIntegrals ints(static_cast<std::size_t>(norb),
                            static_cast<std::size_t>(nelec));
    ints.ms2 = static_cast<int>(ms2);

    constexpr double kDupTol = 1e-10;
    bool have_core = false;
    for (const auto& e : entries) {
        const bool zi = e.i == 0, zj = e.j == 0, zk = e.k == 0, zl = e.l == 0;
        if (zi && zj && zk && zl) {
            if (have_core && std::abs(ints.e_core - e.value) > kDupTol)
                throw IntegrityError("conflicting core energy entries (line " +
                                     std::to_string(e.line) + ")");
            ints.e_core = e.value;
            have_core = true;
        } else if (!zi && !zj && zk && zl) {
            const std::size_t p = e.i - 1, q = e.j - 1;
            const double prev = ints.one_body(p, q);
            if (prev != 0.0 && std::abs(prev - e.value) > kDupTol)
                throw IntegrityError("conflicting h(" + std::to_string(e.i) + "," +
                                     std::to_string(e.j) + ") entries (line " +
                                     std::to_string(e.line) + ")");
            ints.set_one_body(p, q, e.value);
        } else if (!zi && !zj && !zk && !zl) {
            const std::size_t p = e.i - 1, q = e.j - 1, r = e.k - 1, s = e.l - 1;
            const double prev = ints.two_body(p, q, r, s);
            if (prev != 0.0 && std::abs(prev - e.value) > kDupTol)
                throw IntegrityError("conflicting V entries (line " +
                                     std::to_string(e.line) + ")");
            ints.set_two_body(p, q, r, s, e.value);
        } else {
            throw ParseError("invalid index pattern (" + std::to_string(e.i) + " " +
                             std::to_string(e.j) + " " + std::to_string(e.k) + " " +
                             std::to_string(e.l) + ")", e.line);
        }
    }
    return ints;
}

MolecularIntegrals parse_integral_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open integral file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_integral_file(buf.str());
}

std::string serialize_integrals(const MolecularIntegrals& ints) {
    const std::size_t m = ints.m_spatial;
    std::ostringstream os;
    os << "&FCI NORB=" << m << ",NELEC=" << ints.n_electrons << ",MS2=" << ints.ms2
       << ",\n ORBSYM=";
    for (std::size_t i = 0; i < m; ++i) os << "1,";
    os << "\n ISYM=1,\n&END\n";

    char buf[128];
    auto emit = [&](double val, std::size_t i, std::size_t j, std::size_t k,
                    std::size_t l) {
        std::snprintf(buf, sizeof buf, "% .16E %4zu %4zu %4zu %4zu\n", val, i, j, k, l);
        os << buf;
    };

    // canonical upper-triangle representatives: p>=q, r>=s, (pq)>=(rs)
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q <= p; ++q)
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t s = 0; s <= r; ++s) {
                    const std::size_t pq = p * (p + 1) / 2 + q;
                    const std::size_t rs = r * (r + 1) / 2 + s;
                    if (pq < rs) continue;
                    const double val = ints.two_body(p, q, r, s);
                    if (val != 0.0) emit(val, p + 1, q + 1, r + 1, s + 1);
                }
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q <= p; ++q) {
            const double val = ints.one_body(p, q);
            if (val != 0.0) emit(val, p + 1, q + 1, 0, 0);
        }
    emit(ints.e_core, 0, 0, 0, 0);
    return os.str();
}

// ---------------------------------------------------------------------------
// Qubit accounting
// ---------------------------------------------------------------------------

std::size_t count_qubits(const MolecularFormula& formula, const BasisCatalogEntry& basis) {
    std::size_t functions = 0;
    for (const auto& [el, n] : formula.counts()) {
        auto it = basis.spatial_functions.find(el);
        if (it == basis.spatial_functions.end())
            throw CatalogError("element '" + el + "' not in basis catalog for " +
                               basis.basis_name);
        functions += static_cast<std::size_t>(n) * it->second;
    }
    return 2 * functions;
}

ActiveSpaceCount count_active_qubits(const MolecularFormula& formula) {
    std::size_t orbitals = 0, electrons = 0;
    for (const auto& [el, n] : formula.counts()) {
        auto vo = kValenceOrbitals.find(el);
        auto ve = kValenceElectrons.find(el);
        if (vo == kValenceOrbitals.end() || ve == kValenceElectrons.end())
            throw CatalogError("element '" + el + "' not in valence catalog");
        orbitals += static_cast<std::size_t>(n) * vo->second;
        electrons += static_cast<std::size_t>(n) * ve->second;
    }
    return {2 * orbitals, electrons};
}

MolecularIntegrals active_space_reduce(const MolecularIntegrals& ints, std::size_t n_core) {
    if (2 * n_core > ints.n_electrons)
        throw DomainError("cannot freeze " + std::to_string(n_core) +
                          " core orbitals with only " +
                          std::to_string(ints.n_electrons) + " electrons");
    if (n_core > ints.m_spatial)
        throw DomainError("n_core exceeds orbital count");
    if (n_core == 0) return ints;

    const std::size_t m = ints.m_spatial;
    const std::size_t mr = m - n_core;
    MolecularIntegrals out(mr, ints.n_electrons - 2 * n_core);
    out.ms2 = ints.ms2;

    double e_core = ints.e_core;
    for (std::size_t c = 0; c < n_core; ++c) e_core += 2.0 * ints.one_body(c, c);
    for (std::size_t c = 0; c < n_core; ++c)
        for (std::size_t d = 0; d < n_core; ++d)
            e_core += 2.0 * ints.two_body(c, c, d, d) - ints.two_body(c, d, d, c);
    out.e_core = e_core;

    for (std::size_t p = 0; p < mr; ++p)
        for (std::size_t q = 0; q <= p; ++q) {
            double val = ints.one_body(p + n_core, q + n_core);
            for (std::size_t c = 0; c < n_core; ++c)
                val += 2.0 * ints.two_body(p + n_core, q + n_core, c, c) -
                       ints.two_body(p + n_core, c, c, q + n_core);
            out.set_one_body(p, q, val);
        }

    for (std::size_t p = 0; p < mr; ++p)
        for (std::size_t q = 0; q < mr; ++q)
            for (std::size_t r = 0; r < mr; ++r)
                for (std::size_t s = 0; s < mr; ++s)
                    out.v[((p * mr + q) * mr + r) * mr + s] =
                        ints.two_body(p + n_core, q + n_core, r + n_core, s + n_core);
    return out;
}

// ---------------------------------------------------------------------------
// Rosters
// ---------------------------------------------------------------------------

const std::vector<RosterEntry>& dipeptide_roster() {
    static const std::vector<RosterEntry> roster = [] {
        const std::vector<std::pair<std::string, std::string>> raw = {
            {"Gly-Gly", "C4H8N2O3"},   {"Ala-Ala", "C6H12N2O3"},
            {"Ser-Ser", "C6H12N2O5"},  {"Cys-Cys", "C6H12N2O3S2"},
            {"Thr-Thr", "C8H16N2O5"},  {"Pro-Pro", "C10H16N2O3"},
            {"Val-Val", "C10H20N2O3"}, {"Asn-Asn", "C8H14N4O5"},
            {"Asp-Asp", "C8H12N2O7"},  {"Gln-Gln", "C10H18N4O5"},
            {"Glu-Glu", "C10H16N2O7"}, {"Met-Met", "C10H20N2O3S2"},
            {"Ile-Ile", "C12H24N2O3"}, {"Leu-Leu", "C12H24N2O3"},
            {"Lys-Lys", "C12H26N4O3"}, {"His-His", "C12H16N6O3"},
            {"Arg-Arg", "C12H26N8O3"}, {"Phe-Phe", "C18H20N2O3"},
            {"Tyr-Tyr", "C18H20N2O5"}, {"Trp-Trp", "C22H22N4O3"},
        };
        std::vector<RosterEntry> r;
        r.reserve(raw.size());
        for (const auto& [label, formula] : raw)
            r.push_back({label, MolecularFormula::parse(formula)});
        return r;
    }();
    return roster;
}

std::vector<RosterEntry> parse_roster(const std::string& text) {
    std::vector<RosterEntry> roster;
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        std::string label, formula;
        if (!(ls >> label)) continue;
        if (!(ls >> formula))
            throw ParseError("roster line needs '<label> <formula>'", line_no);
        try {
            roster.push_back({label, MolecularFormula::parse(formula)});
        } catch (const ParseError& e) {
            throw ParseError(std::string("bad formula for '" + label + "': ") + e.what(),
                             line_no);
        }
    }
    return roster;
}

}  // namespace qpept
