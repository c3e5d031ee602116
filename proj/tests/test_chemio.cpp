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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "qpept/chemio.hpp"
#include "qpept/errors.hpp"

using namespace qpept;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(QPEPT_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("formula parsing") {
    MolecularFormula f = MolecularFormula::parse("C4H8N2O3");
    CHECK(f.count("C") == 4);
    CHECK(f.count("H") == 8);
    CHECK(f.count("N") == 2);
    CHECK(f.count("O") == 3);
    CHECK(f.count("S") == 0);

    CHECK(MolecularFormula::parse("H2").count("H") == 2);
    CHECK_THROWS_AS(MolecularFormula::parse("h2"), ParseError);
    CHECK_THROWS_AS(MolecularFormula::parse(""), ParseError);
}

TEST_CASE("count_qubits: minimal examples") {
    const auto& cat = BasisCatalog::builtin();
    auto sto3g = cat.entry("sto-3g");

    CHECK(count_qubits(MolecularFormula::parse("H2"), sto3g) == 4);
    CHECK(count_qubits(MolecularFormula::parse("C4H8N2O3"), sto3g) == 106);

    // strictly increasing with basis size
    auto glygly = MolecularFormula::parse("C4H8N2O3");
    std::size_t prev = 0;
    for (const std::string basis : {"sto-3g", "6-31g", "cc-pvdz", "cc-pvtz"}) {
        std::size_t q = count_qubits(glygly, cat.entry(basis));
        CHECK(q > prev);
        prev = q;
    }
}

TEST_CASE("count_qubits: unknown element") {
    const auto entry = BasisCatalog::builtin().entry("sto-3g");
    CHECK_THROWS_AS(count_qubits(MolecularFormula::parse("XeF4"), entry), CatalogError);
}

TEST_CASE("count_active_qubits: abstract endpoints") {
    auto gly = count_active_qubits(MolecularFormula::parse("C4H8N2O3"));
    CHECK(gly.m_spin_orbitals == 88);
    CHECK(gly.n_electrons == 52);

    auto trp = count_active_qubits(MolecularFormula::parse("C22H22N4O3"));
    CHECK(trp.m_spin_orbitals == 276);

    auto h2 = count_active_qubits(MolecularFormula::parse("H2"));
    CHECK(h2.m_spin_orbitals == 4);
    CHECK(h2.n_electrons == 2);
}

TEST_CASE("active-space M never exceeds the minimal-basis qubit count") {
    const auto& cat = BasisCatalog::builtin();
    for (const auto& entry : dipeptide_roster()) {
        auto active = count_active_qubits(entry.formula);
        for (const auto& basis : cat.basis_names()) {
            std::size_t full = count_qubits(entry.formula, cat.entry(basis));
            CHECK(active.m_spin_orbitals <= full);
        }
    }
}

TEST_CASE("active-space M is basis independent by construction") {
    // count_active_qubits never consults a basis entry; spot-check stability
    // across config overrides of every catalog basis.
    auto f = MolecularFormula::parse("C6H12N2O3S2");
    auto before = count_active_qubits(f);
    BasisCatalog overridden = BasisCatalog::with_overrides("sto-3g S 25\ncc-pvtz H 99\n");
    (void)overridden;
    auto after = count_active_qubits(f);
    CHECK(before.m_spin_orbitals == after.m_spin_orbitals);
    CHECK(before.n_electrons == after.n_electrons);
}

TEST_CASE("dipeptide roster spans 88..276") {
    std::size_t mn = SIZE_MAX, mx = 0;
    for (const auto& entry : dipeptide_roster()) {
        auto a = count_active_qubits(entry.formula);
        mn = std::min(mn, a.m_spin_orbitals);
        mx = std::max(mx, a.m_spin_orbitals);
    }
    CHECK(mn == 88);
    CHECK(mx == 276);
    CHECK(dipeptide_roster().size() == 20);
}

TEST_CASE("parse_integral_file: minimal constructed file") {
    const std::string text =
        "&FCI NORB=2,NELEC=2,MS2=0,\n"
        "&END\n"
        " 0.5 0 0 0 0\n";
    MolecularIntegrals ints = parse_integral_file(text);
    CHECK(ints.m_spatial == 2);
    CHECK(ints.n_electrons == 2);
    CHECK(ints.e_core == doctest::Approx(0.5));
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) CHECK(ints.one_body(p, q) == 0.0);
}

TEST_CASE("parse_integral_file: one-electron symmetry fill") {
    const std::string text =
        "&FCI NORB=2,NELEC=2,MS2=0,\n"
        "&END\n"
        " 0.25 1 2 0 0\n";
    MolecularIntegrals ints = parse_integral_file(text);
    CHECK(ints.one_body(0, 1) == doctest::Approx(0.25));
    CHECK(ints.one_body(1, 0) == doctest::Approx(0.25));
}

TEST_CASE("parse_integral_file: all eight V images populated") {
    const std::string text =
        "&FCI NORB=3,NELEC=2,MS2=0,\n"
        "&END\n"
        " 0.125 1 2 3 1\n";
    MolecularIntegrals ints = parse_integral_file(text);
    const std::size_t p = 0, q = 1, r = 2, s = 0;
    CHECK(ints.two_body(p, q, r, s) == doctest::Approx(0.125));
    CHECK(ints.two_body(q, p, r, s) == doctest::Approx(0.125));
    CHECK(ints.two_body(p, q, s, r) == doctest::Approx(0.125));
    CHECK(ints.two_body(q, p, s, r) == doctest::Approx(0.125));
    CHECK(ints.two_body(r, s, p, q) == doctest::Approx(0.125));
    CHECK(ints.two_body(s, r, p, q) == doctest::Approx(0.125));
    CHECK(ints.two_body(r, s, q, p) == doctest::Approx(0.125));
    CHECK(ints.two_body(s, r, q, p) == doctest::Approx(0.125));
}

TEST_CASE("parser round trip is value-exact") {
    for (const std::string name :
         {"h2_sto3g.fcidump", "h2_631g.fcidump", "lih_sto3g.fcidump",
          "toy_2orb.fcidump", "toy_3orb.fcidump"}) {
        MolecularIntegrals a = parse_integral_path(fixture_path(name));
        std::string text = serialize_integrals(a);
        MolecularIntegrals b = parse_integral_file(text);
        REQUIRE(a.m_spatial == b.m_spatial);
        CHECK(a.n_electrons == b.n_electrons);
        CHECK(a.e_core == doctest::Approx(b.e_core).epsilon(1e-14));
        double max_dh = 0.0, max_dv = 0.0;
        for (std::size_t i = 0; i < a.h.size(); ++i)
            max_dh = std::max(max_dh, std::abs(a.h[i] - b.h[i]));
        for (std::size_t i = 0; i < a.v.size(); ++i)
            max_dv = std::max(max_dv, std::abs(a.v[i] - b.v[i]));
        CHECK(max_dh < 1e-12);
        CHECK(max_dv < 1e-12);
        // serialize(parse(serialize(x))) is byte-identical
        CHECK(serialize_integrals(b) == text);
    }
}

TEST_CASE("permutation symmetry holds on every stored entry after parsing") {
    MolecularIntegrals ints = parse_integral_path(fixture_path("lih_sto3g.fcidump"));
    const std::size_t m = ints.m_spatial;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t s = 0; s < m; ++s) {
                    const double v = ints.two_body(p, q, r, s);
                    CHECK(ints.two_body(q, p, r, s) == v);
                    CHECK(ints.two_body(p, q, s, r) == v);
                    CHECK(ints.two_body(r, s, p, q) == v);
                }
}

TEST_CASE("malformed inputs raise the documented error classes") {
    auto load = [&](const std::string& name) {
        return parse_integral_path(fixture_path("malformed/" + name));
    };
    CHECK_THROWS_AS(load("bad_float.fcidump"), ParseError);
    CHECK_THROWS_AS(load("missing_fields.fcidump"), ParseError);
    CHECK_THROWS_AS(load("index_range.fcidump"), ParseError);
    CHECK_THROWS_AS(load("negative_index.fcidump"), ParseError);
    CHECK_THROWS_AS(load("no_norb.fcidump"), ParseError);
    CHECK_THROWS_AS(load("no_nelec.fcidump"), ParseError);
    CHECK_THROWS_AS(load("extra_tokens.fcidump"), ParseError);
    CHECK_THROWS_AS(load("bad_index_pattern.fcidump"), ParseError);
    CHECK_THROWS_AS(load("nelec_domain.fcidump"), DomainError);
    CHECK_THROWS_AS(load("conflict_dup.fcidump"), IntegrityError);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_integral_file(
            "&FCI NORB=2,NELEC=2,MS2=0,\n"
            "&END\n"
            " 0.5 1 1 0 0\n"
            " zzz 1 1 0 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("active_space_reduce: n_core = 0 is the identity") {
    MolecularIntegrals ints = parse_integral_path(fixture_path("toy_3orb.fcidump"));
    MolecularIntegrals out = active_space_reduce(ints, 0);
    CHECK(out.h == ints.h);
    CHECK(out.v == ints.v);
    CHECK(out.e_core == ints.e_core);
}

TEST_CASE("active_space_reduce: V = 0 leaves exactly 2 h_00 in the core") {
    MolecularIntegrals ints(2, 4);
    ints.set_one_body(0, 0, -1.5);
    ints.set_one_body(1, 1, -0.25);
    MolecularIntegrals out = active_space_reduce(ints, 1);
    CHECK(out.m_spatial == 1);
    CHECK(out.n_electrons == 2);
    CHECK(out.e_core == doctest::Approx(-3.0));
    CHECK(out.one_body(0, 0) == doctest::Approx(-0.25));
}

TEST_CASE("active_space_reduce rejects oversized cores") {
    MolecularIntegrals ints(3, 2);
    CHECK_THROWS_AS(active_space_reduce(ints, 2), DomainError);
}

TEST_CASE("basis catalog overrides") {
    BasisCatalog cat = BasisCatalog::with_overrides_file(fixture_path("rosters/override.cfg"));
    auto entry = cat.entry("cc-pvtz(-f)");
    CHECK(entry.spatial_functions.at("H") == 9);
    CHECK(entry.spatial_functions.at("C") == 23);
    CHECK_THROWS_AS(BasisCatalog::with_overrides("sto-3g H\n"), ParseError);
}

TEST_CASE("roster parsing") {
    auto roster = parse_roster(slurp(fixture_path("rosters/small.txt")));
    REQUIRE(roster.size() == 3);
    CHECK(roster[0].label == "H2");
    CHECK(roster[1].formula.count("O") == 1);
    CHECK_THROWS_AS(parse_roster("label_only\n"), ParseError);
}
