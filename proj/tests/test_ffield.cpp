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
#include <random>

#include "qpept/errors.hpp"
#include "qpept/ffield.hpp"

using namespace qpept;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(QPEPT_FIXTURE_DIR) + "/" + name;
}

FFParameters rich_parameters() {
    FFParameters p;
    p.bonds = {{0, 1, 300.0, 1.1}, {1, 2, 250.0, 1.4}};
    p.angles = {{0, 1, 2, 60.0, 1.9}};
    p.torsions = {{0, 1, 2, 3, {{1, 1.5, 0.3}, {3, 0.8, -0.4}}}};
    p.charges = {0.3, -0.2, -0.25, 0.15};
    p.coulomb_pairs = {{0, 3}};
    p.lj_pairs = {{0, 3, 0.12, 3.1}};
    return p;
}

std::vector<Vec3> rich_geometry() {
    return {{0.1, 0.0, 0.2}, {1.2, 0.1, -0.1}, {1.9, 1.3, 0.4}, {3.1, 1.2, 1.2}};
}

}  // namespace

TEST_CASE("two opposite unit charges at distance 1") {
    FFParameters p;
    p.charges = {1.0, -1.0};
    p.coulomb_pairs = {{0, 1}};
    std::vector<Vec3> coords = {{0, 0, 0}, {1, 0, 0}};
    CHECK(evaluate_energy(p, coords) ==
          doctest::Approx(-p.coulomb_constant).epsilon(1e-12));
}

TEST_CASE("LJ minimum at r = 2^(1/6) sigma") {
    FFParameters p;
    const double eps = 0.21, sigma = 3.4;
    p.lj_pairs = {{0, 1, eps, sigma}};
    const double rmin = std::pow(2.0, 1.0 / 6.0) * sigma;
    std::vector<Vec3> coords = {{0, 0, 0}, {rmin, 0, 0}};
    CHECK(evaluate_energy(p, coords) == doctest::Approx(-eps).epsilon(1e-12));

    // force vanishes at the minimum (central difference)
    const double h = 1e-6;
    std::vector<Vec3> plus = coords, minus = coords;
    plus[1][0] += h;
    minus[1][0] -= h;
    const double fd = (evaluate_energy(p, plus) - evaluate_energy(p, minus)) / (2 * h);
    CHECK(std::abs(fd) < 1e-6);
}

TEST_CASE("bond at its equilibrium length has zero energy") {
    FFParameters p;
    p.bonds = {{0, 1, 450.0, 1.523}};
    std::vector<Vec3> coords = {{0, 0, 0}, {1.523, 0, 0}};
    CHECK(evaluate_energy(p, coords) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("coincident nonbonded atoms raise the singularity error") {
    FFParameters p;
    p.charges = {1.0, 1.0};
    p.coulomb_pairs = {{0, 1}};
    std::vector<Vec3> coords = {{0, 0, 0}, {0, 0, 0}};
    CHECK_THROWS_AS(evaluate_energy(p, coords), DomainError);
}

TEST_CASE("invalid term indices are rejected") {
    FFParameters p;
    p.bonds = {{0, 5, 100.0, 1.0}};
    std::vector<Vec3> coords = {{0, 0, 0}, {1, 0, 0}};
    CHECK_THROWS_AS(evaluate_energy(p, coords), DomainError);
}

TEST_CASE("analytic gradient matches central differences") {
    FFParameters p = rich_parameters();
    std::vector<Vec3> coords = rich_geometry();

    std::vector<Vec3> grad;
    evaluate_energy_gradient(p, coords, grad);

    const double h = 1e-5;
    for (std::size_t a = 0; a < coords.size(); ++a) {
        for (int c = 0; c < 3; ++c) {
            std::vector<Vec3> plus = coords, minus = coords;
            plus[a][c] += h;
            minus[a][c] -= h;
            const double fd =
                (evaluate_energy(p, plus) - evaluate_energy(p, minus)) / (2 * h);
            const double scale = std::max(1.0, std::abs(fd));
            CHECK(std::abs(grad[a][c] - fd) / scale < 1e-5);
        }
    }
}

TEST_CASE("gradient check across random geometries") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> jit(-0.25, 0.25);
    FFParameters p = rich_parameters();
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Vec3> coords = rich_geometry();
        for (auto& r : coords)
            for (auto& x : r) x += jit(rng);
        std::vector<Vec3> grad;
        evaluate_energy_gradient(p, coords, grad);
        const double h = 1e-5;
        for (std::size_t a = 0; a < coords.size(); ++a)
            for (int c = 0; c < 3; ++c) {
                std::vector<Vec3> plus = coords, minus = coords;
                plus[a][c] += h;
                minus[a][c] -= h;
                const double fd =
                    (evaluate_energy(p, plus) - evaluate_energy(p, minus)) / (2 * h);
                const double scale = std::max(1.0, std::abs(fd));
                CHECK(std::abs(grad[a][c] - fd) / scale < 1e-5);
            }
    }
}

TEST_CASE("energy is invariant under global translation and rotation") {
    FFParameters p = rich_parameters();
    std::vector<Vec3> coords = rich_geometry();
    const double e0 = evaluate_energy(p, coords);

    std::vector<Vec3> shifted = coords;
    for (auto& r : shifted) {
        r[0] += 2.3;
        r[1] -= 1.1;
        r[2] += 0.7;
    }
    CHECK(evaluate_energy(p, shifted) == doctest::Approx(e0).epsilon(1e-9));

    const double a = 0.83;
    std::vector<Vec3> rotated = coords;
    for (auto& r : rotated) {
        const double x = r[0] * std::cos(a) - r[1] * std::sin(a);
        const double y = r[0] * std::sin(a) + r[1] * std::cos(a);
        r[0] = x;
        r[1] = y;
    }
    CHECK(evaluate_energy(p, rotated) == doctest::Approx(e0).epsilon(1e-9));
}

TEST_CASE("dihedral of a planar cis arrangement is zero") {
    CHECK(dihedral_angle({0, 1, 0}, {0, 0, 0}, {1, 0, 0}, {1, 1, 0}) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(dihedral_angle({0, 1, 0}, {0, 0, 0}, {1, 0, 0}, {1, -1, 0})) ==
          doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("fit recovers an exact three-fold torsion") {
    TorsionScan scan = parse_scan_path(fixture_path("scans/scan_3fold.csv"));
    TorsionFit fit = fit_torsion(scan, 3);
    REQUIRE(fit.terms.size() == 3);
    CHECK(fit.terms[2].n == 3);
    CHECK(fit.terms[2].v == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(std::abs(fit.terms[2].omega0) < 1e-6);
    CHECK(fit.terms[0].v < 1e-8);
    CHECK(fit.terms[1].v < 1e-8);
    CHECK(fit.rms_residual < 1e-10);
}

TEST_CASE("fit recovers a noisy two-term potential") {
    TorsionScan scan = parse_scan_path(fixture_path("scans/scan_two_term_noisy.csv"));
    TorsionFit fit = fit_torsion(scan, 2);
    REQUIRE(fit.terms.size() == 2);
    CHECK(fit.terms[0].v == doctest::Approx(1.5).epsilon(1e-2));
    CHECK(fit.terms[0].omega0 == doctest::Approx(M_PI / 3).epsilon(1e-2));
    CHECK(fit.terms[1].v == doctest::Approx(0.7).epsilon(1e-2));
    CHECK(std::abs(fit.terms[1].omega0) < 1e-2);
}

TEST_CASE("flat scans fit to zero barriers") {
    TorsionScan scan = parse_scan_path(fixture_path("scans/scan_flat.csv"));
    TorsionFit fit = fit_torsion(scan, 2);
    for (const auto& t : fit.terms) CHECK(t.v < 1e-8);
    CHECK(fit.constant == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("rank deficiency is reported") {
    TorsionScan scan = parse_scan_path(fixture_path("scans/scan_2pt.csv"));
    CHECK_THROWS_AS(fit_torsion(scan, 3), FitError);

    // repeated angles are rank deficient even with enough rows
    TorsionScan degenerate;
    degenerate.angles.assign(9, 0.5);
    degenerate.energies.assign(9, 1.0);
    CHECK_THROWS_AS(fit_torsion(degenerate, 2), FitError);
}

TEST_CASE("fit residual is non-increasing in n_max") {
    TorsionScan scan = parse_scan_path(fixture_path("scans/scan_two_term_noisy.csv"));
    double prev = 1e9;
    for (int n = 1; n <= 4; ++n) {
        TorsionFit fit = fit_torsion(scan, n);
        CHECK(fit.rms_residual <= prev + 1e-15);
        prev = fit.rms_residual;
    }
}

TEST_CASE("fit round trip through the generating model") {
    // draw a potential, sample it, refit, compare term by term
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> vdist(0.2, 2.0), phase(-1.2, 1.2);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<FFParameters::TorsionTerm> truth;
        for (int n = 1; n <= 3; ++n) truth.push_back({n, vdist(rng), phase(rng)});
        TorsionScan scan;
        for (int k = 0; k < 30; ++k) {
            const double w = -M_PI + 2 * M_PI * k / 30.0;
            double e = 0.35;
            for (const auto& t : truth) e += 0.5 * t.v * (1 + std::cos(t.n * w - t.omega0));
            scan.angles.push_back(w);
            scan.energies.push_back(e);
        }
        TorsionFit fit = fit_torsion(scan, 3);
        for (int n = 1; n <= 3; ++n) {
            CHECK(fit.terms[n - 1].v == doctest::Approx(truth[n - 1].v).epsilon(1e-8));
            CHECK(fit.terms[n - 1].omega0 ==
                  doctest::Approx(truth[n - 1].omega0).epsilon(1e-8));
        }
    }
}

TEST_CASE("scan parser reads units and validates ranges") {
    TorsionScan scan = parse_scan(
        "# units: hartree\n"
        "angle_rad,energy\n"
        "0.0,1.0\n"
        "1.0,2.0\n");
    CHECK(scan.unit == "hartree");
    CHECK_THROWS_AS(parse_scan("angle_rad,energy\n9.0,1.0\n0.0,1.0\n"), ParseError);
    CHECK_THROWS_AS(parse_scan("angle_rad,energy\n0.0,abc\n1.0,1.0\n"), ParseError);
}

TEST_CASE("fit CSV keeps significant rows and the residual comment") {
    TorsionScan scan = parse_scan_path(fixture_path("scans/scan_3fold.csv"));
    TorsionFit fit = fit_torsion(scan, 3);
    const std::string csv = torsion_fit_csv(fit);
    CHECK(csv.find("n,V_n,omega_bar\n") == 0);
    CHECK(csv.find("\n3,") != std::string::npos);
    CHECK(csv.find("# rms_residual") != std::string::npos);
    // the near-zero n=1 and n=2 rows are filtered
    CHECK(csv.find("\n1,") == std::string::npos);
    CHECK(csv.find("\n2,") == std::string::npos);
}
