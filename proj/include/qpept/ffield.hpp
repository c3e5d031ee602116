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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace qpept {

using Vec3 = std::array<double, 3>;

/// Classical force-field parameter set. Unit system: energies kcal/mol,
/// lengths Angstrom, angles radians, charges in elementary charges closed
/// by coulomb_constant (kcal/mol * Angstrom / e^2).
struct FFParameters {
    struct Bond {
        std::size_t i, j;
        double k;        // kcal/mol/A^2
        double r0;       // A
    };
    struct Angle {
        std::size_t i, j, k;  // vertex at j
        double tau;           // kcal/mol/rad^2
        double theta0;        // rad
    };
    struct TorsionTerm {
        int n;          // periodicity >= 1
        double v;       // barrier V_n >= 0, kcal/mol
        double omega0;  // phase, rad
    };
    struct Torsion {
        std::size_t i, j, k, l;
        std::vector<TorsionTerm> terms;
    };
    struct ChargePair {
        std::size_t i, j;
    };
    struct LJPair {
        std::size_t i, j;
        double epsilon;  // kcal/mol
        double sigma;    // A
    };

    std::vector<Bond> bonds;
    std::vector<Angle> angles;
    std::vector<Torsion> torsions;
    std::vector<double> charges;       // per atom; empty = no Coulomb
    std::vector<ChargePair> coulomb_pairs;
    std::vector<LJPair> lj_pairs;
    double coulomb_constant = 332.063713;

    void validate(std::size_t n_atoms) const;
};

/// Potential energy of a geometry: harmonic bonds and angles, cosine
/// torsions, pairwise Coulomb and Lennard-Jones.
double evaluate_energy(const FFParameters& params, const std::vector<Vec3>& coords);

/// Energy plus the analytic gradient dE/dx (same ordering as coords).
double evaluate_energy_gradient(const FFParameters& params, const std::vector<Vec3>& coords,
                                std::vector<Vec3>& grad);

/// Dihedral angle of four points, in (-pi, pi].
double dihedral_angle(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

/// 1-D reference scan: dihedral angles with energies, unit-tagged.
struct TorsionScan {
    std::vector<double> angles;    // rad, in [-pi, pi)
    std::vector<double> energies;
    std::string unit = "kcal/mol";
};

/// Parse "# units: ..." + "angle_rad,energy" CSV text.
TorsionScan parse_scan(const std::string& text);
TorsionScan parse_scan_path(const std::string& path);

struct TorsionFit {
    std::vector<FFParameters::TorsionTerm> terms;  // n = 1..n_max
    double constant = 0.0;                         // fitted offset
    double rms_residual = 0.0;
};

/// Least squares in the a_n cos + b_n sin basis, converted to the
/// V_n (1 + cos(n w - w0)) form with V_n >= 0 by phase absorption.
TorsionFit fit_torsion(const TorsionScan& scan, int n_max);

/// CSV rows "n,V_n,omega_bar" for terms with V_n above the threshold, plus
/// a trailing "# rms_residual" comment line.
std::string torsion_fit_csv(const TorsionFit& fit, double v_threshold = 1e-8);

}  // namespace qpept
