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

#include "qpept/ffield.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qpept/errors.hpp"

namespace qpept {

namespace {

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
void axpy(Vec3& y, const Vec3& x, double a) {
    y[0] += a * x[0];
    y[1] += a * x[1];
    y[2] += a * x[2];
}

constexpr double kMinSeparation = 1e-9;

}  // namespace

void FFParameters::validate(std::size_t n_atoms) const {
    auto check = [&](std::size_t idx) {
        if (idx >= n_atoms)
            throw DomainError("force-field term references atom " + std::to_string(idx) +
                              " but only " + std::to_string(n_atoms) + " atoms given");
    };
    for (const auto& b : bonds) {
        check(b.i);
        check(b.j);
        if (b.k < 0) throw DomainError("negative bond force constant");
    }
    for (const auto& a : angles) {
        check(a.i);
        check(a.j);
        check(a.k);
        if (a.tau < 0) throw DomainError("negative angle force constant");
    }
    for (const auto& t : torsions) {
        check(t.i);
        check(t.j);
        check(t.k);
        check(t.l);
        for (const auto& term : t.terms) {
            if (term.n < 1) throw DomainError("torsion periodicity must be >= 1");
            if (term.v < 0) throw DomainError("negative torsion barrier");
        }
    }
    for (const auto& p : coulomb_pairs) {
        check(p.i);
        check(p.j);
        if (charges.size() < n_atoms)
            throw DomainError("Coulomb pairs given without per-atom charges");
    }
    for (const auto& p : lj_pairs) {
        check(p.i);
        check(p.j);
        if (p.epsilon < 0) throw DomainError("negative LJ epsilon");
        if (p.sigma <= 0) throw DomainError("LJ sigma must be positive");
    }
}

double dihedral_angle(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    const Vec3 b1 = sub(b, a), b2 = sub(c, b), b3 = sub(d, c);
    const Vec3 n1 = cross(b1, b2), n2 = cross(b2, b3);
    const Vec3 m = cross(n1, n2);
    const double y = dot(m, scale(b2, 1.0 / norm(b2)));
    const double x = dot(n1, n2);
    return std::atan2(y, x);
}

double evaluate_energy_gradient(const FFParameters& params, const std::vector<Vec3>& coords,
                                std::vector<Vec3>& grad) {
    params.validate(coords.size());
    grad.assign(coords.size(), {0.0, 0.0, 0.0});
    double energy = 0.0;

    for (const auto& bond : params.bonds) {
        const Vec3 d = sub(coords[bond.i], coords[bond.j]);
        const double r = norm(d);
        if (r < kMinSeparation) throw DomainError("coincident atoms in a bond");
        const double dr = r - bond.r0;
        energy += 0.5 * bond.k * dr * dr;
        const double dEdr = bond.k * dr;
        axpy(grad[bond.i], d, dEdr / r);
        axpy(grad[bond.j], d, -dEdr / r);
    }

    for (const auto& ang : params.angles) {
        const Vec3 u = sub(coords[ang.i], coords[ang.j]);
        const Vec3 v = sub(coords[ang.k], coords[ang.j]);
        const double nu = norm(u), nv = norm(v);
        if (nu < kMinSeparation || nv < kMinSeparation)
            throw DomainError("coincident atoms in an angle");
        double cosq = dot(u, v) / (nu * nv);
        cosq = std::clamp(cosq, -1.0, 1.0);
        const double theta = std::acos(cosq);
        const double sinq = std::sqrt(std::max(1.0 - cosq * cosq, 1e-24));
        const double dtheta = theta - ang.theta0;
        energy += 0.5 * ang.tau * dtheta * dtheta;
        const double dEdtheta = ang.tau * dtheta;
        // d theta / d r_i and d theta / d r_k
        Vec3 di{}, dk{};
        for (int c = 0; c < 3; ++c) {
            di[c] = (cosq * u[c] / nu - v[c] / nv) / (nu * sinq);
            dk[c] = (cosq * v[c] / nv - u[c] / nu) / (nv * sinq);
        }
        axpy(grad[ang.i], di, dEdtheta);
        axpy(grad[ang.k], dk, dEdtheta);
        axpy(grad[ang.j], di, -dEdtheta);
        axpy(grad[ang.j], dk, -dEdtheta);
    }

    for (const auto& tor : params.torsions) {
        const Vec3 b1 = sub(coords[tor.j], coords[tor.i]);
        const Vec3 b2 = sub(coords[tor.k], coords[tor.j]);
        const Vec3 b3 = sub(coords[tor.l], coords[tor.k]);
        const Vec3 n1 = cross(b1, b2), n2 = cross(b2, b3);
        const double nb2 = norm(b2), nn1 = dot(n1, n1), nn2 = dot(n2, n2);
        if (nb2 < kMinSeparation || nn1 < 1e-18 || nn2 < 1e-18)
            throw DomainError("degenerate torsion geometry");
        const double omega = dihedral_angle(coords[tor.i], coords[tor.j], coords[tor.k],
                                            coords[tor.l]);
        double dEdomega = 0.0;
        for (const auto& term : tor.terms) {
            energy += 0.5 * term.v * (1.0 + std::cos(term.n * omega - term.omega0));
            dEdomega += -0.5 * term.v * term.n * std::sin(term.n * omega - term.omega0);
        }
        // standard dihedral derivatives
        const Vec3 domega_di = scale(n1, -nb2 / nn1);
        const Vec3 domega_dl = scale(n2, nb2 / nn2);
        const double f12 = dot(b1, b2) / (nb2 * nb2);
        const double f32 = dot(b3, b2) / (nb2 * nb2);
        Vec3 domega_dj{}, domega_dk{};
        for (int c = 0; c < 3; ++c) {
            domega_dj[c] = -(1.0 + f12) * domega_di[c] + f32 * domega_dl[c];
            domega_dk[c] = f12 * domega_di[c] - (1.0 + f32) * domega_dl[c];
        }
        axpy(grad[tor.i], domega_di, dEdomega);
        axpy(grad[tor.j], domega_dj, dEdomega);
        axpy(grad[tor.k], domega_dk, dEdomega);
        axpy(grad[tor.l], domega_dl, dEdomega);
    }

    for (const auto& pair : params.coulomb_pairs) {
        const Vec3 d = sub(coords[pair.i], coords[pair.j]);
        const double r = norm(d);
        if (r < kMinSeparation)
            throw DomainError("coincident atoms in a Coulomb pair");
        const double qq = params.coulomb_constant * params.charges[pair.i] *
                          params.charges[pair.j];
        energy += qq / r;
        const double dEdr = -qq / (r * r);
        axpy(grad[pair.i], d, dEdr / r);
        axpy(grad[pair.j], d, -dEdr / r);
    }

    for (const auto& pair : params.lj_pairs) {
        const Vec3 d = sub(coords[pair.i], coords[pair.j]);
        const double r = norm(d);
        if (r < kMinSeparation) throw DomainError("coincident atoms in an LJ pair");
        const double sr6 = std::pow(pair.sigma / r, 6);
        const double sr12 = sr6 * sr6;
        energy += 4.0 * pair.epsilon * (sr12 - sr6);
        const double dEdr = 4.0 * pair.epsilon * (-12.0 * sr12 + 6.0 * sr6) / r;
        axpy(grad[pair.i], d, dEdr / r);
        axpy(grad[pair.j], d, -dEdr / r);
    }

    return energy;
}

double evaluate_energy(const FFParameters& params, const std::vector<Vec3>& coords) {
    std::vector<Vec3> grad;
    return evaluate_energy_gradient(params, coords, grad);
}

// ---------------------------------------------------------------------------
// Torsion scans and fitting
// ---------------------------------------------------------------------------

TorsionScan parse_scan(const std::string& text) {
    TorsionScan scan;
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line[0] == '\r') continue;
        if (line[0] == '#') {
            if (auto pos = line.find("units:"); pos != std::string::npos) {
                std::string unit = line.substr(pos + 6);
                const auto b = unit.find_first_not_of(" \t");
                const auto e = unit.find_last_not_of(" \t\r");
                if (b != std::string::npos) scan.unit = unit.substr(b, e - b + 1);
            }
            continue;
        }
        if (!have_header) {
            if (line.find("angle_rad") == std::string::npos ||
                line.find("energy") == std::string::npos)
                throw ParseError("expected header 'angle_rad,energy'", line_no);
            have_header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("expected 'angle,energy'", line_no);
        try {
            const double a = std::stod(line.substr(0, comma));
            const double e = std::stod(line.substr(comma + 1));
            if (a < -M_PI - 1e-9 || a >= M_PI + 1e-9)
                throw ParseError("angle outside [-pi, pi)", line_no);
            scan.angles.push_back(a);
            scan.energies.push_back(e);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad numeric field", line_no);
        }
    }
    if (scan.angles.size() < 2) throw ParseError("scan needs at least two points");
    return scan;
}

TorsionScan parse_scan_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scan file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scan(buf.str());
}

TorsionFit fit_torsion(const TorsionScan& scan, int n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    const std::size_t n_pts = scan.angles.size();
    if (n_pts != scan.energies.size())
        throw DomainError("scan angle/energy lengths differ");
    const std::size_t n_cols = 2 * static_cast<std::size_t>(n_max) + 1;
    if (n_pts < n_cols)
        throw FitError("scan has " + std::to_string(n_pts) + " points but the fit needs " +
                       std::to_string(n_cols));

    Eigen::MatrixXd design(n_pts, n_cols);
    Eigen::VectorXd rhs(n_pts);
    for (std::size_t r = 0; r < n_pts; ++r) {
        const double w = scan.angles[r];
        design(r, 0) = 1.0;
        for (int n = 1; n <= n_max; ++n) {
            design(r, 2 * n - 1) = std::cos(n * w);
            design(r, 2 * n) = std::sin(n * w);
        }
        rhs(r) = scan.energies[r];
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < static_cast<Eigen::Index>(n_cols))
        throw FitError("rank-deficient torsion fit: too few distinct angles");
    Eigen::VectorXd coef = qr.solve(rhs);

    TorsionFit fit;
    fit.constant = coef(0);
    for (int n = 1; n <= n_max; ++n) {
        const double a = coef(2 * n - 1), b = coef(2 * n);
        // a cos(nw) + b sin(nw) = (V/2) cos(nw - w0) with V = 2 sqrt(a^2+b^2)
        const double v = 2.0 * std::hypot(a, b);
        const double w0 = v < 1e-12 ? 0.0 : std::atan2(b, a);
        fit.terms.push_back({n, v, w0});
    }
    const Eigen::VectorXd resid = design * coef - rhs;
    fit.rms_residual = std::sqrt(resid.squaredNorm() / static_cast<double>(n_pts));
    return fit;
}

std::string torsion_fit_csv(const TorsionFit& fit, double v_threshold) {
    std::ostringstream os;
    os.precision(12);
    os << "n,V_n,omega_bar\n";
    for (const auto& term : fit.terms)
        if (term.v >= v_threshold)
            os << term.n << "," << term.v << "," << term.omega0 << "\n";
    os << "# rms_residual " << fit.rms_residual << "\n";
    return os.str();
}

}  // namespace qpept
