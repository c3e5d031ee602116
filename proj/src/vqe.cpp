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

#include "qpept/vqe.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "qpept/errors.hpp"
#include "qpept/sim.hpp"
#include "qpept/synth.hpp"

namespace qpept {

// ---------------------------------------------------------------------------
// FCI oracle in the determinant basis
// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint64_t> enumerate_determinants(std::size_t n_modes, std::size_t eta,
                                                  std::optional<int> sz_twice) {
    if (n_modes > 63) throw CapacityError("determinant enumeration capped at 63 modes");
    std::vector<std::uint64_t> dets;
    if (eta == 0) {
        dets.push_back(0);
        return dets;
    }
    // Gosper's hack over eta-subsets of n_modes bits
    std::uint64_t v = (std::uint64_t{1} << eta) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n_modes;
    while (v < limit) {
        bool keep = true;
        if (sz_twice) {
            int alpha = std::popcount(v & 0x5555555555555555ull);
            int beta = std::popcount(v & 0xAAAAAAAAAAAAAAAAull);
            keep = (alpha - beta) == *sz_twice;
        }
        if (keep) dets.push_back(v);
        const std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    }
    return dets;
}

/// apply coeff * ops to |det>; returns false if annihilated.
bool apply_ladder_string(const std::vector<LadderOp>& ops, std::uint64_t det,
                         std::uint64_t& out_det, double& sign) {
    sign = 1.0;
    std::uint64_t b = det;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        const std::uint64_t bit = std::uint64_t{1} << it->index;
        const bool occ = b & bit;
        if (it->dagger == occ) return false;  // create on occupied / destroy empty
        if (std::popcount(b & (bit - 1)) & 1) sign = -sign;
        b ^= bit;
    }
    out_det = b;
    return true;
}

Eigen::MatrixXd determinant_hamiltonian(const FermionOperator& h, std::size_t n_modes,
                                        std::size_t eta, std::optional<int> sz_twice) {
    if (eta > n_modes) throw DomainError("more electrons than spin orbitals");
    // contract guard: C(M, eta) must stay enumerable
    double log_c = 0.0;
    for (std::size_t k = 0; k < eta; ++k)
        log_c += std::log10(double(n_modes - k)) - std::log10(double(k + 1));
    if (log_c > 6.0)
        throw CapacityError("determinant basis exceeds 10^6");

    const auto dets = enumerate_determinants(n_modes, eta, sz_twice);
    const std::size_t dim = dets.size();
    if (dim == 0) throw DomainError("no determinants in the requested sector");
    if (dim > 4096)
        throw CapacityError("dense FCI capped at 4096 determinants, got " +
                            std::to_string(dim));

    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        for (const auto& [ops, coeff] : h.terms()) {
            if (std::abs(coeff.imag()) > 1e-12)
                throw DomainError("FCI oracle expects a real Hamiltonian");
            std::uint64_t out;
            double sign;
            if (!apply_ladder_string(ops, dets[col], out, sign)) continue;
            auto it = std::lower_bound(dets.begin(), dets.end(), out);
            if (it == dets.end() || *it != out) continue;  // outside the sector
            mat(static_cast<Eigen::Index>(it - dets.begin()), col) +=
                coeff.real() * sign;
        }
    }
    return mat;
}

}  // namespace

double fci_ground_energy(const FermionOperator& h, std::size_t n_modes, std::size_t eta,
                         std::optional<int> sz_twice) {
    Eigen::MatrixXd mat = determinant_hamiltonian(h, n_modes, eta, sz_twice);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mat);
    return es.eigenvalues()(0);
}

std::vector<double> fci_spectrum(const FermionOperator& h, std::size_t n_modes,
                                 std::size_t eta, std::optional<int> sz_twice) {
    Eigen::MatrixXd mat = determinant_hamiltonian(h, n_modes, eta, sz_twice);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mat);
    std::vector<double> out(es.eigenvalues().data(),
                            es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

// ---------------------------------------------------------------------------
// Classical optimizers
// ---------------------------------------------------------------------------

namespace {

struct OptimizerOutcome {
    std::vector<double> best_x;
    double best_f = 0.0;
    std::size_t iterations = 0;
    std::vector<double> trace;
    bool converged = false;
};

OptimizerOutcome nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const VqeConfig& cfg,
                             std::mt19937_64& rng) {
    const std::size_t n = x0.size();
    // adaptive coefficients (Gao & Han)
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / static_cast<double>(n);
    const double gamma = 0.75 - 1.0 / (2.0 * static_cast<double>(n));
    const double delta = 1.0 - 1.0 / static_cast<double>(n);

    std::uniform_real_distribution<double> jitter(0.02, 0.08);
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += jitter(rng);
    std::vector<double> fval(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fval[i] = f(simplex[i]);

    OptimizerOutcome out;
    std::size_t streak = 0;

    for (std::size_t iter = 0; iter < cfg.max_iterations; ++iter) {
        // order ascending by value
        std::vector<std::size_t> idx(n + 1);
        for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return fval[a] < fval[b]; });
        std::vector<std::vector<double>> sx(n + 1);
        std::vector<double> sf(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            sx[i] = simplex[idx[i]];
            sf[i] = fval[idx[i]];
        }
        simplex.swap(sx);
        fval.swap(sf);

        out.trace.push_back(fval[0]);
        out.iterations = iter + 1;
        // converged once the accepted simplex is energetically flat for ten
        // consecutive iterations
        if (fval[n] - fval[0] < cfg.tolerance) {
            if (++streak >= 10) {
                out.converged = true;
                break;
            }
        } else {
            streak = 0;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
        for (auto& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t j = 0; j < n; ++j)
                p[j] = centroid[j] + t * (centroid[j] - simplex[n][j]);
            return p;
        };

        std::vector<double> xr = blend(alpha);
        const double fr = f(xr);
        if (fr < fval[0]) {
            std::vector<double> xe = blend(alpha * beta);
            const double fe = f(xe);
            if (fe < fr) {
                simplex[n] = std::move(xe);
                fval[n] = fe;
            } else {
                simplex[n] = std::move(xr);
                fval[n] = fr;
            }
        } else if (fr < fval[n - 1]) {
            simplex[n] = std::move(xr);
            fval[n] = fr;
        } else {
            if (fr < fval[n]) {
                std::vector<double> xc = blend(alpha * gamma);  // outside contraction
                const double fc = f(xc);
                if (fc <= fr) {
                    simplex[n] = std::move(xc);
                    fval[n] = fc;
                    continue;
                }
            } else {
                std::vector<double> xc = blend(-gamma);  // inside contraction
                const double fc = f(xc);
                if (fc < fval[n]) {
                    simplex[n] = std::move(xc);
                    fval[n] = fc;
                    continue;
                }
            }
            // shrink toward the best vertex
            for (std::size_t i = 1; i <= n; ++i) {
                for (std::size_t j = 0; j < n; ++j)
                    simplex[i][j] = simplex[0][j] + delta * (simplex[i][j] - simplex[0][j]);
                fval[i] = f(simplex[i]);
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (fval[i] < fval[best]) best = i;
    out.best_x = simplex[best];
    out.best_f = fval[best];
    return out;
}

OptimizerOutcome spsa(const std::function<double(const std::vector<double>&)>& f,
                      std::vector<double> x, const VqeConfig& cfg, std::mt19937_64& rng) {
    const std::size_t n = x.size();
    const double a = 0.2, c = 0.1, big_a = 10.0;
    std::bernoulli_distribution coin(0.5);

    OptimizerOutcome out;
    std::vector<double> best_x = x;
    double best_f = f(x);
    out.trace.push_back(best_f);
    std::size_t streak = 0;
    double prev_best = best_f;

    for (std::size_t k = 0; k < cfg.max_iterations; ++k) {
        const double ak = a / std::pow(k + 1 + big_a, 0.602);
        const double ck = c / std::pow(k + 1, 0.101);
        std::vector<double> delta(n), xp(n), xm(n);
        for (std::size_t i = 0; i < n; ++i) {
            delta[i] = coin(rng) ? 1.0 : -1.0;
            xp[i] = x[i] + ck * delta[i];
            xm[i] = x[i] - ck * delta[i];
        }
        const double fp = f(xp), fm = f(xm);
        for (std::size_t i = 0; i < n; ++i)
            x[i] -= ak * (fp - fm) / (2.0 * ck * delta[i]);

        const double fx = f(x);
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
        }
        out.trace.push_back(best_f);
        out.iterations = k + 1;
        if (std::abs(prev_best - best_f) < cfg.tolerance) {
            if (++streak >= 10) {
                out.converged = true;
                break;
            }
        } else {
            streak = 0;
        }
        prev_best = best_f;
    }
    out.best_x = std::move(best_x);
    out.best_f = best_f;
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// VQE driver
// ---------------------------------------------------------------------------

VqeResult run_vqe(const QubitOperator& h, const CompiledAnsatz& ansatz,
                  const VqeConfig& cfg) {
    if (h.n_qubits() != ansatz.width)
        throw DomainError("Hamiltonian width " + std::to_string(h.n_qubits()) +
                          " does not match ansatz width " + std::to_string(ansatz.width));
    if (ansatz.width > StateVector::width_cap())
        throw CapacityError("VQE width " + std::to_string(ansatz.width) +
                            " exceeds the simulator cap " +
                            std::to_string(StateVector::width_cap()));

    std::size_t evaluations = 0;
    auto energy_of = [&](const std::vector<double>& params) {
        ++evaluations;
        StateVector state = prepare_reference(ansatz.reference);
        Circuit c(static_cast<std::uint32_t>(ansatz.width));
        for (const auto& rot : ansatz.rotations) {
            const double angle = rot.coeff * params[rot.slot];
            append_pauli_exp(c, rot.string, angle);
        }
        apply_circuit(state, c);
        return expectation(state, h);
    };

    VqeResult result;
    if (ansatz.n_params == 0) {
        result.energy = energy_of({});
        result.trace = {result.energy};
        result.converged = true;
        result.evaluations = evaluations;
        return result;
    }

    std::mt19937_64 rng(cfg.seed);
    auto initial = [&] {
        std::vector<double> x0(ansatz.n_params, 0.0);
        if (cfg.initial_parameters == VqeConfig::Init::kPerturbed) {
            std::uniform_real_distribution<double> u(-cfg.perturbation, cfg.perturbation);
            for (auto& x : x0) x = u(rng);
        }
        return x0;
    };

    OptimizerOutcome best{};
    bool have = false;
    for (std::size_t attempt = 0; attempt <= cfg.restarts; ++attempt) {
        std::vector<double> x0 = initial();
        if (attempt > 0) {
            std::uniform_real_distribution<double> u(-0.1, 0.1);
            for (auto& x : x0) x += u(rng);
        }
        OptimizerOutcome o = cfg.optimizer == VqeConfig::Optimizer::kNelderMead
                                 ? nelder_mead(energy_of, std::move(x0), cfg, rng)
                                 : spsa(energy_of, std::move(x0), cfg, rng);
        if (!have || o.best_f < best.best_f) {
            best = std::move(o);
            have = true;
        }
        if (best.converged && attempt + 1 <= cfg.restarts) continue;
    }

    result.energy = best.best_f;
    result.parameters = best.best_x;
    result.iterations = best.iterations;
    result.trace = std::move(best.trace);
    result.converged = best.converged;
    result.evaluations = evaluations;
    return result;
}

VqeResult run_vqe(const QubitOperator& h, const AnsatzSpec& spec, const VqeConfig& cfg) {
    return run_vqe(h, compile_ansatz(spec), cfg);
}

std::string VqeResult::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"energy\":" << energy << ",\"iterations\":" << iterations
       << ",\"evaluations\":" << evaluations
       << ",\"converged\":" << (converged ? "true" : "false") << ",\"parameters\":[";
    for (std::size_t i = 0; i < parameters.size(); ++i)
        os << (i ? "," : "") << parameters[i];
    os << "],\"trace\":[";
    for (std::size_t i = 0; i < trace.size(); ++i) os << (i ? "," : "") << trace[i];
    os << "]}";
    return os.str();
}

}  // namespace qpept
