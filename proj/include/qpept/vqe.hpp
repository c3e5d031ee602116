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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpept/ansatz.hpp"
#include "qpept/encoding.hpp"
#include "qpept/fermion.hpp"

namespace qpept {

/// Smallest eigenvalue of the Hamiltonian in the fixed-particle-number
/// determinant basis (dimension C(M, eta)), optionally restricted to a
/// fixed 2*S_z sector under the interleaved spin ordering.
double fci_ground_energy(const FermionOperator& h, std::size_t n_modes, std::size_t eta,
                         std::optional<int> sz_twice = std::nullopt);

/// All eigenvalues from the same determinant-basis construction.
std::vector<double> fci_spectrum(const FermionOperator& h, std::size_t n_modes,
                                 std::size_t eta,
                                 std::optional<int> sz_twice = std::nullopt);

struct VqeConfig {
    enum class Optimizer { kNelderMead, kSpsa };
    enum class Init { kZeros, kPerturbed };

    Optimizer optimizer = Optimizer::kNelderMead;
    std::size_t max_iterations = 20000;
    double tolerance = 1e-7;  // Hartree
    Init initial_parameters = Init::kZeros;
    double perturbation = 1e-2;
    std::uint64_t seed = 0;
    std::size_t restarts = 0;
};

struct VqeResult {
    double energy = 0.0;
    std::vector<double> parameters;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    std::vector<double> trace;  // best energy per iteration, non-increasing
    bool converged = false;

    std::string to_json() const;
};

/// Hybrid loop: minimize <ref| U(t)^dag H U(t) |ref> over the ansatz
/// parameters with a derivative-free classical optimizer. Deterministic
/// under a fixed config. Optimizer failure surfaces as converged = false.
VqeResult run_vqe(const QubitOperator& h, const CompiledAnsatz& ansatz,
                  const VqeConfig& cfg = {});
VqeResult run_vqe(const QubitOperator& h, const AnsatzSpec& spec,
                  const VqeConfig& cfg = {});

}  // namespace qpept
