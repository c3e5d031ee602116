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

#include "qpept/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "qpept/ansatz.hpp"
#include "qpept/errors.hpp"
#include "qpept/ffield.hpp"
#include "qpept/fermion.hpp"
#include "qpept/sim.hpp"
#include "qpept/synth.hpp"
#include "qpept/taper.hpp"
#include "qpept/vqe.hpp"

namespace qpept {

namespace {

const std::map<std::string, int> kAtomicNumber = {
    {"H", 1}, {"C", 6}, {"N", 7}, {"O", 8}, {"S", 16}};

std::size_t total_electrons(const MolecularFormula& f) {
    std::size_t n = 0;
    for (const auto& [el, c] : f.counts()) {
        auto it = kAtomicNumber.find(el);
        if (it == kAtomicNumber.end())
            throw CatalogError("element '" + el + "' has no electron count entry");
        n += static_cast<std::size_t>(c) * it->second;
    }
    return n;
}

ReportRow make_row(const RosterEntry& entry, const BasisCatalogEntry& basis,
                   bool active_space, bool with_depth) {
    ReportRow row;
    row.label = entry.label;
    row.formula = entry.formula.str();
    row.basis = active_space ? "active-space" : basis.basis_name;
    row.ansatz = "kupccgsd-k1";
    if (active_space) {
        auto counts = count_active_qubits(entry.formula);
        row.m_qubits = counts.m_spin_orbitals;
        row.eta = counts.n_electrons;
    } else {
        row.m_qubits = count_qubits(entry.formula, basis);
        row.eta = total_electrons(entry.formula);
    }
    if (row.eta > 0 && row.eta < row.m_qubits) {
        row.naive_gates = count_uccsd_gates(row.m_qubits, row.eta, CountMode::kNaive);
        row.optimized_gates =
            count_uccsd_gates(row.m_qubits, row.eta, CountMode::kOptimized);
    }
    if (row.m_qubits >= 4 && row.m_qubits % 2 == 0)
        row.kupccgsd_gates = count_kupccgsd_gates(row.m_qubits, 1, CountMode::kNaive);
    if (with_depth && row.m_qubits >= 4 && row.m_qubits % 2 == 0) {
        auto d = estimate_kupccgsd_depth_detail(row.m_qubits, 1);
        row.depth = d.depth;
        row.depth_two_qubit = d.two_qubit_depth;
    }
    return row;
}

}  // namespace

std::vector<ReportRow> build_resource_report(const std::vector<RosterEntry>& roster,
                                             const BasisCatalog& catalog,
                                             const std::string& basis_name,
                                             bool active_space, bool with_depth) {
    const BasisCatalogEntry basis = catalog.entry(basis_name);

    const std::size_t n_workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                              roster.size() ? roster.size() : 1);
    std::vector<ReportRow> rows(roster.size());
    std::vector<std::string> row_errors(roster.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= roster.size()) return;
            try {
                rows[i] = make_row(roster[i], basis, active_space, with_depth);
            } catch (const std::exception& e) {
                row_errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w + 1 < n_workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < roster.size(); ++i)
        if (!row_errors[i].empty())
            throw CatalogError("row '" + roster[i].label + "': " + row_errors[i]);
    return rows;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "label,formula,basis,m_qubits,eta,ansatz,uccsd_naive_gates,"
          "uccsd_optimized_gates,kupccgsd_gates,depth,depth_two_qubit\n";
    for (const auto& r : rows)
        os << r.label << "," << r.formula << "," << r.basis << "," << r.m_qubits << ","
           << r.eta << "," << r.ansatz << "," << r.naive_gates << ","
           << r.optimized_gates << "," << r.kupccgsd_gates << "," << r.depth << ","
           << r.depth_two_qubit << "\n";
    return os.str();
}

std::string report_json(const std::vector<ReportRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"label", r.label},
                       {"formula", r.formula},
                       {"basis", r.basis},
                       {"m_qubits", r.m_qubits},
                       {"eta", r.eta},
                       {"ansatz", r.ansatz},
                       {"uccsd_naive_gates", r.naive_gates},
                       {"uccsd_optimized_gates", r.optimized_gates},
                       {"kupccgsd_gates", r.kupccgsd_gates},
                       {"depth", r.depth},
                       {"depth_two_qubit", r.depth_two_qubit}});
    }
    return arr.dump(2) + "\n";
}

namespace {

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open output file '" + path + "'");
    f << text;
}

BitVec hf_occupation_bits(std::size_t m, std::size_t eta) {
    BitVec occ(m);
    for (std::size_t i = 0; i < eta; ++i) occ.set(i);
    return occ;
}

int cmd_resources(const std::string& roster_path, bool dipeptides,
                  const std::string& basis, bool active_space, const std::string& format,
                  const std::string& catalog_path, bool no_depth,
                  const std::string& out_path, std::ostream& out) {
    std::vector<RosterEntry> roster;
    if (dipeptides || roster_path.empty()) {
        roster = dipeptide_roster();
    } else {
        std::ifstream in(roster_path);
        if (!in) throw ParseError("cannot open roster '" + roster_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        roster = parse_roster(buf.str());
    }
    BasisCatalog catalog = catalog_path.empty()
                               ? BasisCatalog::builtin()
                               : BasisCatalog::with_overrides_file(catalog_path);
    auto rows = build_resource_report(roster, catalog, basis, active_space, !no_depth);
    write_output(out_path, format == "json" ? report_json(rows) : report_csv(rows), out);
    return 0;
}

int cmd_vqe(const std::string& fcidump, const std::string& ansatz_name, std::size_t k,
            std::size_t freeze_core, bool do_taper, bool with_fci,
            const VqeConfig& cfg, const std::string& out_path, std::ostream& out) {
    MolecularIntegrals ints = parse_integral_path(fcidump);
    if (freeze_core > 0) ints = active_space_reduce(ints, freeze_core);
    const std::size_t m = 2 * ints.m_spatial;
    const std::size_t eta = ints.n_electrons;

    FermionOperator hf = build_hamiltonian(ints);
    QubitOperator hq = jordan_wigner(hf, m);

    AnsatzSpec spec = ansatz_name == "kupccgsd" ? build_kupccgsd(m, k, eta)
                                                : build_uccsd(m, eta);
    CompiledAnsatz ansatz = compile_ansatz(spec);

    nlohmann::json doc;
    doc["input"] = fcidump;
    doc["ansatz"] = nlohmann::json::parse(spec.summary_json());
    doc["spin_orbitals"] = m;
    doc["electrons"] = eta;
    if (freeze_core > 0) doc["frozen_core_orbitals"] = freeze_core;

    if (do_taper) {
        auto gens = find_z2_symmetries(hq);
        Taperer taperer(hq, gens);
        auto sector = taperer.choose_sector(hq, hf_occupation_bits(m, eta));
        nlohmann::json gen_list = nlohmann::json::array();
        for (std::size_t i = 0; i < gens.size(); ++i)
            gen_list.push_back({{"pauli", format_pauli(gens[i].pauli)},
                                {"sector", sector[i]}});
        doc["taper"] = {{"generators", gen_list},
                        {"tapered_qubits", taperer.tapered_width()}};
        hq = taperer.apply(hq, sector);
        ansatz = taperer.apply(ansatz, sector);
    }
    doc["vqe_qubits"] = hq.n_qubits();
    doc["parameters"] = ansatz.n_params;

    if (hq.n_qubits() > StateVector::width_cap())
        throw CapacityError(
            "problem needs " + std::to_string(hq.n_qubits()) + " qubits but the simulator cap is " +
            std::to_string(StateVector::width_cap()) +
            "; try --taper, --freeze-core, or raise QPEPT_MAX_QUBITS");

    VqeResult result = run_vqe(hq, ansatz, cfg);
    doc["vqe"] = nlohmann::json::parse(result.to_json());

    if (with_fci) {
        const double e_fci = fci_ground_energy(hf, m, eta);
        doc["fci"] = {{"energy", e_fci}, {"gap", result.energy - e_fci}};
    }
    write_output(out_path, doc.dump(2) + "\n", out);
    return 0;
}

int cmd_taper(const std::string& fcidump, std::size_t freeze_core, std::ostream& out) {
    MolecularIntegrals ints = parse_integral_path(fcidump);
    if (freeze_core > 0) ints = active_space_reduce(ints, freeze_core);
    const std::size_t m = 2 * ints.m_spatial;

    QubitOperator hq = jordan_wigner(build_hamiltonian(ints), m);
    auto gens = find_z2_symmetries(hq);
    out << "qubits " << m << "\n";
    if (gens.empty()) {
        out << "tapered_qubits " << m << "\n";
        return 0;
    }
    Taperer taperer(hq, gens);
    auto sector = taperer.choose_sector(hq, hf_occupation_bits(m, ints.n_electrons));
    for (std::size_t i = 0; i < gens.size(); ++i)
        out << "generator " << format_pauli(gens[i].pauli) << " sector "
            << (sector[i] > 0 ? "+1" : "-1") << "\n";
    out << "tapered_qubits " << taperer.tapered_width() << "\n";
    return 0;
}

int cmd_fit_torsion(const std::string& scan_path, int n_max, const std::string& out_path,
                    std::ostream& out) {
    TorsionScan scan = parse_scan_path(scan_path);
    TorsionFit fit = fit_torsion(scan, n_max);
    write_output(out_path, torsion_fit_csv(fit), out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantum resource estimation and desk-scale VQE for peptide chemistry"};
    app.require_subcommand(1);

    // resources
    auto* res = app.add_subcommand("resources", "qubit/gate/depth estimates per molecule");
    std::string roster_path, basis = "sto-3g", format = "csv", catalog_path, res_out;
    bool dipeptides = false, active_space = false, no_depth = false;
    res->add_option("--roster", roster_path, "roster file: '<label> <formula>' per line");
    res->add_flag("--dipeptides", dipeptides, "use the built-in homodipeptide roster");
    res->add_option("--basis", basis, "basis set name (default sto-3g)");
    res->add_flag("--active-space", active_space, "full-reaction-space accounting");
    res->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    res->add_option("--catalog", catalog_path, "basis catalog override file");
    res->add_flag("--no-depth", no_depth, "skip the depth estimate columns");
    res->add_option("-o,--output", res_out, "write to file instead of stdout");

    // vqe
    auto* vqe_cmd = app.add_subcommand("vqe", "run VQE on an FCIDUMP Hamiltonian");
    std::string fcidump, ansatz_name = "uccsd", vqe_out, optimizer = "nelder-mead",
                init = "zeros";
    std::size_t k = 1, freeze_core = 0, max_iter = 20000, restarts = 0;
    std::uint64_t seed = 0;
    double tol = 1e-7, perturbation = 1e-2;
    bool do_taper = false, with_fci = false;
    vqe_cmd->add_option("--fcidump", fcidump, "integral file")->required();
    vqe_cmd->add_option("--ansatz", ansatz_name, "uccsd or kupccgsd")
        ->check(CLI::IsMember({"uccsd", "kupccgsd"}));
    vqe_cmd->add_option("-k,--repetitions", k, "k-UpCCGSD repetition count");
    vqe_cmd->add_option("--freeze-core", freeze_core, "freeze N core orbitals first");
    vqe_cmd->add_flag("--taper", do_taper, "apply Z2 qubit tapering");
    vqe_cmd->add_flag("--fci", with_fci, "also report the FCI oracle energy and gap");
    vqe_cmd->add_option("--optimizer", optimizer, "nelder-mead or spsa")
        ->check(CLI::IsMember({"nelder-mead", "spsa"}));
    vqe_cmd->add_option("--max-iter", max_iter, "optimizer iteration cap");
    vqe_cmd->add_option("--tol", tol, "convergence tolerance in Hartree");
    vqe_cmd->add_option("--seed", seed, "RNG seed");
    vqe_cmd->add_option("--init", init, "zeros or perturbed")
        ->check(CLI::IsMember({"zeros", "perturbed"}));
    vqe_cmd->add_option("--perturbation", perturbation, "initial parameter spread");
    vqe_cmd->add_option("--restarts", restarts, "extra optimizer restarts");
    vqe_cmd->add_option("-o,--output", vqe_out, "write the JSON result to a file");

    // taper
    auto* taper_cmd = app.add_subcommand("taper", "report Z2 symmetries and tapered width");
    std::string taper_fcidump;
    std::size_t taper_freeze = 0;
    taper_cmd->add_option("--fcidump", taper_fcidump, "integral file")->required();
    taper_cmd->add_option("--freeze-core", taper_freeze, "freeze N core orbitals first");

    // fit-torsion
    auto* fit_cmd = app.add_subcommand("fit-torsion", "fit torsion terms to a 1-D scan");
    std::string scan_path, fit_out;
    int n_max = 3;
    fit_cmd->add_option("--scan", scan_path, "CSV scan file")->required();
    fit_cmd->add_option("--n-max", n_max, "highest periodicity to fit");
    fit_cmd->add_option("-o,--output", fit_out, "write the CSV to a file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (res->parsed())
            return cmd_resources(roster_path, dipeptides, basis, active_space, format,
                                 catalog_path, no_depth, res_out, out);
        if (vqe_cmd->parsed()) {
            VqeConfig cfg;
            cfg.optimizer = optimizer == "spsa" ? VqeConfig::Optimizer::kSpsa
                                                : VqeConfig::Optimizer::kNelderMead;
            cfg.max_iterations = max_iter;
            cfg.tolerance = tol;
            cfg.seed = seed;
            cfg.initial_parameters = init == "perturbed" ? VqeConfig::Init::kPerturbed
                                                         : VqeConfig::Init::kZeros;
            cfg.perturbation = perturbation;
            cfg.restarts = restarts;
            return cmd_vqe(fcidump, ansatz_name, k, freeze_core, do_taper, with_fci, cfg,
                           vqe_out, out);
        }
        if (taper_cmd->parsed()) return cmd_taper(taper_fcidump, taper_freeze, out);
        if (fit_cmd->parsed()) return cmd_fit_torsion(scan_path, n_max, fit_out, out);
        err << "no subcommand given\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IntegrityError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const FitError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace qpept
