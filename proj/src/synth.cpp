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

#include "qpept/synth.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "qpept/ansatz.hpp"
#include "qpept/errors.hpp"

namespace qpept {

void Circuit::push(Gate g) {
    if (g.q0 >= width || (g.is_two_qubit() && g.q1 >= width))
        throw DomainError("gate qubit index out of range");
    gates.push_back(g);
}

void Circuit::cnot(std::uint32_t control, std::uint32_t target) {
    if (control == target) throw DomainError("CNOT control equals target");
    push({GateKind::kCNOT, control, target});
}

std::size_t Circuit::two_qubit_count() const {
    std::size_t c = 0;
    for (const auto& g : gates) c += g.is_two_qubit();
    return c;
}

void append_pauli_exp(Circuit& c, const PauliString& p, double theta) {
    if (p.is_identity())
        throw DomainError("cannot synthesize an identity string; fold the phase");
    if (p.n_qubits() > c.width) throw DomainError("string wider than circuit");

    // active qubits in ascending order
    std::vector<std::uint32_t> active;
    active.reserve(p.weight());
    for (std::size_t q = 0; q < p.n_qubits(); ++q)
        if (p.x.get(q) || p.z.get(q)) active.push_back(static_cast<std::uint32_t>(q));

    auto basis_in = [&](std::uint32_t q) {
        const bool x = p.x.get(q), z = p.z.get(q);
        if (x && z)
            c.y_basis_inv(q);
        else if (x)
            c.h(q);
    };
    auto basis_out = [&](std::uint32_t q) {
        const bool x = p.x.get(q), z = p.z.get(q);
        if (x && z)
            c.y_basis(q);
        else if (x)
            c.h(q);
    };

    for (auto q : active) basis_in(q);
    for (std::size_t k = 0; k + 1 < active.size(); ++k) c.cnot(active[k], active[k + 1]);
    c.rz(active.back(), -2.0 * theta);
    for (std::size_t k = active.size() - 1; k-- > 0;) c.cnot(active[k], active[k + 1]);
    for (auto it = active.rbegin(); it != active.rend(); ++it) basis_out(*it);
}

Circuit synthesize_pauli_exp(const PauliString& p, double theta) {
    Circuit c(static_cast<std::uint32_t>(p.n_qubits()));
    append_pauli_exp(c, p, theta);
    return c;
}

Circuit synthesize_pauli_exp(const PauliTerm& term, double theta) {
    return synthesize_pauli_exp(term.string, theta);
}

std::size_t schedule_depth(const Circuit& c) {
    std::vector<std::size_t> last(c.width, 0);
    std::size_t depth = 0;
    for (const auto& g : c.gates) {
        std::size_t layer = last[g.q0] + 1;
        if (g.is_two_qubit()) layer = std::max(layer, last[g.q1] + 1);
        last[g.q0] = layer;
        if (g.is_two_qubit()) last[g.q1] = layer;
        depth = std::max(depth, layer);
    }
    return depth;
}

std::size_t schedule_two_qubit_depth(const Circuit& c) {
    std::vector<std::size_t> last(c.width, 0);
    std::size_t depth = 0;
    for (const auto& g : c.gates) {
        if (!g.is_two_qubit()) continue;
        const std::size_t layer = std::max(last[g.q0], last[g.q1]) + 1;
        last[g.q0] = last[g.q1] = layer;
        depth = std::max(depth, layer);
    }
    return depth;
}

// ---------------------------------------------------------------------------
// Gate counting
// ---------------------------------------------------------------------------

namespace {

/// Per-generator CNOT total: (number of emitted strings) x 2(w-1).
std::size_t generator_cnots(const ExcitationGenerator& g, std::size_t M, CountMode mode) {
    FermionOperator t = excitation_operator(g);
    QubitOperator q = jordan_wigner(t, M);
    std::size_t total = 0;
    for (const auto& [s, c] : q.terms()) {
        if (std::abs(c.imag()) < 1e-14) continue;
        const std::size_t w =
            mode == CountMode::kNaive ? s.weight() : s.x.popcount();
        total += 2 * (w - 1);
    }
    return total;
}

}  // namespace

std::size_t count_two_qubit_gates(const AnsatzSpec& spec, CountMode mode) {
    std::size_t total = 0;
    for (const auto& g : spec.generators) {
        std::size_t c = generator_cnots(g, spec.n_spin_orbitals, mode);
        // k-UpCCGSD T2 terms are counted as ordered pairs, 2x the stored
        // unordered generators.
        if (spec.kind == AnsatzKind::kKupccgsd && g.kind == ExcitationKind::kPairedDouble)
            c *= 2;
        total += c;
    }
    return total;
}

std::size_t count_uccsd_gates(std::size_t M, std::size_t eta, CountMode mode) {
    if (eta == 0 || eta >= M) throw DomainError("build_uccsd requires 0 < eta < M");
    const std::size_t nv = M - eta;
    std::size_t total = 0;
    // doubles: 8 strings each; weight 4 plus the two ladder gaps
    for (std::size_t i = 0; i < eta; ++i)
        for (std::size_t j = i + 1; j < eta; ++j)
            for (std::size_t a = 0; a < nv; ++a)
                for (std::size_t b = a + 1; b < nv; ++b) {
                    const std::size_t w = mode == CountMode::kNaive
                                              ? 4 + (j - i - 1) + (b - a - 1)
                                              : 4;
                    total += 8 * 2 * (w - 1);
                }
    // singles: 2 strings each; weight spans the index gap
    for (std::size_t i = 0; i < eta; ++i)
        for (std::size_t a = eta; a < M; ++a) {
            const std::size_t w = mode == CountMode::kNaive ? (a - i + 1) : 2;
            total += 2 * 2 * (w - 1);
        }
    return total;
}

std::size_t count_kupccgsd_gates(std::size_t M, std::size_t k, CountMode mode) {
    if (M % 2 != 0) throw DomainError("k-UpCCGSD requires even M");
    const std::size_t n = M / 2;
    std::size_t per_rep = 0;
    // paired doubles: no JW ladder (adjacent spin orbitals), weight 4,
    // 8 strings; ordered-pair term count n(n-1)
    per_rep += n * (n - 1) * 8 * 2 * (4 - 1);
    // generalized same-spin singles over unordered spatial pairs, both spins
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            const std::size_t w = mode == CountMode::kNaive ? 2 * (q - p) + 1 : 2;
            per_rep += 2 * 2 * 2 * (w - 1);  // 2 spins x 2 strings
        }
    return k * per_rep;
}

// ---------------------------------------------------------------------------
// Nesting and depth
// ---------------------------------------------------------------------------

std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
nesting_partition(std::size_t M) {
    if (M % 2 != 0) throw DomainError("nesting_partition requires even M");
    if (M < 8) throw DomainError("nesting_partition requires M >= 8");
    const std::uint32_t n = static_cast<std::uint32_t>(M / 2);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> groups;
    // p + q runs over 3 .. M - 1 for 1-based p > q
    for (std::uint32_t sum = 3; sum + 1 <= M; ++sum) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> group;
        for (std::uint32_t q = 1; 2 * q < sum; ++q) {
            const std::uint32_t p = sum - q;
            if (p <= n && p > q) group.emplace_back(p, q);
        }
        groups.push_back(std::move(group));
    }
    return groups;
}

namespace {

/// Support-only (ladder-cancelled) string patterns of the paired-double and
/// generalized-single excitations, derived once from the JW algebra on a
/// minimal register and then remapped onto target qubits. Each site is
/// 1 = X, 2 = Z, 3 = Y on the local qubit of that index.
struct SkeletonPatterns {
    std::vector<std::vector<std::uint8_t>> pair4;    // local qubits 0..3
    std::vector<std::vector<std::uint8_t>> single2;  // local qubits 0..1
};

std::vector<std::uint8_t> encode_sites(const PauliString& s) {
    std::vector<std::uint8_t> sites(s.n_qubits());
    for (std::size_t q = 0; q < s.n_qubits(); ++q)
        sites[q] = static_cast<std::uint8_t>(s.x.get(q) | (s.z.get(q) << 1));
    return sites;
}

const SkeletonPatterns& skeleton_patterns() {
    static const SkeletonPatterns pat = [] {
        SkeletonPatterns p;
        ExcitationGenerator pd{ExcitationKind::kPairedDouble, {0, 1, 0, 0}, 0};
        const QubitOperator qpd = jordan_wigner(excitation_operator(pd), 4);
        for (const auto& [s, c] : qpd.terms())
            if (std::abs(c.imag()) > 1e-14) p.pair4.push_back(encode_sites(s));
        ExcitationGenerator sg{ExcitationKind::kSingle, {0, 1, 0, 0}, 0};
        const QubitOperator qsg = jordan_wigner(excitation_operator(sg), 2);
        for (const auto& [s, c] : qsg.terms())
            if (std::abs(c.imag()) > 1e-14) p.single2.push_back(encode_sites(s));
        return p;
    }();
    return pat;
}

/// Emit the exponentiated-string construction straight onto mapped qubits;
/// identical gate sequence to append_pauli_exp, minus the temporaries.
void append_remapped(Circuit& c, const std::vector<std::uint8_t>& sites,
                     const std::vector<std::uint32_t>& map, double theta) {
    auto& g = c.gates;
    for (std::size_t q = 0; q < sites.size(); ++q) {
        if (sites[q] == 3)
            g.push_back({GateKind::kYBasisInv, map[q]});
        else if (sites[q] == 1)
            g.push_back({GateKind::kH, map[q]});
    }
    for (std::size_t q = 0; q + 1 < sites.size(); ++q)
        g.push_back({GateKind::kCNOT, map[q], map[q + 1]});
    g.push_back({GateKind::kRZ, map[sites.size() - 1], 0, -2.0 * theta});
    for (std::size_t q = sites.size() - 1; q-- > 0;)
        g.push_back({GateKind::kCNOT, map[q], map[q + 1]});
    for (std::size_t q = sites.size(); q-- > 0;) {
        if (sites[q] == 3)
            g.push_back({GateKind::kYBasis, map[q]});
        else if (sites[q] == 1)
            g.push_back({GateKind::kH, map[q]});
    }
}

/// Rounds of mutually disjoint spatial pairs covering all C(n,2) pairs
/// (circle method). Disjointness subsumes the nested-pair condition, so
/// every nesting group's concurrency is preserved.
std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
round_robin_pairs(std::uint32_t n) {
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rounds;
    if (n < 2) return rounds;
    std::vector<std::uint32_t> ring(n % 2 == 0 ? n : n + 1);
    const std::uint32_t bye = static_cast<std::uint32_t>(ring.size() - 1);
    for (std::uint32_t i = 0; i < ring.size(); ++i) ring[i] = i;
    const std::size_t n_rounds = ring.size() - 1;
    for (std::size_t r = 0; r < n_rounds; ++r) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> round;
        for (std::size_t i = 0; i < ring.size() / 2; ++i) {
            std::uint32_t a = ring[i], b = ring[ring.size() - 1 - i];
            if (n % 2 == 1 && (a == bye || b == bye)) continue;  // bye slot
            round.emplace_back(std::min(a, b), std::max(a, b));
        }
        rounds.push_back(std::move(round));
        // rotate all but the first element
        std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
    }
    return rounds;
}

}  // namespace

DepthEstimate estimate_kupccgsd_depth_detail(std::size_t M, std::size_t k) {
    if (M % 2 != 0) throw DomainError("estimate_kupccgsd_depth requires even M");
    if (M < 4) throw DomainError("need at least two spatial orbitals");
    const std::uint32_t n = static_cast<std::uint32_t>(M / 2);
    const auto& pat = skeleton_patterns();

    Circuit c(static_cast<std::uint32_t>(M));
    std::size_t est_gates = 0;
    for (const auto& round : round_robin_pairs(n)) est_gates += round.size();
    c.gates.reserve(est_gates * (pat.pair4.size() * 16 + 2 * pat.single2.size() * 7));

    const double theta = 0.1;  // placement only; depth ignores angles
    for (const auto& round : round_robin_pairs(n)) {
        for (const auto& [p, q] : round) {
            const std::vector<std::uint32_t> quad = {2 * p, 2 * p + 1, 2 * q, 2 * q + 1};
            for (const auto& s : pat.pair4) append_remapped(c, s, quad, theta);
        }
        for (const auto& [p, q] : round) {
            const std::vector<std::uint32_t> alpha = {2 * p, 2 * q};
            const std::vector<std::uint32_t> beta = {2 * p + 1, 2 * q + 1};
            for (const auto& s : pat.single2) append_remapped(c, s, alpha, theta);
            for (const auto& s : pat.single2) append_remapped(c, s, beta, theta);
        }
    }
    return {k * schedule_depth(c), k * schedule_two_qubit_depth(c)};
}

std::size_t estimate_kupccgsd_depth(std::size_t M, std::size_t k) {
    return estimate_kupccgsd_depth_detail(M, k).depth;
}

// ---------------------------------------------------------------------------
// Netlist serialization
// ---------------------------------------------------------------------------

std::string serialize_netlist(const Circuit& c) {
    std::ostringstream os;
    os.precision(17);
    os << "qubits " << c.width << "\n";
    for (const auto& g : c.gates) {
        switch (g.kind) {
            case GateKind::kH: os << "h " << g.q0 << "\n"; break;
            case GateKind::kYBasis: os << "ybasis " << g.q0 << "\n"; break;
            case GateKind::kYBasisInv: os << "ybasisinv " << g.q0 << "\n"; break;
            case GateKind::kX: os << "x " << g.q0 << "\n"; break;
            case GateKind::kZ: os << "z " << g.q0 << "\n"; break;
            case GateKind::kRZ: os << "rz " << g.q0 << " " << g.angle << "\n"; break;
            case GateKind::kCNOT: os << "cnot " << g.q0 << " " << g.q1 << "\n"; break;
        }
    }
    return os.str();
}

Circuit parse_netlist(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;
    Circuit c(0);
    bool have_width = false;
    while (std::getline(is, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) continue;
        if (op == "qubits") {
            std::uint32_t w;
            if (!(ls >> w)) throw ParseError("bad qubits line", line_no);
            c.width = w;
            have_width = true;
            continue;
        }
        if (!have_width) throw ParseError("netlist must start with 'qubits N'", line_no);
        try {
            if (op == "h" || op == "ybasis" || op == "ybasisinv" || op == "x" ||
                op == "z") {
                std::uint32_t q;
                if (!(ls >> q)) throw ParseError("missing qubit", line_no);
                if (op == "h") c.h(q);
                else if (op == "ybasis") c.y_basis(q);
                else if (op == "ybasisinv") c.y_basis_inv(q);
                else if (op == "x") c.x(q);
                else c.z(q);
            } else if (op == "rz") {
                std::uint32_t q;
                double a;
                if (!(ls >> q >> a)) throw ParseError("bad rz line", line_no);
                c.rz(q, a);
            } else if (op == "cnot") {
                std::uint32_t a, b;
                if (!(ls >> a >> b)) throw ParseError("bad cnot line", line_no);
                c.cnot(a, b);
            } else {
                throw ParseError("unknown gate '" + op + "'", line_no);
            }
        } catch (const DomainError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return c;
}

}  // namespace qpept
