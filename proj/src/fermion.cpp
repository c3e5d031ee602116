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

#include "qpept/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "qpept/chemio.hpp"
#include "qpept/errors.hpp"

namespace qpept {

namespace {

bool is_canonical(const std::vector<LadderOp>& ops) {
    for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
        const auto& a = ops[i];
        const auto& b = ops[i + 1];
        if (!a.dagger && b.dagger) return false;
        if (a.dagger && b.dagger && a.index <= b.index) return false;
        if (!a.dagger && !b.dagger && a.index >= b.index) return false;
    }
    return true;
}

}  // namespace

void FermionOperator::add_term(const std::vector<LadderOp>& ops,
                               std::complex<double> coeff) {
    if (coeff == std::complex<double>{0, 0}) return;

    // Worklist of (factor sequence, coefficient) pending canonicalization.
    std::deque<std::pair<std::vector<LadderOp>, std::complex<double>>> work;
    work.emplace_back(ops, coeff);

    while (!work.empty()) {
        auto [seq, c] = std::move(work.front());
        work.pop_front();

        if (is_canonical(seq)) {
            auto it = terms_.find(seq);
            if (it == terms_.end()) {
                terms_.emplace(std::move(seq), c);
            } else {
                it->second += c;
                if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
            }
            continue;
        }

        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            LadderOp a = seq[i];
            LadderOp b = seq[i + 1];
            if (!a.dagger && b.dagger) {
                // a_i a^dag_j = delta_ij - a^dag_j a_i
                if (a.index == b.index) {
                    std::vector<LadderOp> contracted(seq);
                    contracted.erase(contracted.begin() + i, contracted.begin() + i + 2);
                    work.emplace_back(std::move(contracted), c);
                }
                std::swap(seq[i], seq[i + 1]);
                work.emplace_back(std::move(seq), -c);
                break;
            }
            if (a.dagger == b.dagger &&
                ((a.dagger && a.index <= b.index) || (!a.dagger && a.index >= b.index))) {
                if (a.index == b.index) {
                    // a^dag a^dag or a a on the same mode vanishes
                    seq.clear();
                    c = 0;
                    break;
                }
                std::swap(seq[i], seq[i + 1]);
                work.emplace_back(std::move(seq), -c);
                break;
            }
        }
    }
}

std::size_t FermionOperator::max_mode() const {
    std::size_t m = 0;
    for (const auto& [ops, c] : terms_)
        for (const auto& op : ops) m = std::max<std::size_t>(m, op.index + 1);
    return m;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& o) {
    for (const auto& [ops, c] : o.terms_) add_term(ops, c);
    return *this;
}

FermionOperator& FermionOperator::operator*=(std::complex<double> s) {
    if (s == std::complex<double>{0, 0}) {
        terms_.clear();
        return *this;
    }
    for (auto& [ops, c] : terms_) c *= s;
    return *this;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
    FermionOperator out;
    for (const auto& [ops_a, ca] : a.terms_) {
        for (const auto& [ops_b, cb] : b.terms_) {
            std::vector<LadderOp> prod(ops_a);
            prod.insert(prod.end(), ops_b.begin(), ops_b.end());
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

FermionOperator FermionOperator::adjoint() const {
    FermionOperator out;
    for (const auto& [ops, c] : terms_) {
        std::vector<LadderOp> rev(ops.rbegin(), ops.rend());
        for (auto& op : rev) op.dagger = !op.dagger;
        out.add_term(rev, std::conj(c));
    }
    return out;
}

bool FermionOperator::is_hermitian(double tol) const {
    FermionOperator adj = adjoint();
    if (adj.terms_.size() != terms_.size()) return false;
    for (const auto& [ops, c] : terms_) {
        auto it = adj.terms_.find(ops);
        if (it == adj.terms_.end() || std::abs(it->second - c) > tol) return false;
    }
    return true;
}

std::string FermionOperator::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [ops, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
        for (const auto& op : ops) os << " a" << (op.dagger ? "^" : "_") << op.index;
    }
    if (first) os << "0";
    return os.str();
}

FermionOperator normal_order_term(const LadderTerm& term) {
    FermionOperator out;
    out.add_term(term.ops, term.coeff);
    return out;
}

FermionOperator normal_order(const FermionOperator& op) {
    FermionOperator out;
    for (const auto& [ops, c] : op.terms()) out.add_term(ops, c);
    return out;
}

FermionOperator commutator(const FermionOperator& a, const FermionOperator& b) {
    FermionOperator ab = a * b;
    FermionOperator ba = b * a;
    ba *= -1.0;
    ab += ba;
    return ab;
}

FermionOperator number_operator(std::size_t n_modes) {
    FermionOperator n;
    for (std::uint32_t i = 0; i < n_modes; ++i)
        n.add_term({{i, true}, {i, false}}, 1.0);
    return n;
}

FermionOperator sz_operator(std::size_t n_modes) {
    FermionOperator sz;
    for (std::uint32_t i = 0; i < n_modes; ++i)
        sz.add_term({{i, true}, {i, false}}, (i % 2 == 0) ? 0.5 : -0.5);
    return sz;
}

FermionOperator build_hamiltonian(const MolecularIntegrals& ints) {
    const std::size_t m = ints.m_spatial;
    FermionOperator h;
    if (ints.e_core != 0.0) h.add_term({}, ints.e_core);

    for (std::uint32_t p = 0; p < m; ++p) {
        for (std::uint32_t q = 0; q < m; ++q) {
            double val = ints.one_body(p, q);
            if (std::abs(val) < FermionOperator::kPruneThreshold) continue;
            for (std::uint32_t s = 0; s < 2; ++s)
                h.add_term({{2 * p + s, true}, {2 * q + s, false}}, val);
        }
    }

    for (std::uint32_t p = 0; p < m; ++p) {
        for (std::uint32_t q = 0; q < m; ++q) {
            for (std::uint32_t r = 0; r < m; ++r) {
                for (std::uint32_t s = 0; s < m; ++s) {
                    double val = ints.two_body(p, q, r, s);
                    if (std::abs(val) < FermionOperator::kPruneThreshold) continue;
                    // 1/2 (pq|rs) a^dag_{p,s1} a^dag_{r,s2} a_{s,s2} a_{q,s1}
                    for (std::uint32_t s1 = 0; s1 < 2; ++s1) {
                        for (std::uint32_t s2 = 0; s2 < 2; ++s2) {
                            h.add_term({{2 * p + s1, true},
                                        {2 * r + s2, true},
                                        {2 * s + s2, false},
                                        {2 * q + s1, false}},
                                       0.5 * val);
                        }
                    }
                }
            }
        }
    }
    return h;
}

}  // namespace qpept
