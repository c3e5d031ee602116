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

#include <iosfwd>
#include <string>
#include <vector>

#include "qpept/chemio.hpp"

namespace qpept {

/// One molecule row of the resource report.
struct ReportRow {
    std::string label;
    std::string formula;
    std::string basis;
    std::string ansatz;
    std::size_t m_qubits = 0;
    std::size_t eta = 0;
    std::size_t naive_gates = 0;      // UCCSD, JW ladders included
    std::size_t optimized_gates = 0;  // UCCSD, ladders cancelled
    std::size_t kupccgsd_gates = 0;   // k = 1
    std::size_t depth = 0;            // k-UpCCGSD skeleton, all gates
    std::size_t depth_two_qubit = 0;  // CNOT layers only
};

std::vector<ReportRow> build_resource_report(const std::vector<RosterEntry>& roster,
                                             const BasisCatalog& catalog,
                                             const std::string& basis_name,
                                             bool active_space, bool with_depth);

std::string report_csv(const std::vector<ReportRow>& rows);
std::string report_json(const std::vector<ReportRow>& rows);

/// Exit codes: 0 success, 1 usage, 2 input/parse, 3 domain/capacity.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpept
