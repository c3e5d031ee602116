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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpept {

/// Base class for all qpept errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (FCIDUMP, roster, scan, ...). Carries a 1-based
/// line number when the failing line is known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Input is syntactically valid but self-contradictory (e.g. duplicate
/// integral entries that disagree beyond tolerance).
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// Request violates a domain precondition (electron count, orbital range,
/// odd M where even is required, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Element or basis set missing from the basis catalog.
class CatalogError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Problem exceeds a configured resource cap (simulator width, FCI basis).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Least-squares fit cannot be performed (rank deficiency, too few points).
class FitError : public Error {
public:
    using Error::Error;
};

}  // namespace qpept
