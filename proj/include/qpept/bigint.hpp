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

#include <bit>
#include <cstdint>
#include <vector>

namespace qpept {

/// Unsigned arbitrary-precision integer with just enough arithmetic for
/// exact binomial coefficients (addition and bit inspection).
class BigUint {
public:
    BigUint() : limbs_{0} {}
    explicit BigUint(std::uint64_t v) : limbs_{v} {}

    BigUint& operator+=(const BigUint& o) {
        if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        unsigned carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t b = i < o.limbs_.size() ? o.limbs_[i] : 0;
            std::uint64_t s = limbs_[i] + b;
            unsigned c1 = s < limbs_[i];
            std::uint64_t s2 = s + carry;
            unsigned c2 = s2 < s;
            limbs_[i] = s2;
            carry = c1 | c2;
        }
        if (carry) limbs_.push_back(1);
        return *this;
    }
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

    bool is_zero() const {
        for (auto l : limbs_)
            if (l) return false;
        return true;
    }

    /// Number of bits in the value; bit_length(0) == 0, bit_length(1) == 1.
    std::size_t bit_length() const {
        for (std::size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i]) return i * 64 + (64 - std::countl_zero(limbs_[i]));
        return 0;
    }

    bool is_power_of_two() const {
        std::size_t total = 0;
        for (auto l : limbs_) total += std::popcount(l);
        return total == 1;
    }

private:
    std::vector<std::uint64_t> limbs_;
};

/// Exact C(n, k) via Pascal's triangle (addition only).
inline BigUint big_binomial(unsigned n, unsigned k) {
    if (k > n) return BigUint(0);
    std::vector<BigUint> row(n + 1);
    row[0] = BigUint(1);
    for (unsigned m = 1; m <= n; ++m)
        for (unsigned j = m; j > 0; --j) row[j] += row[j - 1];
    return row[k];
}

}  // namespace qpept
