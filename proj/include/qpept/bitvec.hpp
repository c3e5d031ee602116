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
#include <compare>
#include <cstdint>
#include <vector>

namespace qpept {

/// Fixed-length bit vector packed into 64-bit words. Bits beyond size()
/// are kept zero so word-wise operations stay well defined.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    std::size_t num_words() const { return w_.size(); }
    std::uint64_t word(std::size_t i) const { return w_[i]; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            if (auto c = a.w_[i] <=> b.w_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    /// popcount(a & b), without materializing the intersection.
    static std::size_t and_popcount(const BitVec& a, const BitVec& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            c += std::popcount(a.w_[i] & b.w_[i]);
        return c;
    }

    /// parity of popcount(a & b); the GF(2) inner product.
    static bool and_parity(const BitVec& a, const BitVec& b) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i) acc ^= a.w_[i] & b.w_[i];
        return std::popcount(acc) & 1u;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace qpept
