// Copyright 2026 The conekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONEKIT_BITS_HPP
#define CONEKIT_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "conekit/errors.hpp"

namespace conekit {

/// Fixed-length GF(2) vector packed into 64-bit words.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
    }

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    const std::vector<uint64_t> &words() const {
        return words_;
    }

    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value) {
        uint64_t m = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= m;
        } else {
            words_[k >> 6] &= ~m;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    size_t popcount() const {
        size_t n = 0;
        for (uint64_t w : words_) {
            n += std::popcount(w);
        }
        return n;
    }
    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    bool none() const {
        return !any();
    }

    BitVec &operator^=(const BitVec &other) {
        check_same(other);
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] ^= other.words_[k];
        }
        return *this;
    }
    BitVec &operator&=(const BitVec &other) {
        check_same(other);
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] &= other.words_[k];
        }
        return *this;
    }
    BitVec &operator|=(const BitVec &other) {
        check_same(other);
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] |= other.words_[k];
        }
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }
    friend BitVec operator&(BitVec a, const BitVec &b) {
        a &= b;
        return a;
    }
    friend BitVec operator|(BitVec a, const BitVec &b) {
        a |= b;
        return a;
    }

    /// Parity of the overlap with `other`.
    bool dot(const BitVec &other) const {
        check_same(other);
        uint64_t acc = 0;
        for (size_t k = 0; k < words_.size(); k++) {
            acc ^= words_[k] & other.words_[k];
        }
        return std::popcount(acc) & 1;
    }

    /// True if every set bit of this vector is also set in `other`.
    bool is_subset_of(const BitVec &other) const {
        check_same(other);
        for (size_t k = 0; k < words_.size(); k++) {
            if (words_[k] & ~other.words_[k]) {
                return false;
            }
        }
        return true;
    }
    bool intersects(const BitVec &other) const {
        check_same(other);
        for (size_t k = 0; k < words_.size(); k++) {
            if (words_[k] & other.words_[k]) {
                return true;
            }
        }
        return false;
    }

    /// Index of the lowest set bit, or size() when empty.
    size_t first_set() const {
        for (size_t k = 0; k < words_.size(); k++) {
            if (words_[k]) {
                return k * 64 + std::countr_zero(words_[k]);
            }
        }
        return num_bits_;
    }

    std::vector<size_t> set_bits() const {
        std::vector<size_t> out;
        for (size_t k = 0; k < words_.size(); k++) {
            uint64_t w = words_[k];
            while (w) {
                out.push_back(k * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    bool operator==(const BitVec &other) const = default;
    bool operator<(const BitVec &other) const {
        if (num_bits_ != other.num_bits_) {
            return num_bits_ < other.num_bits_;
        }
        return words_ < other.words_;
    }

    size_t hash() const {
        size_t h = num_bits_;
        for (uint64_t w : words_) {
            h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

   private:
    void check_same(const BitVec &other) const {
        if (num_bits_ != other.num_bits_) {
            throw DimensionError("bit vectors of different lengths");
        }
    }

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVecHash {
    size_t operator()(const BitVec &v) const {
        return v.hash();
    }
};

}  // namespace conekit

#endif
