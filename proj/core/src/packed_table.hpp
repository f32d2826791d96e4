// Copyright 2026 The Hyperent Authors.
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

#ifndef HYPERENT_PACKED_TABLE_HPP
#define HYPERENT_PACKED_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperent/hypergraph.hpp"

namespace hyperent::detail {

// Bit-packed table over n variables: bit x (globally) is the entry at input
// x, 64 entries per word. Within a word, variables 1..6 select fixed
// periodic masks; variables 7..n select whole words by block index.

inline constexpr std::uint64_t kVarMask[6] = {
    0xAAAA'AAAA'AAAA'AAAAull, 0xCCCC'CCCC'CCCC'CCCCull, 0xF0F0'F0F0'F0F0'F0F0ull,
    0xFF00'FF00'FF00'FF00ull, 0xFFFF'0000'FFFF'0000ull, 0xFFFF'FFFF'0000'0000ull,
};

inline std::size_t word_count(int n) {
    return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
}

// Valid bits of the single partial word when n < 6; all ones otherwise.
inline std::uint64_t partial_word_mask(int n) {
    return n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::uint64_t{1} << n)) - 1);
}

// XORs the table of the monomial AND_{i in e} x_i into `words` (the empty
// monomial is the constant 1 and flips every valid entry).
inline void xor_monomial(std::vector<std::uint64_t>& words, int n, EdgeMask e) {
    std::uint64_t in_word = partial_word_mask(n);
    for (int i = 0; i < 6 && i < n; ++i) {
        if ((e >> i) & 1) {
            in_word &= kVarMask[i];
        }
    }
    const std::uint64_t block_sel = e >> 6;
    const std::uint64_t blocks = words.size();
    for (std::uint64_t b = 0; b < blocks; ++b) {
        if ((b & block_sel) == block_sel) {
            words[b] ^= in_word;
        }
    }
}

}  // namespace hyperent::detail

#endif
