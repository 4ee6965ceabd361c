// Copyright 2026 The tjoin Authors
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

#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tjoin {

/// Fixed-width bit vector used for vertex and edge subsets.
template <std::size_t Words>
class BitSet {
 public:
  static constexpr std::size_t kCapacity = Words * 64;

  constexpr BitSet() = default;

  static constexpr BitSet single(std::size_t i) {
    BitSet s;
    s.insert(i);
    return s;
  }

  /// The set {0, ..., n-1}.
  static constexpr BitSet prefix(std::size_t n) {
    BitSet s;
    for (std::size_t w = 0; w < Words && n > 0; ++w) {
      if (n >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return s;
  }

  template <typename Range>
  static BitSet of(const Range& items) {
    BitSet s;
    for (auto i : items) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  static BitSet of(std::initializer_list<int> items) {
    BitSet s;
    for (int i : items) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  constexpr bool contains(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  constexpr void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  constexpr std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  constexpr bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest element; the set must be nonempty.
  constexpr std::size_t min() const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return kCapacity;
  }

  constexpr bool subset_of(const BitSet& other) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  constexpr bool intersects(const BitSet& other) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::size_t w = 0; w < Words; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  constexpr std::uint64_t word(std::size_t w) const { return words_[w]; }

  constexpr BitSet& operator|=(const BitSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  constexpr BitSet& operator&=(const BitSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  constexpr BitSet& operator^=(const BitSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  constexpr BitSet& operator-=(const BitSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend constexpr BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend constexpr BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend constexpr BitSet operator^(BitSet a, const BitSet& b) { return a ^= b; }
  friend constexpr BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }
  friend constexpr bool operator==(const BitSet&, const BitSet&) = default;

  /// Lexicographic order on the sorted element sequences.
  friend bool lex_less(const BitSet& a, const BitSet& b) { return a.elements() < b.elements(); }

  /// Total order for use as a map key; unrelated to lexicographic element order.
  friend constexpr bool operator<(const BitSet& a, const BitSet& b) { return a.words_ < b.words_; }

 private:
  std::array<std::uint64_t, Words> words_{};
};

/// "{0,2,5}"
template <std::size_t Words>
std::string to_string(const BitSet<Words>& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

using VertexSet = BitSet<1>;
using EdgeSet = BitSet<2>;

}  // namespace tjoin
