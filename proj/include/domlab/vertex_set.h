// Copyright 2026 The domlab Authors
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

#ifndef DOMLAB_VERTEX_SET_H_
#define DOMLAB_VERTEX_SET_H_

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace domlab {

// Largest vertex count any Graph may have. Graphs with n <= 64 take the
// single-word fast path in the solver; larger graphs use all words.
inline constexpr int kMaxVertices = 256;
inline constexpr int kSetWords = kMaxVertices / 64;

// Fixed-capacity bitmask over vertex labels 0..kMaxVertices-1.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices);

  static VertexSet FromVertices(std::span<const int> vertices);
  // Vertices 0..n-1.
  static VertexSet Prefix(int n);
  static constexpr VertexSet FromWord(std::uint64_t low) {
    VertexSet s;
    s.words_[0] = low;
    return s;
  }

  bool contains(int v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  // Smallest member, or -1 when empty.
  int first() const;
  // Largest member, or -1 when empty.
  int last() const;
  std::vector<int> members() const;

  std::uint64_t word(int i) const { return words_[i]; }

  bool is_subset_of(const VertexSet& other) const {
    for (int i = 0; i < kSetWords; ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (int i = 0; i < kSetWords; ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kSetWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kSetWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kSetWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Orders sets by their sorted member lists, lexicographically.
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b);

  template <class F>
  void for_each(F&& f) const {
    for (int i = 0; i < kSetWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

 private:
  std::array<std::uint64_t, kSetWords> words_{};
};

// "{0,2,5}".
std::string to_string(const VertexSet& s);

}  // namespace domlab

#endif  // DOMLAB_VERTEX_SET_H_
