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

#include "domlab/vertex_set.h"

#include <sstream>

#include "domlab/errors.h"

namespace domlab {

namespace {

void check_label(int v) {
  if (v < 0 || v >= kMaxVertices) {
    throw CapacityError("vertex label " + std::to_string(v) +
                        " outside [0, " + std::to_string(kMaxVertices) + ")");
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    check_label(v);
    insert(v);
  }
}

VertexSet VertexSet::FromVertices(std::span<const int> vertices) {
  VertexSet s;
  for (int v : vertices) {
    check_label(v);
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::Prefix(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("prefix length " + std::to_string(n) +
                        " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
  VertexSet s;
  for (int i = 0; i < kSetWords; ++i) {
    const int lo = i * 64;
    if (n >= lo + 64) {
      s.words_[i] = ~std::uint64_t{0};
    } else if (n > lo) {
      s.words_[i] = (std::uint64_t{1} << (n - lo)) - 1;
    }
  }
  return s;
}

int VertexSet::first() const {
  for (int i = 0; i < kSetWords; ++i) {
    if (words_[i] != 0) return i * 64 + std::countr_zero(words_[i]);
  }
  return -1;
}

int VertexSet::last() const {
  for (int i = kSetWords - 1; i >= 0; --i) {
    if (words_[i] != 0) return i * 64 + 63 - std::countl_zero(words_[i]);
  }
  return -1;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  // The first differing vertex x decides: the set holding x is smaller iff
  // the other set still has some element beyond x.
  for (int i = 0; i < kSetWords; ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const int x = i * 64 + std::countr_zero(diff);
    const bool a_has = a.contains(x);
    const VertexSet& other = a_has ? b : a;
    const bool other_continues = other.last() > x;
    if (a_has) {
      return other_continues ? std::strong_ordering::less
                             : std::strong_ordering::greater;
    }
    return other_continues ? std::strong_ordering::greater
                           : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out << ',';
    out << v;
    first = false;
  });
  out << '}';
  return out.str();
}

}  // namespace domlab
