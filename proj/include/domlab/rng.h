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

#ifndef DOMLAB_RNG_H_
#define DOMLAB_RNG_H_

#include <cstdint>

namespace domlab {

// SplitMix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Counter-based 64-bit generator. The i-th output (i = 0, 1, ...) is
//
//   key    = mix64(master_seed ^ mix64(stream_id + 0x632BE59BD9B4E019))
//   out(i) = mix64(key + (i + 1) * 0x9E3779B97F4A7C15)      (mod 2^64)
//
// so the sequence depends only on (master_seed, stream_id). Uniform doubles
// take the top 53 bits: (out >> 11) * 2^-53, giving values in [0, 1).
// This contract is frozen: golden graphs depend on it.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  std::uint64_t next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kGamma);
  }
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }
  // Uniform integer in [0, bound); bound must be positive. Rejection
  // sampling, so exact and portable.
  std::uint64_t uniform_below(std::uint64_t bound);

  // A sibling stream sharing the master seed.
  RngStream with_stream(std::uint64_t stream_id) const {
    return RngStream(master_seed_, stream_id);
  }

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  std::uint64_t draws() const { return counter_; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace domlab

#endif  // DOMLAB_RNG_H_
