// Copyright 2026 The drbqo Authors. All Rights Reserved.
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
// =============================================================================

#ifndef DRBQO_RNG_HPP_
#define DRBQO_RNG_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace drbqo {

/// Derives an independent stream seed from a master seed and a stream name.
/// Used so that every consumer of randomness (init designs, feature maps,
/// observation noise, ...) owns a stream that is unaffected by how much
/// randomness the other consumers draw.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::string_view name);

/// Counting random stream with portable uniform/normal/index draws.
///
/// Every draw consumes exactly one 64-bit engine output, so a stream's state
/// is fully described by (seed, draw count). That pair is what gets persisted
/// in ask-tell session files; restoring replays the count via discard().
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::string_view name);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal via the inverse CDF (Acklam's approximation plus one
  /// Halley refinement, accurate to ~1 ulp). One engine draw per variate.
  double normal();

  /// Uniform index in [0, n).
  int uniform_index(int n);

  std::uint64_t raw();

  std::uint64_t stream_seed() const { return stream_seed_; }
  std::uint64_t draw_count() const { return draw_count_; }

  /// Fast-forwards the stream by `n` draws (used when restoring state).
  void skip(std::uint64_t n);

 private:
  std::uint64_t stream_seed_;
  std::uint64_t draw_count_ = 0;
  std::mt19937_64 engine_;
};

/// Inverse standard normal CDF, exposed for tests and quantile computations.
double inverse_normal_cdf(double p);

}  // namespace drbqo

#endif  // DRBQO_RNG_HPP_
