// Copyright 2026 The vdfgate Authors
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

#ifndef VDFGATE_RNG_HPP_
#define VDFGATE_RNG_HPP_

#include <cstdint>
#include <string_view>

#include "vdfgate/bytes.hpp"
#include "vdfgate/crypto.hpp"

namespace vdfgate {

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  Bytes bytes(std::size_t n);
  // Uniform in [0, bound); bound must be > 0.
  std::uint64_t uniform_u64(std::uint64_t bound);
  // Uniform in [0, 1), 53 bits of resolution.
  double uniform_double();
  bool bernoulli(double p);
};

// Operating-system entropy.
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

// Deterministic SHA-256 counter stream; identical output across runs and
// platforms for the same (seed, stream_id).
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(BytesView seed, std::uint64_t stream_id = 0);
  explicit SeededRandom(std::string_view seed, std::uint64_t stream_id = 0);
  explicit SeededRandom(std::uint64_t seed, std::uint64_t stream_id = 0);

  void fill(std::span<std::uint8_t> out) override;

 private:
  void refill();

  crypto::Digest key_{};
  std::uint64_t stream_id_ = 0;
  std::uint64_t counter_ = 0;
  crypto::Digest buffer_{};
  std::size_t pos_ = crypto::kDigestSize;
};

}  // namespace vdfgate

#endif  // VDFGATE_RNG_HPP_
