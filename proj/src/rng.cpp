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

#include "vdfgate/rng.hpp"

#include <openssl/rand.h>

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace vdfgate {

Bytes RandomSource::bytes(std::size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

std::uint64_t RandomSource::uniform_u64(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_u64: zero bound");
  // Rejection sampling to avoid modulo bias.
  std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint8_t buf[8];
  for (;;) {
    fill(buf);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | buf[i];
    if (v < limit || limit == 0) return v % bound;
  }
}

double RandomSource::uniform_double() {
  std::uint8_t buf[8];
  fill(buf);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | buf[i];
  return static_cast<double>(v >> 11) * 0x1.0p-53;
}

bool RandomSource::bernoulli(double p) { return uniform_double() < p; }

void SystemRandom::fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw std::runtime_error("SystemRandom: RAND_bytes failed");
  }
}

SeededRandom::SeededRandom(BytesView seed, std::uint64_t stream_id)
    : key_(crypto::sha256(seed)), stream_id_(stream_id) {}

SeededRandom::SeededRandom(std::string_view seed, std::uint64_t stream_id)
    : SeededRandom(BytesView(reinterpret_cast<const std::uint8_t*>(seed.data()),
                             seed.size()),
                   stream_id) {}

SeededRandom::SeededRandom(std::uint64_t seed, std::uint64_t stream_id) {
  std::uint8_t buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
  key_ = crypto::sha256(buf);
  stream_id_ = stream_id;
}

void SeededRandom::refill() {
  Bytes msg(key_.begin(), key_.end());
  auto push_u64 = [&msg](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) msg.push_back(static_cast<std::uint8_t>(v >> (56 - 8 * i)));
  };
  push_u64(stream_id_);
  push_u64(counter_++);
  buffer_ = crypto::sha256(msg);
  pos_ = 0;
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  std::size_t written = 0;
  while (written < out.size()) {
    if (pos_ == crypto::kDigestSize) refill();
    std::size_t take = std::min(crypto::kDigestSize - pos_, out.size() - written);
    std::memcpy(out.data() + written, buffer_.data() + pos_, take);
    pos_ += take;
    written += take;
  }
}

}  // namespace vdfgate
