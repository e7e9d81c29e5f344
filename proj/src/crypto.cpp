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

#include "vdfgate/crypto.hpp"

#include <openssl/sha.h>

#include <cstring>

namespace vdfgate::crypto {

Digest sha256(BytesView msg) {
  Digest out;
  SHA256(msg.data(), msg.size(), out.data());
  return out;
}

Bytes hash_stream(BytesView msg, std::size_t n_bytes) {
  Bytes out;
  out.reserve(n_bytes);
  Bytes block_input(msg.begin(), msg.end());
  block_input.resize(msg.size() + 4);
  for (std::uint32_t counter = 0; out.size() < n_bytes; ++counter) {
    block_input[msg.size() + 0] = static_cast<std::uint8_t>(counter >> 24);
    block_input[msg.size() + 1] = static_cast<std::uint8_t>(counter >> 16);
    block_input[msg.size() + 2] = static_cast<std::uint8_t>(counter >> 8);
    block_input[msg.size() + 3] = static_cast<std::uint8_t>(counter);
    Digest d = sha256(block_input);
    std::size_t take = std::min(kDigestSize, n_bytes - out.size());
    out.insert(out.end(), d.begin(), d.begin() + take);
  }
  return out;
}

Digest hmac_sha256(BytesView key, BytesView msg) {
  constexpr std::size_t kBlockSize = 64;
  Bytes k(key.begin(), key.end());
  if (k.size() > kBlockSize) {
    Digest kd = sha256(k);
    k.assign(kd.begin(), kd.end());
  }
  k.resize(kBlockSize, 0x00);

  Bytes inner(kBlockSize);
  Bytes outer(kBlockSize);
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    inner[i] = k[i] ^ 0x36;
    outer[i] = k[i] ^ 0x5c;
  }
  inner.insert(inner.end(), msg.begin(), msg.end());
  Digest inner_digest = sha256(inner);
  outer.insert(outer.end(), inner_digest.begin(), inner_digest.end());
  return sha256(outer);
}

bool constant_time_equal(BytesView a, BytesView b) {
  if (a.size() != b.size()) return false;
  unsigned char acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc |= static_cast<unsigned char>(a[i] ^ b[i]);
  }
  return acc == 0;
}

}  // namespace vdfgate::crypto
