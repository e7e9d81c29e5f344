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

#ifndef VDFGATE_CRYPTO_HPP_
#define VDFGATE_CRYPTO_HPP_

#include <array>
#include <cstddef>

#include "vdfgate/bytes.hpp"

namespace vdfgate::crypto {

inline constexpr std::size_t kDigestSize = 32;
using Digest = std::array<std::uint8_t, kDigestSize>;

Digest sha256(BytesView msg);

// Counter-mode stream over SHA-256: block i is SHA256(msg || be32(i)).
// Returns the first n_bytes of block 0 || block 1 || ...
Bytes hash_stream(BytesView msg, std::size_t n_bytes);

// HMAC-SHA256 per FIPS 198 / RFC 2104 (keys longer than the 64-byte
// block are hashed first).
Digest hmac_sha256(BytesView key, BytesView msg);

bool constant_time_equal(BytesView a, BytesView b);

inline Bytes digest_bytes(const Digest& d) { return Bytes(d.begin(), d.end()); }

}  // namespace vdfgate::crypto

#endif  // VDFGATE_CRYPTO_HPP_
