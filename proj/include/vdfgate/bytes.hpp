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

#ifndef VDFGATE_BYTES_HPP_
#define VDFGATE_BYTES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vdfgate {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view s);
std::string to_string(BytesView b);

std::string hex_encode(BytesView b);
// Throws std::invalid_argument on odd length or non-hex characters.
Bytes hex_decode(std::string_view hex);

inline Bytes concat(BytesView a, BytesView b) {
  Bytes out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace vdfgate

#endif  // VDFGATE_BYTES_HPP_
