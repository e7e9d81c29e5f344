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

#ifndef VDFGATE_BIGINT_HPP_
#define VDFGATE_BIGINT_HPP_

#include <gmpxx.h>

#include <cstdint>

#include "vdfgate/bytes.hpp"
#include "vdfgate/rng.hpp"

namespace vdfgate {

using Bigint = mpz_class;

// Bit length of |v|; 0 for v == 0.
std::size_t bit_length(const Bigint& v);

// Minimal unsigned big-endian encoding; empty for 0. v must be >= 0.
Bytes bigint_to_bytes(const Bigint& v);
Bigint bigint_from_bytes(BytesView b);

// Uniform value with at most `bits` bits.
Bigint random_bits(RandomSource& rng, std::size_t bits);

}  // namespace vdfgate

#endif  // VDFGATE_BIGINT_HPP_
