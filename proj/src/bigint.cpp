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

#include "vdfgate/bigint.hpp"

#include <stdexcept>

namespace vdfgate {

std::size_t bit_length(const Bigint& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

Bytes bigint_to_bytes(const Bigint& v) {
  if (sgn(v) < 0) throw std::invalid_argument("bigint_to_bytes: negative value");
  if (v == 0) return {};
  std::size_t count = 0;
  Bytes out((bit_length(v) + 7) / 8);
  mpz_export(out.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  out.resize(count);
  return out;
}

Bigint bigint_from_bytes(BytesView b) {
  Bigint v;
  if (!b.empty()) {
    mpz_import(v.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
  }
  return v;
}

Bigint random_bits(RandomSource& rng, std::size_t bits) {
  if (bits == 0) return 0;
  Bytes raw = rng.bytes((bits + 7) / 8);
  Bigint v = bigint_from_bytes(raw);
  std::size_t excess = raw.size() * 8 - bits;
  if (excess > 0) {
    mpz_tdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), excess);
  }
  return v;
}

}  // namespace vdfgate
