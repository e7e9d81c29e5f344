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

#ifndef VDFGATE_VDF_HPP_
#define VDFGATE_VDF_HPP_

#include <cstdint>
#include <optional>

#include "vdfgate/bigint.hpp"
#include "vdfgate/bytes.hpp"
#include "vdfgate/rng.hpp"

// Repeated-squaring delay function over an RSA group of unknown order, with
// succinct proofs: the prover answers a prime challenge l with
// pi = g^(2^T div l), and the verifier checks y = pi^l * g^(2^T mod l) using
// O(log T) group operations. Hashed generators are squared so everything
// lives in the quadratic residues, which kills the (y, pi) sign malleability
// that the order-2 element -1 would otherwise allow.

namespace vdfgate::vdf {

struct GroupParams {
  Bigint modulus;                  // odd composite, factors discarded
  std::uint32_t modulus_bits = 0;  // bit length of modulus
  std::uint32_t security_lambda = 0;

  // Validates and fills modulus_bits from the value. Throws
  // std::invalid_argument for even / prime / tiny moduli or lambda < 3.
  static GroupParams from_modulus(Bigint modulus, std::uint32_t security_lambda);

  Bytes serialize() const;
  // Throws codec::DecodeError on malformed input.
  static GroupParams deserialize(BytesView data);

  bool operator==(const GroupParams&) const = default;
};

struct GroupElement {
  Bigint value;

  bool operator==(const GroupElement&) const = default;
};

struct Difficulty {
  std::uint64_t steps = 0;  // number of sequential squarings
};

struct ChallengePrime {
  Bigint value;
  std::uint32_t bits = 0;  // sampled bit length (the security lambda)
};

// Range + coprimality membership test (quadratic residuosity is not
// decidable without the factorization, so this is the "in G" check).
bool is_member(const GroupElement& g, const GroupParams& params);

// Deterministic: trial division below 2^20, then 64 Miller-Rabin rounds
// with bases derived by hashing n (error <= 2^-128).
bool is_probable_prime(const Bigint& n);

// N = p*q for distinct primes of modulus_bits/2 bits, top two bits forced so
// the product has exactly modulus_bits bits. Deterministic under `seed`.
// modulus_bits must be even and >= 16.
GroupParams generate_group(std::uint32_t modulus_bits,
                           std::uint32_t security_lambda,
                           std::optional<BytesView> seed = std::nullopt);

// g = (x mod N)^2 mod N where x is read from a SHA-256 counter stream of
// ceil((modulus_bits + 64) / 8) bytes over the input; retries with a
// counter-suffixed input until gcd(g, N) = 1 and g not in {0, 1}.
GroupElement hash_to_group(BytesView input, const GroupParams& params);

// y = g^(2^T) mod N by exactly T sequential squarings.
GroupElement vdf_evaluate(const GroupElement& g, Difficulty T,
                          const GroupParams& params);

struct ProofWithRemainder {
  GroupElement proof;
  Bigint remainder;  // 2^T mod l, a byproduct of the long division
};

// pi = g^floor(2^T / l) mod N via on-the-fly long division: the quotient is
// consumed bit by bit without ever materializing 2^T.
GroupElement vdf_prove(const GroupElement& g, Difficulty T,
                       const ChallengePrime& l, const GroupParams& params);
ProofWithRemainder vdf_prove_with_remainder(const GroupElement& g, Difficulty T,
                                            const ChallengePrime& l,
                                            const GroupParams& params);

// Membership checks plus y == pi^l * g^(2^T mod l) mod N. Cost is
// O(log T + lambda) multiplications; malformed inputs return false.
bool vdf_verify(const GroupElement& g, const GroupElement& y,
                const GroupElement& proof, Difficulty T,
                const ChallengePrime& l, const GroupParams& params);

// Rejection sampling over odd security_lambda-bit integers, top bit forced.
ChallengePrime sample_prime(std::uint32_t security_lambda, RandomSource& rng);

// Deterministic prime from hash(input || be32(counter)), first probable
// prime wins; counter bounded at 2^16.
ChallengePrime hash_to_prime(BytesView input, std::uint32_t security_lambda);

// Process-wide count of group-work entry points (hash_to_group, evaluate,
// prove, verify). Lets tests assert a rejection path did no group work.
std::uint64_t group_op_count();

}  // namespace vdfgate::vdf

#endif  // VDFGATE_VDF_HPP_
