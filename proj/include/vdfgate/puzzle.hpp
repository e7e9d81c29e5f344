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

#ifndef VDFGATE_PUZZLE_HPP_
#define VDFGATE_PUZZLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "vdfgate/vdf.hpp"

// Client-puzzle scheme on top of the delay function. Interactive flow: the
// server samples a prime challenge and the client answers with (y, pi) for
// the generator hashed from the exchange identity tuple. Non-interactive
// flow: the client derives the instance from a randomness beacon and the
// challenge prime is hash-bound to (g, y), so a solver cannot grind for an
// easy challenge or reuse a stale proof.

namespace vdfgate::puzzle {

inline constexpr std::size_t kMaxIdentityBytes = 64;
inline constexpr std::size_t kNonceBytes = 16;
inline constexpr std::size_t kBeaconRandomnessBytes = 32;
inline constexpr std::size_t kRequestDigestBytes = 32;

struct SpaceDescriptors {
  std::string puzzle_space = "prime(security_lambda)";
  std::string solution_space = "group-element-pair";
  std::string difficulty_space;  // "{T}" once setup fixes the difficulty
  std::string input_space = "byte-string";

  bool operator==(const SpaceDescriptors&) const = default;
};

struct PublicParams {
  vdf::GroupParams group;
  vdf::Difficulty difficulty;
  SpaceDescriptors spaces;

  Bytes serialize() const;
  static PublicParams deserialize(BytesView data);
  // SHA-256 of the serialized form, hex.
  std::string fingerprint() const;

  bool operator==(const PublicParams& other) const {
    return group == other.group && difficulty.steps == other.difficulty.steps &&
           spaces == other.spaces;
  }
};

struct Puzzle {
  vdf::ChallengePrime challenge;

  Bytes serialize() const;
  static Puzzle deserialize(BytesView data);
};

struct Solution {
  vdf::GroupElement y;
  vdf::GroupElement proof;

  Bytes serialize() const;
  static Solution deserialize(BytesView data);
};

struct PuzzleInput {
  Bytes id_client;     // <= 64 bytes, nonempty
  Bytes id_server;     // <= 64 bytes, nonempty
  Bytes nonce_client;  // exactly 16 bytes
  Bytes nonce_server;  // exactly 16 bytes

  // Throws std::invalid_argument on bound violations.
  void validate() const;
  // Injective length-prefixed encoding; also what gets hashed to the group.
  Bytes canonical_encoding() const;
  static PuzzleInput from_canonical(BytesView data);

  bool operator==(const PuzzleInput&) const = default;
};

struct BeaconValue {
  std::uint64_t epoch = 0;
  Bytes randomness;  // exactly 32 bytes
};

PublicParams setup(std::uint32_t security_lambda, std::uint32_t modulus_bits,
                   vdf::Difficulty difficulty,
                   std::optional<BytesView> seed = std::nullopt);

Puzzle gen_puz(const PublicParams& pp, const PuzzleInput& input,
               RandomSource& rng);

Solution find_sol(const PublicParams& pp, const PuzzleInput& input,
                  const Puzzle& puzzle);

bool ver_sol(const PublicParams& pp, const PuzzleInput& input,
             const Puzzle& puzzle, const Solution& solution);

// ---- Non-interactive mode ----

// (epoch, beacon randomness, client id, request digest), length-prefixed
// where variable. The digest ties the solution to one concrete request.
Bytes ni_derive_input(const BeaconValue& beacon, BytesView id_client,
                      BytesView request_digest);

// Epoch embedded in a derived input, or nullopt if too short.
std::optional<std::uint64_t> ni_input_epoch(BytesView derived_input);

// g = H(derived_input), y = g^(2^T), l = hash_to_prime(enc(g) || enc(y)),
// pi = g^(2^T div l). Deterministic.
std::pair<Puzzle, Solution> ni_solve(const PublicParams& pp,
                                     BytesView derived_input);

bool ni_verify(const PublicParams& pp, BytesView derived_input,
               const Puzzle& puzzle, const Solution& solution,
               std::span<const std::uint64_t> beacon_window);

}  // namespace vdfgate::puzzle

#endif  // VDFGATE_PUZZLE_HPP_
