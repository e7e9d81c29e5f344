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

#include "vdfgate/puzzle.hpp"

#include <algorithm>
#include <stdexcept>

#include "vdfgate/codec.hpp"
#include "vdfgate/crypto.hpp"

namespace vdfgate::puzzle {

namespace {
const char kPublicParamsMagic[] = "VDFP";
const char kPuzzleMagic[] = "VDFZ";
const char kSolutionMagic[] = "VDFS";
constexpr std::uint8_t kVersion = 0x01;
}  // namespace

Bytes PublicParams::serialize() const {
  codec::Writer w;
  w.raw(std::string_view(kPublicParamsMagic, 4));
  w.u8(kVersion);
  w.bytes_lp(group.serialize());
  w.u64(difficulty.steps);
  w.string_lp(spaces.puzzle_space);
  w.string_lp(spaces.solution_space);
  w.string_lp(spaces.difficulty_space);
  w.string_lp(spaces.input_space);
  return w.take();
}

PublicParams PublicParams::deserialize(BytesView data) {
  codec::Reader r(data);
  if (to_string(r.raw(4)) != kPublicParamsMagic) {
    throw codec::DecodeError("PublicParams: bad magic");
  }
  if (r.u8() != kVersion) {
    throw codec::DecodeError("PublicParams: unsupported version");
  }
  PublicParams pp;
  pp.group = vdf::GroupParams::deserialize(r.bytes_lp());
  pp.difficulty.steps = r.u64();
  pp.spaces.puzzle_space = r.string_lp();
  pp.spaces.solution_space = r.string_lp();
  pp.spaces.difficulty_space = r.string_lp();
  pp.spaces.input_space = r.string_lp();
  r.expect_done();
  return pp;
}

std::string PublicParams::fingerprint() const {
  return hex_encode(crypto::sha256(serialize()));
}

Bytes Puzzle::serialize() const {
  codec::Writer w;
  w.raw(std::string_view(kPuzzleMagic, 4));
  w.u8(kVersion);
  w.u32(challenge.bits);
  w.bigint(challenge.value);
  return w.take();
}

Puzzle Puzzle::deserialize(BytesView data) {
  codec::Reader r(data);
  if (to_string(r.raw(4)) != kPuzzleMagic) {
    throw codec::DecodeError("Puzzle: bad magic");
  }
  if (r.u8() != kVersion) throw codec::DecodeError("Puzzle: unsupported version");
  Puzzle p;
  p.challenge.bits = r.u32();
  p.challenge.value = r.bigint();
  r.expect_done();
  return p;
}

Bytes Solution::serialize() const {
  codec::Writer w;
  w.raw(std::string_view(kSolutionMagic, 4));
  w.u8(kVersion);
  w.bigint(y.value);
  w.bigint(proof.value);
  return w.take();
}

Solution Solution::deserialize(BytesView data) {
  codec::Reader r(data);
  if (to_string(r.raw(4)) != kSolutionMagic) {
    throw codec::DecodeError("Solution: bad magic");
  }
  if (r.u8() != kVersion) throw codec::DecodeError("Solution: unsupported version");
  Solution s;
  s.y.value = r.bigint();
  s.proof.value = r.bigint();
  r.expect_done();
  return s;
}

void PuzzleInput::validate() const {
  if (id_client.empty() || id_client.size() > kMaxIdentityBytes) {
    throw std::invalid_argument("PuzzleInput: bad id_client length");
  }
  if (id_server.empty() || id_server.size() > kMaxIdentityBytes) {
    throw std::invalid_argument("PuzzleInput: bad id_server length");
  }
  if (nonce_client.size() != kNonceBytes) {
    throw std::invalid_argument("PuzzleInput: nonce_client must be 16 bytes");
  }
  if (nonce_server.size() != kNonceBytes) {
    throw std::invalid_argument("PuzzleInput: nonce_server must be 16 bytes");
  }
}

Bytes PuzzleInput::canonical_encoding() const {
  validate();
  codec::Writer w;
  w.bytes_lp(id_client);
  w.bytes_lp(id_server);
  w.bytes_lp(nonce_client);
  w.bytes_lp(nonce_server);
  return w.take();
}

PuzzleInput PuzzleInput::from_canonical(BytesView data) {
  codec::Reader r(data);
  PuzzleInput input;
  input.id_client = r.bytes_lp(kMaxIdentityBytes);
  input.id_server = r.bytes_lp(kMaxIdentityBytes);
  input.nonce_client = r.bytes_lp(kNonceBytes);
  input.nonce_server = r.bytes_lp(kNonceBytes);
  r.expect_done();
  try {
    input.validate();
  } catch (const std::invalid_argument& e) {
    throw codec::DecodeError(std::string("PuzzleInput: ") + e.what());
  }
  return input;
}

PublicParams setup(std::uint32_t security_lambda, std::uint32_t modulus_bits,
                   vdf::Difficulty difficulty, std::optional<BytesView> seed) {
  if (difficulty.steps < 1) {
    throw std::invalid_argument("setup: difficulty must be >= 1");
  }
  PublicParams pp;
  pp.group = vdf::generate_group(modulus_bits, security_lambda, seed);
  pp.difficulty = difficulty;
  pp.spaces.difficulty_space = "{" + std::to_string(difficulty.steps) + "}";
  return pp;
}

Puzzle gen_puz(const PublicParams& pp, const PuzzleInput& input,
               RandomSource& rng) {
  // The input is fixed at this point of the flow; binding l to it is the
  // protocol layer's MAC's job.
  input.validate();
  return Puzzle{vdf::sample_prime(pp.group.security_lambda, rng)};
}

Solution find_sol(const PublicParams& pp, const PuzzleInput& input,
                  const Puzzle& puzzle) {
  vdf::GroupElement g = vdf::hash_to_group(input.canonical_encoding(), pp.group);
  vdf::GroupElement y = vdf::vdf_evaluate(g, pp.difficulty, pp.group);
  vdf::GroupElement proof =
      vdf::vdf_prove(g, pp.difficulty, puzzle.challenge, pp.group);
  return Solution{std::move(y), std::move(proof)};
}

bool ver_sol(const PublicParams& pp, const PuzzleInput& input,
             const Puzzle& puzzle, const Solution& solution) {
  Bytes encoded;
  try {
    encoded = input.canonical_encoding();
  } catch (const std::invalid_argument&) {
    return false;
  }
  vdf::GroupElement g = vdf::hash_to_group(encoded, pp.group);
  return vdf::vdf_verify(g, solution.y, solution.proof, pp.difficulty,
                         puzzle.challenge, pp.group);
}

Bytes ni_derive_input(const BeaconValue& beacon, BytesView id_client,
                      BytesView request_digest) {
  if (beacon.randomness.size() != kBeaconRandomnessBytes) {
    throw std::invalid_argument("ni_derive_input: beacon randomness must be 32 bytes");
  }
  if (id_client.empty() || id_client.size() > kMaxIdentityBytes) {
    throw std::invalid_argument("ni_derive_input: bad id_client length");
  }
  if (request_digest.size() != kRequestDigestBytes) {
    throw std::invalid_argument("ni_derive_input: request digest must be 32 bytes");
  }
  codec::Writer w;
  w.u64(beacon.epoch);
  w.raw(beacon.randomness);
  w.bytes_lp(id_client);
  w.raw(request_digest);
  return w.take();
}

std::optional<std::uint64_t> ni_input_epoch(BytesView derived_input) {
  if (derived_input.size() < 8) return std::nullopt;
  codec::Reader r(derived_input);
  return r.u64();
}

namespace {
// The challenge is bound to the instance: l = hash_to_prime(enc(g) || enc(y)).
vdf::ChallengePrime ni_challenge(const PublicParams& pp,
                                 const vdf::GroupElement& g,
                                 const vdf::GroupElement& y) {
  codec::Writer w;
  w.bigint(g.value);
  w.bigint(y.value);
  return vdf::hash_to_prime(w.data(), pp.group.security_lambda);
}
}  // namespace

std::pair<Puzzle, Solution> ni_solve(const PublicParams& pp,
                                     BytesView derived_input) {
  vdf::GroupElement g = vdf::hash_to_group(derived_input, pp.group);
  vdf::GroupElement y = vdf::vdf_evaluate(g, pp.difficulty, pp.group);
  vdf::ChallengePrime l = ni_challenge(pp, g, y);
  vdf::GroupElement proof = vdf::vdf_prove(g, pp.difficulty, l, pp.group);
  return {Puzzle{l}, Solution{std::move(y), std::move(proof)}};
}

bool ni_verify(const PublicParams& pp, BytesView derived_input,
               const Puzzle& puzzle, const Solution& solution,
               std::span<const std::uint64_t> beacon_window) {
  std::optional<std::uint64_t> epoch = ni_input_epoch(derived_input);
  if (!epoch) return false;
  if (std::find(beacon_window.begin(), beacon_window.end(), *epoch) ==
      beacon_window.end()) {
    return false;
  }
  vdf::GroupElement g = vdf::hash_to_group(derived_input, pp.group);
  vdf::ChallengePrime expected = ni_challenge(pp, g, solution.y);
  if (expected.value != puzzle.challenge.value) return false;
  return vdf::vdf_verify(g, solution.y, solution.proof, pp.difficulty,
                         puzzle.challenge, pp.group);
}

}  // namespace vdfgate::puzzle
