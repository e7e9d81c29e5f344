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

#include "vdfgate/vdf.hpp"

#include <atomic>
#include <stdexcept>

#include "vdfgate/codec.hpp"
#include "vdfgate/crypto.hpp"

namespace vdfgate::vdf {

namespace {

std::atomic<std::uint64_t> g_group_ops{0};

constexpr std::uint32_t kMillerRabinRounds = 64;
constexpr std::uint32_t kTrialDivisionBound = 1024;  // covers n < 2^20 exactly
constexpr int kHashToGroupMaxAttempts = 256;
constexpr int kSamplePrimeMaxAttempts = 10000;
constexpr std::uint32_t kHashToPrimeMaxCounter = 1 << 16;

const char kGroupParamsMagic[] = "VDFG";
constexpr std::uint8_t kGroupParamsVersion = 0x01;

// Odd primes below kTrialDivisionBound.
const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    std::vector<bool> composite(kTrialDivisionBound, false);
    for (std::uint32_t i = 3; i < kTrialDivisionBound; i += 2) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint32_t j = 3 * i; j < kTrialDivisionBound; j += 2 * i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const Bigint& n, const Bigint& n_minus_1,
                        const Bigint& d, mp_bitcnt_t s, const Bigint& base) {
  Bigint x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

Bytes be32(std::uint32_t v) {
  return {static_cast<std::uint8_t>(v >> 24), static_cast<std::uint8_t>(v >> 16),
          static_cast<std::uint8_t>(v >> 8), static_cast<std::uint8_t>(v)};
}

}  // namespace

bool is_probable_prime(const Bigint& n) {
  if (n < 2) return false;
  if (n == 2) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (std::uint32_t p : small_primes()) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  // No factor below 2^10, so anything below 2^20 is now certainly prime.
  if (n < (Bigint(1) << 20)) return true;

  Bigint n_minus_1 = n - 1;
  Bigint d = n_minus_1;
  mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  // Bases come from a hash of n so the test is reproducible everywhere.
  SeededRandom base_rng(concat(to_bytes("miller-rabin-bases"), bigint_to_bytes(n)));
  Bigint span = n - 4;  // bases uniform in [2, n-2]
  for (std::uint32_t round = 0; round < kMillerRabinRounds; ++round) {
    Bigint base;
    do {
      base = random_bits(base_rng, bit_length(span) + 8);
    } while (base >= span * 256);  // negligible rejection, keeps uniformity
    base = base % span + 2;
    if (!miller_rabin_round(n, n_minus_1, d, s, base)) return false;
  }
  return true;
}

GroupParams GroupParams::from_modulus(Bigint modulus, std::uint32_t security_lambda) {
  if (modulus < 15) throw std::invalid_argument("GroupParams: modulus below 15");
  if (mpz_even_p(modulus.get_mpz_t())) {
    throw std::invalid_argument("GroupParams: modulus must be odd");
  }
  if (security_lambda < 3) {
    throw std::invalid_argument("GroupParams: security_lambda below 3");
  }
  if (is_probable_prime(modulus)) {
    throw std::invalid_argument("GroupParams: modulus must be composite");
  }
  GroupParams params;
  params.modulus_bits = static_cast<std::uint32_t>(bit_length(modulus));
  params.modulus = std::move(modulus);
  params.security_lambda = security_lambda;
  return params;
}

Bytes GroupParams::serialize() const {
  codec::Writer w;
  w.raw(std::string_view(kGroupParamsMagic, 4));
  w.u8(kGroupParamsVersion);
  w.u32(modulus_bits);
  w.u32(security_lambda);
  w.bigint(modulus);
  return w.take();
}

GroupParams GroupParams::deserialize(BytesView data) {
  codec::Reader r(data);
  Bytes magic = r.raw(4);
  if (to_string(magic) != kGroupParamsMagic) {
    throw codec::DecodeError("GroupParams: bad magic");
  }
  if (r.u8() != kGroupParamsVersion) {
    throw codec::DecodeError("GroupParams: unsupported version");
  }
  std::uint32_t bits = r.u32();
  std::uint32_t lambda = r.u32();
  Bigint n = r.bigint();
  r.expect_done();
  GroupParams params;
  try {
    params = from_modulus(std::move(n), lambda);
  } catch (const std::invalid_argument& e) {
    throw codec::DecodeError(std::string("GroupParams: ") + e.what());
  }
  if (params.modulus_bits != bits) {
    throw codec::DecodeError("GroupParams: modulus_bits mismatch");
  }
  return params;
}

bool is_member(const GroupElement& g, const GroupParams& params) {
  if (g.value < 1 || g.value >= params.modulus) return false;
  Bigint d;
  mpz_gcd(d.get_mpz_t(), g.value.get_mpz_t(), params.modulus.get_mpz_t());
  return d == 1;
}

namespace {

Bigint sample_prime_candidate(RandomSource& rng, std::uint32_t bits) {
  Bigint candidate = random_bits(rng, bits);
  mpz_setbit(candidate.get_mpz_t(), bits - 1);
  mpz_setbit(candidate.get_mpz_t(), 0);
  return candidate;
}

Bigint generate_prime(RandomSource& rng, std::uint32_t bits) {
  for (int attempt = 0; attempt < kSamplePrimeMaxAttempts; ++attempt) {
    Bigint candidate = sample_prime_candidate(rng, bits);
    if (bits >= 2) mpz_setbit(candidate.get_mpz_t(), bits - 2);
    if (is_probable_prime(candidate)) return candidate;
  }
  throw std::runtime_error("generate_prime: retries exhausted");
}

}  // namespace

GroupParams generate_group(std::uint32_t modulus_bits,
                           std::uint32_t security_lambda,
                           std::optional<BytesView> seed) {
  if (modulus_bits < 16) {
    throw std::invalid_argument("generate_group: modulus_bits below 16");
  }
  if (modulus_bits % 2 != 0) {
    throw std::invalid_argument("generate_group: modulus_bits must be even");
  }
  if (security_lambda < 3) {
    throw std::invalid_argument("generate_group: security_lambda below 3");
  }

  SystemRandom system_rng;
  std::optional<SeededRandom> seeded;
  if (seed) seeded.emplace(*seed);
  RandomSource& rng = seeded ? static_cast<RandomSource&>(*seeded) : system_rng;

  std::uint32_t half = modulus_bits / 2;
  Bigint p = generate_prime(rng, half);
  Bigint q;
  do {
    q = generate_prime(rng, half);
  } while (q == p);

  Bigint n = p * q;
  // Top two bits of each factor are forced, so this cannot fail.
  if (bit_length(n) != modulus_bits) {
    throw std::runtime_error("generate_group: modulus width drifted");
  }
  // Drop the factors; only N leaves this scope.
  p = 0;
  q = 0;
  return GroupParams::from_modulus(std::move(n), security_lambda);
}

GroupElement hash_to_group(BytesView input, const GroupParams& params) {
  if (input.empty()) throw std::invalid_argument("hash_to_group: empty input");
  g_group_ops.fetch_add(1, std::memory_order_relaxed);

  std::size_t stream_bytes = (params.modulus_bits + 64 + 7) / 8;
  for (int attempt = 0; attempt < kHashToGroupMaxAttempts; ++attempt) {
    Bytes msg(input.begin(), input.end());
    if (attempt > 0) {
      msg.push_back(0xff);
      Bytes ctr = be32(static_cast<std::uint32_t>(attempt));
      msg.insert(msg.end(), ctr.begin(), ctr.end());
    }
    Bigint x = bigint_from_bytes(crypto::hash_stream(msg, stream_bytes));
    Bigint w = x % params.modulus;
    Bigint g;
    mpz_powm_ui(g.get_mpz_t(), w.get_mpz_t(), 2, params.modulus.get_mpz_t());
    if (g == 0 || g == 1) continue;
    Bigint d;
    mpz_gcd(d.get_mpz_t(), g.get_mpz_t(), params.modulus.get_mpz_t());
    if (d != 1) continue;
    return GroupElement{std::move(g)};
  }
  throw std::runtime_error("hash_to_group: retries exhausted");
}

GroupElement vdf_evaluate(const GroupElement& g, Difficulty T,
                          const GroupParams& params) {
  if (!is_member(g, params)) {
    throw std::invalid_argument("vdf_evaluate: input not a group member");
  }
  g_group_ops.fetch_add(1, std::memory_order_relaxed);

  Bigint y = g.value;
  for (std::uint64_t i = 0; i < T.steps; ++i) {
    y *= y;
    y %= params.modulus;
  }
  return GroupElement{std::move(y)};
}

ProofWithRemainder vdf_prove_with_remainder(const GroupElement& g, Difficulty T,
                                            const ChallengePrime& l,
                                            const GroupParams& params) {
  if (!is_member(g, params)) {
    throw std::invalid_argument("vdf_prove: input not a group member");
  }
  if (l.value < 2) throw std::invalid_argument("vdf_prove: challenge below 2");
  g_group_ops.fetch_add(1, std::memory_order_relaxed);

  // Long division of 2^T by l, one doubling per step: the next quotient bit
  // is floor(2r / l) which stays in {0, 1} because r < l.
  Bigint r = 1;
  Bigint pi = 1;
  for (std::uint64_t i = 0; i < T.steps; ++i) {
    r <<= 1;
    bool quotient_bit = r >= l.value;
    if (quotient_bit) r -= l.value;
    pi *= pi;
    pi %= params.modulus;
    if (quotient_bit) {
      pi *= g.value;
      pi %= params.modulus;
    }
  }
  return ProofWithRemainder{GroupElement{std::move(pi)}, std::move(r)};
}

GroupElement vdf_prove(const GroupElement& g, Difficulty T,
                       const ChallengePrime& l, const GroupParams& params) {
  return vdf_prove_with_remainder(g, T, l, params).proof;
}

bool vdf_verify(const GroupElement& g, const GroupElement& y,
                const GroupElement& proof, Difficulty T,
                const ChallengePrime& l, const GroupParams& params) {
  g_group_ops.fetch_add(1, std::memory_order_relaxed);
  if (l.value < 2) return false;
  if (!is_member(g, params) || !is_member(y, params) || !is_member(proof, params)) {
    return false;
  }

  // r = 2^T mod l in O(log T) multiplications; T itself is the exponent.
  Bigint r;
  Bigint two = 2;
  Bigint exponent;
  mpz_import(exponent.get_mpz_t(), 1, 1, sizeof(T.steps), 0, 0, &T.steps);
  mpz_powm(r.get_mpz_t(), two.get_mpz_t(), exponent.get_mpz_t(), l.value.get_mpz_t());

  Bigint lhs;
  mpz_powm(lhs.get_mpz_t(), proof.value.get_mpz_t(), l.value.get_mpz_t(),
           params.modulus.get_mpz_t());
  Bigint gr;
  mpz_powm(gr.get_mpz_t(), g.value.get_mpz_t(), r.get_mpz_t(),
           params.modulus.get_mpz_t());
  lhs *= gr;
  lhs %= params.modulus;
  return lhs == y.value;
}

ChallengePrime sample_prime(std::uint32_t security_lambda, RandomSource& rng) {
  if (security_lambda < 3) {
    throw std::invalid_argument("sample_prime: security_lambda below 3");
  }
  for (int attempt = 0; attempt < kSamplePrimeMaxAttempts; ++attempt) {
    Bigint candidate = sample_prime_candidate(rng, security_lambda);
    if (is_probable_prime(candidate)) {
      return ChallengePrime{std::move(candidate), security_lambda};
    }
  }
  throw std::runtime_error("sample_prime: retries exhausted (broken rng?)");
}

ChallengePrime hash_to_prime(BytesView input, std::uint32_t security_lambda) {
  if (input.empty()) throw std::invalid_argument("hash_to_prime: empty input");
  if (security_lambda < 3) {
    throw std::invalid_argument("hash_to_prime: security_lambda below 3");
  }
  std::size_t stream_bytes = (security_lambda + 7) / 8;
  std::size_t excess_bits = stream_bytes * 8 - security_lambda;
  for (std::uint32_t counter = 0; counter < kHashToPrimeMaxCounter; ++counter) {
    Bytes msg(input.begin(), input.end());
    Bytes ctr = be32(counter);
    msg.insert(msg.end(), ctr.begin(), ctr.end());
    Bigint candidate = bigint_from_bytes(crypto::hash_stream(msg, stream_bytes));
    mpz_tdiv_q_2exp(candidate.get_mpz_t(), candidate.get_mpz_t(), excess_bits);
    mpz_setbit(candidate.get_mpz_t(), security_lambda - 1);
    if (is_probable_prime(candidate)) {
      return ChallengePrime{std::move(candidate), security_lambda};
    }
  }
  throw std::logic_error("hash_to_prime: counter exhausted");
}

std::uint64_t group_op_count() {
  return g_group_ops.load(std::memory_order_relaxed);
}

}  // namespace vdfgate::vdf
