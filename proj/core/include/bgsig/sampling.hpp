#pragma once

#include "bgsig/keccak.hpp"
#include "bgsig/params.hpp"
#include "bgsig/ring.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

// All randomness in the scheme is expanded from seeds with SHAKE-256 behind a
// one-byte domain tag. Multi-byte integers fed to the XOF are little-endian
// and nonces/counters are two bytes wide.
namespace bgsig {

enum class DomainTag : uint8_t {
  matrix = 0x00,
  secret = 0x01,
  mask = 0x02,
  challenge = 0x03,
  ball = 0x04,
  key_derive = 0x05,
};

struct Seed {
  static constexpr size_t kSize = 32;
  std::array<uint8_t, kSize> bytes{};

  std::span<const uint8_t> span() const noexcept { return bytes; }
  bool operator==(const Seed&) const = default;
};

// Fiat-Shamir digest; the challenge polynomial is re-expanded from it.
struct CHash {
  static constexpr size_t kSize = 32;
  std::array<uint8_t, kSize> bytes{};

  std::span<const uint8_t> span() const noexcept { return bytes; }
  bool operator==(const CHash&) const = default;
};

// Sparse polynomial with exactly tau nonzero coefficients, each +1 or -1.
struct Challenge {
  struct Term {
    uint16_t position;
    int8_t sign; // +1 or -1

    bool operator==(const Term&) const = default;
  };
  std::vector<Term> terms; // sorted by position

  Poly to_poly() const noexcept;
  bool operator==(const Challenge&) const = default;
};

// c * a in R_q, using the sparsity of c. Equal to poly_mul(c.to_poly(), a).
Poly challenge_mul(const Challenge& c, const Poly& a) noexcept;
PolyVec challenge_mul(const Challenge& c, const PolyVec& v);

// SHAKE-256 over tag || input.
std::vector<uint8_t> xof(DomainTag tag, std::span<const uint8_t> input, size_t outlen);

// Pulls fixed-width little-endian bit chunks out of a SHAKE-256 stream.
class XofBitReader {
public:
  explicit XofBitReader(Shake256 stream)
    : stream_(std::move(stream))
  {}

  // width in [1, 32]
  uint32_t next(uint32_t width) noexcept;

private:
  Shake256 stream_;
  uint64_t acc_ = 0;
  uint32_t acc_bits_ = 0;
};

// Uniform matrix in R_q^{k x l}. Entry (i, j) comes from its own stream
// tag_A || rho || i || j (one byte each for i and j), 23-bit chunks with
// rejection of values >= q.
MatrixA expand_a(const Seed& rho, const ValidatedParamSet& p);
Poly expand_a_entry(const Seed& rho, uint8_t i, uint8_t j);

// Uniform coefficients in [-eta, eta]: bits_s-bit chunks of
// tag_s || sigma || nonce, rejecting chunks >= 2*eta+1.
Poly expand_s(const Seed& sigma, uint16_t nonce, const ValidatedParamSet& p);

// Uniform coefficients in [-gamma, gamma] for mask polynomial j of signing
// attempt `attempt`: stream tag_y || key || attempt || j || message, chunks of
// bits_for(2*gamma+1) bits, rejecting chunks >= 2*gamma+1.
Poly expand_mask(const Seed& key, std::span<const uint8_t> message, uint16_t attempt, uint16_t j,
                 const ValidatedParamSet& p);

// First 32 bytes of tag_c || w1_bytes || pk_digest || message. The public key
// digest ties a signature to the key it was made under.
CHash hash_challenge(std::span<const uint8_t> w1_bytes, const Seed& pk_digest,
                     std::span<const uint8_t> message);

// Inside-out Fisher-Yates placement of tau signs driven by tag_ball || ch.
Challenge sample_in_ball(const CHash& ch, const ValidatedParamSet& p);

} // namespace bgsig
