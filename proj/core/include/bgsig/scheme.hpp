#pragma once

#include "bgsig/keys.hpp"
#include "bgsig/params.hpp"
#include "bgsig/ring.hpp"
#include "bgsig/sampling.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace bgsig {

class AttemptsExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr uint32_t kDefaultMaxAttempts = 512;

struct SignOptions {
  uint32_t max_attempts = kDefaultMaxAttempts; // at most 65536
  // When set, the mask seed is re-derived from (key, salt) so signatures are
  // no longer a function of (sk, message) alone.
  std::optional<Seed> salt;
};

enum class RejectReason : uint8_t {
  none,
  z_bound,
  low_bound,
};

const char* to_string(RejectReason r) noexcept;

// One pass through the signing loop body. Both bounds are always evaluated so
// callers can measure each condition separately; `reason` reports the first
// one that failed (z first).
struct SignAttempt {
  uint32_t attempt = 0;
  PolyVec y;
  PolyVec w; // A*y
  CHash c_hash;
  Challenge c;
  PolyVec z;          // y + c*s1
  PolyVec w_minus_cs2;
  uint32_t z_norm = 0;
  uint32_t low_norm = 0; // |Low(w - c*s2)|_inf
  bool z_ok = false;
  bool low_ok = false;
  RejectReason reason = RejectReason::none;

  bool accepted() const noexcept { return reason == RejectReason::none; }
};

struct SignTranscript {
  std::vector<SignAttempt> attempts;
};

// Deterministic: rho, sigma and the signing key are derived from `seed`.
KeyPair keygen(const Seed& seed, const ValidatedParamSet& p = default_params());

// Builds a key pair from explicit parts (t = A*s1 + s2). Lets tests force
// degenerate secrets such as s1 = s2 = 0.
KeyPair keypair_from_parts(const Seed& rho, const Seed& key, PolyVec s1, PolyVec s2,
                           const ValidatedParamSet& p = default_params());

// SHAKE-256 of the encoded public key, 32 bytes.
Seed public_key_digest(const PublicKey& pk, const ValidatedParamSet& p = default_params());

// Holds the per-key precomputation (A in NTT form) shared by every attempt.
class Signer {
public:
  explicit Signer(SecretKey sk, const ValidatedParamSet& p = default_params());

  SignAttempt attempt(std::span<const uint8_t> message, uint32_t attempt,
                      const SignOptions& opts = {}) const;

  // Throws AttemptsExhausted when opts.max_attempts attempts all reject.
  Signature sign(std::span<const uint8_t> message, const SignOptions& opts = {},
                 SignTranscript* transcript = nullptr) const;

  const SecretKey& secret_key() const noexcept { return sk_; }

private:
  SecretKey sk_;
  ValidatedParamSet params_;
  NttMatrix a_hat_;
  Seed pk_digest_;
};

SignAttempt sign_attempt(const SecretKey& sk, std::span<const uint8_t> message, uint32_t attempt,
                         const ValidatedParamSet& p = default_params(),
                         const SignOptions& opts = {});

Signature sign(const SecretKey& sk, std::span<const uint8_t> message,
               const ValidatedParamSet& p = default_params(), const SignOptions& opts = {},
               SignTranscript* transcript = nullptr);

// Never throws on malformed keys or signatures; anything unexpected rejects.
bool verify(const PublicKey& pk, std::span<const uint8_t> message, const Signature& sig,
            const ValidatedParamSet& p = default_params()) noexcept;

// Strict-decodes both objects first; a decode failure is a reject.
bool verify_encoded(std::span<const uint8_t> pk_bytes, std::span<const uint8_t> message,
                    std::span<const uint8_t> sig_bytes,
                    const ValidatedParamSet& p = default_params()) noexcept;

// A*z - c*t, the quantity whose high bits the verifier hashes.
PolyVec verifier_commitment(const PublicKey& pk, const Signature& sig,
                            const ValidatedParamSet& p = default_params());

} // namespace bgsig
