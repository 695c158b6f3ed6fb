#include "bgsig/scheme.hpp"

#include "bgsig/codec.hpp"
#include "bgsig/rounding.hpp"

#include <algorithm>
#include <string>

namespace bgsig {

namespace {

bool is_canonical(const PolyVec& v) noexcept
{
  return std::all_of(v.begin(), v.end(), [](const Poly& poly) {
    return std::all_of(poly.coeffs.begin(), poly.coeffs.end(), [](uint32_t c) { return c < kQ; });
  });
}

} // namespace

const char* to_string(RejectReason r) noexcept
{
  switch (r) {
    case RejectReason::none:
      return "none";
    case RejectReason::z_bound:
      return "z-bound";
    case RejectReason::low_bound:
      return "low-bound";
  }
  return "?";
}

KeyPair keypair_from_parts(const Seed& rho, const Seed& key, PolyVec s1, PolyVec s2,
                           const ValidatedParamSet& p)
{
  if (s1.size() != p->l || s2.size() != p->k) {
    throw DimensionError("secret vectors must have lengths l and k");
  }
  const MatrixA A = expand_a(rho, p);
  PolyVec t = vec_add(matvec_mul(A, s1), s2);

  KeyPair kp;
  kp.pk = PublicKey{ rho, t };
  kp.sk = SecretKey{ rho, key, std::move(t), std::move(s1), std::move(s2) };
  return kp;
}

KeyPair keygen(const Seed& seed, const ValidatedParamSet& p)
{
  const auto expanded = xof(DomainTag::key_derive, seed.span(), 3 * Seed::kSize);
  Seed rho;
  Seed sigma;
  Seed key;
  std::copy_n(expanded.begin(), Seed::kSize, rho.bytes.begin());
  std::copy_n(expanded.begin() + Seed::kSize, Seed::kSize, sigma.bytes.begin());
  std::copy_n(expanded.begin() + 2 * Seed::kSize, Seed::kSize, key.bytes.begin());

  PolyVec s1(p->l);
  for (uint32_t j = 0; j < p->l; ++j) {
    s1[j] = expand_s(sigma, static_cast<uint16_t>(j), p);
  }
  PolyVec s2(p->k);
  for (uint32_t i = 0; i < p->k; ++i) {
    s2[i] = expand_s(sigma, static_cast<uint16_t>(p->l + i), p);
  }
  return keypair_from_parts(rho, key, std::move(s1), std::move(s2), p);
}

Signer::Signer(SecretKey sk, const ValidatedParamSet& p)
  : sk_(std::move(sk))
  , params_(p)
  , a_hat_(expand_a(sk_.rho, p))
{
  if (sk_.s1.size() != p->l || sk_.s2.size() != p->k || sk_.t.size() != p->k) {
    throw DimensionError("secret key does not match the parameter set");
  }
  pk_digest_ = public_key_digest(PublicKey{ sk_.rho, sk_.t }, p);
}

SignAttempt Signer::attempt(std::span<const uint8_t> message, uint32_t attempt,
                            const SignOptions& opts) const
{
  const auto& p = params_;
  if (attempt > 0xFFFF) {
    throw std::out_of_range("attempt counter exceeds 16 bits");
  }

  Seed mask_key = sk_.key;
  if (opts.salt) {
    std::array<uint8_t, 2 * Seed::kSize> in{};
    std::copy(sk_.key.bytes.begin(), sk_.key.bytes.end(), in.begin());
    std::copy(opts.salt->bytes.begin(), opts.salt->bytes.end(), in.begin() + Seed::kSize);
    const auto derived = xof(DomainTag::key_derive, in, Seed::kSize);
    std::copy(derived.begin(), derived.end(), mask_key.bytes.begin());
  }

  SignAttempt a;
  a.attempt = attempt;
  a.y = PolyVec(p->l);
  for (uint32_t j = 0; j < p->l; ++j) {
    a.y[j] = expand_mask(mask_key, message, static_cast<uint16_t>(attempt),
                         static_cast<uint16_t>(j), p);
  }
  a.w = a_hat_.mul(a.y);
  a.c_hash = hash_challenge(encode_w1(high_bits(a.w, p), p), pk_digest_, message);
  a.c = sample_in_ball(a.c_hash, p);
  a.z = vec_add(a.y, challenge_mul(a.c, sk_.s1));
  a.w_minus_cs2 = vec_sub(a.w, challenge_mul(a.c, sk_.s2));

  // a value of exactly gamma - beta is accepted on both checks
  a.z_norm = inf_norm(a.z);
  a.low_norm = low_inf_norm(a.w_minus_cs2, p);
  a.z_ok = a.z_norm <= p.z_bound();
  a.low_ok = a.low_norm <= p.z_bound();
  a.reason = !a.z_ok ? RejectReason::z_bound
             : !a.low_ok ? RejectReason::low_bound
                         : RejectReason::none;
  return a;
}

Signature Signer::sign(std::span<const uint8_t> message, const SignOptions& opts,
                       SignTranscript* transcript) const
{
  if (opts.max_attempts == 0 || opts.max_attempts > 0x10000) {
    throw std::invalid_argument("max_attempts must be in [1, 65536]");
  }
  for (uint32_t i = 0; i < opts.max_attempts; ++i) {
    SignAttempt a = attempt(message, i, opts);
    const bool done = a.accepted();
    Signature sig;
    if (done) {
      sig.c_hash = a.c_hash;
      sig.z = a.z;
    }
    if (transcript != nullptr) {
      transcript->attempts.push_back(std::move(a));
    }
    if (done) {
      return sig;
    }
  }
  throw AttemptsExhausted("signing rejected " + std::to_string(opts.max_attempts) +
                          " consecutive attempts");
}

SignAttempt sign_attempt(const SecretKey& sk, std::span<const uint8_t> message, uint32_t attempt,
                         const ValidatedParamSet& p, const SignOptions& opts)
{
  return Signer(sk, p).attempt(message, attempt, opts);
}

Signature sign(const SecretKey& sk, std::span<const uint8_t> message, const ValidatedParamSet& p,
               const SignOptions& opts, SignTranscript* transcript)
{
  return Signer(sk, p).sign(message, opts, transcript);
}

Seed public_key_digest(const PublicKey& pk, const ValidatedParamSet& p)
{
  const auto digest = shake256(encode_pk(pk, p), Seed::kSize);
  Seed out;
  std::copy(digest.begin(), digest.end(), out.bytes.begin());
  return out;
}

PolyVec verifier_commitment(const PublicKey& pk, const Signature& sig, const ValidatedParamSet& p)
{
  const Challenge c = sample_in_ball(sig.c_hash, p);
  return vec_sub(matvec_mul(expand_a(pk.rho, p), sig.z), challenge_mul(c, pk.t));
}

bool verify(const PublicKey& pk, std::span<const uint8_t> message, const Signature& sig,
            const ValidatedParamSet& p) noexcept
{
  try {
    if (pk.t.size() != p->k || sig.z.size() != p->l || !is_canonical(pk.t) ||
        !is_canonical(sig.z)) {
      return false;
    }
    if (inf_norm(sig.z) > p.z_bound()) {
      return false;
    }
    const PolyVec u = verifier_commitment(pk, sig, p);
    return hash_challenge(encode_w1(high_bits(u, p), p), public_key_digest(pk, p), message) == sig.c_hash;
  } catch (...) {
    return false;
  }
}

bool verify_encoded(std::span<const uint8_t> pk_bytes, std::span<const uint8_t> message,
                    std::span<const uint8_t> sig_bytes, const ValidatedParamSet& p) noexcept
{
  try {
    return verify(decode_pk(pk_bytes, p), message, decode_sig(sig_bytes, p), p);
  } catch (...) {
    return false;
  }
}

} // namespace bgsig
