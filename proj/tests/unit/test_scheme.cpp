#include "bgsig/scheme.hpp"

#include "bgsig/codec.hpp"
#include "bgsig/rounding.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <thread>

namespace bgsig {
namespace {

const ValidatedParamSet& P = default_params();
using testing::Rng;
constexpr uint32_t kBound = 523416; // gamma - beta

std::vector<uint8_t> bytes_of(std::string_view s) { return { s.begin(), s.end() }; }

TEST(Keygen, Deterministic)
{
  Rng rng(51);
  const Seed seed = testing::random_seed(rng);
  const KeyPair a = keygen(seed, P);
  const KeyPair b = keygen(seed, P);
  EXPECT_EQ(encode_pk(a.pk, P), encode_pk(b.pk, P));
  EXPECT_EQ(encode_sk(a.sk, P), encode_sk(b.sk, P));
  EXPECT_NE(encode_pk(keygen(testing::random_seed(rng), P).pk, P), encode_pk(a.pk, P));
}

TEST(Keygen, DefiningEquationAgainstSchoolbook)
{
  Rng rng(52);
  const KeyPair kp = keygen(testing::random_seed(rng), P);
  EXPECT_LE(inf_norm(kp.sk.s1), 6u);
  EXPECT_LE(inf_norm(kp.sk.s2), 6u);
  ASSERT_EQ(kp.sk.s1.size(), 3u);
  ASSERT_EQ(kp.sk.s2.size(), 4u);
  EXPECT_EQ(kp.pk.t, kp.sk.t);
  EXPECT_EQ(kp.pk.rho, kp.sk.rho);

  const MatrixA A = expand_a(kp.pk.rho, P);
  for (size_t i = 0; i < 4; ++i) {
    Poly row = kp.sk.s2[i];
    for (size_t j = 0; j < 3; ++j) row = poly_add(row, schoolbook_mul(A.at(i, j), kp.sk.s1[j]));
    EXPECT_EQ(row, kp.pk.t[i]);
  }
}

TEST(Keygen, ZeroSecretsGiveZeroT)
{
  Rng rng(53);
  const KeyPair kp = keypair_from_parts(testing::random_seed(rng), testing::random_seed(rng),
                                        PolyVec(3), PolyVec(4), P);
  EXPECT_EQ(kp.pk.t, PolyVec(4));
  EXPECT_THROW(keypair_from_parts(Seed{}, Seed{}, PolyVec(2), PolyVec(4), P), DimensionError);
}

TEST(Sign, RoundTrip)
{
  Rng rng(54);
  for (int t = 0; t < 100; ++t) {
    const KeyPair kp = keygen(testing::random_seed(rng), P);
    const auto msg = testing::random_bytes(rng, rng() % 200);
    const Signature sig = sign(kp.sk, msg, P);
    ASSERT_LE(inf_norm(sig.z), kBound);
    ASSERT_TRUE(verify(kp.pk, msg, sig, P));
    ASSERT_TRUE(verify_encoded(encode_pk(kp.pk, P), msg, encode_sig(sig, P), P));
  }
}

TEST(Sign, EmptyMessage)
{
  const KeyPair kp = keygen(Seed{}, P);
  const Signature sig = sign(kp.sk, {}, P);
  EXPECT_TRUE(verify(kp.pk, {}, sig, P));
  EXPECT_FALSE(verify(kp.pk, bytes_of("x"), sig, P));
}

// Checks, on every attempt of every signing:
//   A*z - c*t == A*y - c*s2 exactly,
//   accepted attempts keep High(A*y) == High(A*y - c*s2),
//   |c*s2| <= beta and the recorded norms and reasons are consistent.
TEST(Sign, InstrumentedTranscriptIdentities)
{
  Rng rng(55);
  size_t accepted = 0;
  for (int t = 0; t < 100; ++t) {
    const KeyPair kp = keygen(testing::random_seed(rng), P);
    const auto msg = testing::random_bytes(rng, 32);
    SignTranscript tr;
    const Signature sig = sign(kp.sk, msg, P, {}, &tr);
    ASSERT_FALSE(tr.attempts.empty());
    ASSERT_TRUE(tr.attempts.back().accepted());
    for (size_t i = 0; i + 1 < tr.attempts.size(); ++i) {
      ASSERT_FALSE(tr.attempts[i].accepted());
    }
    const MatrixA A = expand_a(kp.pk.rho, P);

    for (const auto& a : tr.attempts) {
      ASSERT_EQ(a.w, matvec_mul(A, a.y));
      const PolyVec cs1 = challenge_mul(a.c, kp.sk.s1);
      const PolyVec cs2 = challenge_mul(a.c, kp.sk.s2);
      ASSERT_LE(inf_norm(cs1), 360u);
      ASSERT_LE(inf_norm(cs2), 360u);
      ASSERT_EQ(a.z, vec_add(a.y, cs1));
      ASSERT_EQ(a.w_minus_cs2, vec_sub(a.w, cs2));
      ASSERT_EQ(a.c, sample_in_ball(a.c_hash, P));
      ASSERT_EQ(a.z_ok, inf_norm(a.z) <= kBound);
      ASSERT_EQ(a.low_ok, inf_norm(low_bits(a.w_minus_cs2, P)) <= kBound);
      ASSERT_EQ(a.accepted(), a.z_ok && a.low_ok);
      if (!a.z_ok) ASSERT_EQ(a.reason, RejectReason::z_bound);
      else if (!a.low_ok) ASSERT_EQ(a.reason, RejectReason::low_bound);

      // A*z - c*t = A*y + A*c*s1 - c*A*s1 - c*s2 = A*y - c*s2
      const PolyVec az_ct = vec_sub(matvec_mul(A, a.z), challenge_mul(a.c, kp.pk.t));
      ASSERT_EQ(az_ct, a.w_minus_cs2);

      if (a.accepted()) {
        ++accepted;
        ASSERT_EQ(high_bits(a.w, P), high_bits(a.w_minus_cs2, P));
        ASSERT_EQ(high_bits(az_ct, P), high_bits(a.w, P));
        ASSERT_EQ(verifier_commitment(kp.pk, sig, P), az_ct);
      }
    }
  }
  EXPECT_EQ(accepted, 100u);
}

TEST(SignAttempt, ZeroSecretsNeverTripZBoundWhenMaskIsSmall)
{
  Rng rng(56);
  const KeyPair kp = keypair_from_parts(testing::random_seed(rng), testing::random_seed(rng),
                                        PolyVec(3), PolyVec(4), P);
  const Signer signer(kp.sk, P);
  const auto msg = bytes_of("zero");
  for (uint32_t i = 0; i < 200; ++i) {
    const SignAttempt a = signer.attempt(msg, i);
    ASSERT_EQ(a.z, a.y);
    if (inf_norm(a.y) <= kBound) {
      ASSERT_TRUE(a.z_ok);
    }
  }
}

TEST(SignAttempt, PureAndSignIsFirstAccepted)
{
  Rng rng(57);
  const KeyPair kp = keygen(testing::random_seed(rng), P);
  const auto msg = bytes_of("pure");
  const SignAttempt a = sign_attempt(kp.sk, msg, 3, P);
  const SignAttempt b = sign_attempt(kp.sk, msg, 3, P);
  EXPECT_EQ(a.z, b.z);
  EXPECT_EQ(a.c_hash, b.c_hash);

  const Signature sig = sign(kp.sk, msg, P);
  for (uint32_t i = 0;; ++i) {
    const SignAttempt x = sign_attempt(kp.sk, msg, i, P);
    if (x.accepted()) {
      EXPECT_EQ(x.z, sig.z);
      EXPECT_EQ(x.c_hash, sig.c_hash);
      break;
    }
  }
}

// Closed form ((2(g-b)+1)/(2g+1))^768 ~ 0.5898 => z-bound rejection ~ 0.41.
TEST(SignAttempt, ZBoundRejectionFrequency)
{
  Rng rng(58);
  const KeyPair kp = keygen(testing::random_seed(rng), P);
  const Signer signer(kp.sk, P);
  const auto msg = bytes_of("rate");
  constexpr uint32_t kAttempts = 10'000;
  uint32_t z_rejects = 0;
  for (uint32_t i = 0; i < kAttempts; ++i) {
    z_rejects += signer.attempt(msg, i).z_ok ? 0 : 1;
  }
  EXPECT_NEAR(double(z_rejects) / kAttempts, 1 - 0.5898, 0.03);
}

TEST(Sign, AttemptsExhausted)
{
  Rng rng(59);
  const KeyPair kp = keygen(testing::random_seed(rng), P);
  for (int t = 0;; ++t) {
    const auto msg = testing::random_bytes(rng, 8);
    SignTranscript tr;
    (void)sign(kp.sk, msg, P, {}, &tr);
    if (tr.attempts.size() > 1) {
      SignOptions opts;
      opts.max_attempts = 1;
      EXPECT_THROW(sign(kp.sk, msg, P, opts), AttemptsExhausted);
      opts.max_attempts = static_cast<uint32_t>(tr.attempts.size());
      EXPECT_NO_THROW(sign(kp.sk, msg, P, opts));
      break;
    }
    ASSERT_LT(t, 100);
  }
  SignOptions bad;
  bad.max_attempts = 0;
  EXPECT_THROW(sign(kp.sk, bytes_of("m"), P, bad), std::invalid_argument);
}

TEST(Sign, DerandomizedAndSalted)
{
  Rng rng(60);
  const KeyPair kp = keygen(testing::random_seed(rng), P);
  const auto msg = bytes_of("same message");
  EXPECT_EQ(sign(kp.sk, msg, P), sign(kp.sk, msg, P));

  SignOptions salted;
  salted.salt = testing::random_seed(rng);
  const Signature s1 = sign(kp.sk, msg, P, salted);
  salted.salt = testing::random_seed(rng);
  const Signature s2 = sign(kp.sk, msg, P, salted);
  EXPECT_NE(s1, s2);
  EXPECT_TRUE(verify(kp.pk, msg, s1, P));
  EXPECT_TRUE(verify(kp.pk, msg, s2, P));
}

TEST(Verify, RejectsTampering)
{
  Rng rng(61);
  int z_tamper_rejects = 0;
  constexpr int kTrials = 200;
  for (int t = 0; t < kTrials; ++t) {
    const KeyPair kp = keygen(testing::random_seed(rng), P);
    auto msg = testing::random_bytes(rng, 16);
    const Signature sig = sign(kp.sk, msg, P);

    auto flipped = msg;
    flipped[rng() % flipped.size()] ^= static_cast<uint8_t>(1u << (rng() % 8));
    ASSERT_FALSE(verify(kp.pk, flipped, sig, P));

    Signature bumped = sig;
    auto& coeff = bumped.z[rng() % 3][rng() % kN];
    coeff = field::add(coeff, 1);
    z_tamper_rejects += verify(kp.pk, msg, bumped, P) ? 0 : 1;

    Signature other_hash = sig;
    other_hash.c_hash.bytes[rng() % 32] ^= 1;
    ASSERT_FALSE(verify(kp.pk, msg, other_hash, P));

    const KeyPair other = keygen(testing::random_seed(rng), P);
    ASSERT_FALSE(verify(other.pk, msg, sig, P));
  }
  EXPECT_EQ(z_tamper_rejects, kTrials);
}

// A low-order change to t barely moves A*z - c*t, so the high bits survive;
// only the key digest in the challenge hash catches it.
TEST(Verify, RejectsSmallChangeToPublicKey)
{
  Rng rng(62);
  for (int t = 0; t < 50; ++t) {
    const KeyPair kp = keygen(testing::random_seed(rng), P);
    const auto msg = testing::random_bytes(rng, 16);
    const Signature sig = sign(kp.sk, msg, P);

    PublicKey nudged = kp.pk;
    auto& coeff = nudged.t[rng() % 4][rng() % kN];
    coeff = field::add(coeff, 1);
    EXPECT_EQ(high_bits(verifier_commitment(nudged, sig, P), P).polys,
              high_bits(verifier_commitment(kp.pk, sig, P), P).polys);
    ASSERT_FALSE(verify(nudged, msg, sig, P));
  }
}

TEST(Verify, TotalOnMalformedInput)
{
  Rng rng(62);
  const KeyPair kp = keygen(testing::random_seed(rng), P);
  const auto msg = bytes_of("m");
  const Signature sig = sign(kp.sk, msg, P);

  Signature short_z = sig;
  short_z.z = PolyVec(2);
  EXPECT_FALSE(verify(kp.pk, msg, short_z, P));

  Signature big_z = sig;
  big_z.z[0][0] = field::from_signed(kBound + 1);
  EXPECT_FALSE(verify(kp.pk, msg, big_z, P));

  Signature noncanonical = sig;
  noncanonical.z[1][7] = kQ + 3;
  EXPECT_FALSE(verify(kp.pk, msg, noncanonical, P));

  PublicKey bad_pk = kp.pk;
  bad_pk.t = PolyVec(1);
  EXPECT_FALSE(verify(bad_pk, msg, sig, P));

  EXPECT_FALSE(verify_encoded({}, msg, {}, P));
  const auto garbage = testing::random_bytes(rng, signature_size(P));
  EXPECT_FALSE(verify_encoded(encode_pk(kp.pk, P), msg, garbage, P));
}

TEST(Sign, ConcurrentSigningWithSharedKey)
{
  Rng rng(63);
  const KeyPair kp = keygen(testing::random_seed(rng), P);
  const Signer signer(kp.sk, P);
  std::vector<std::vector<uint8_t>> msgs;
  for (int i = 0; i < 16; ++i) msgs.push_back(testing::random_bytes(rng, 24));

  std::vector<Signature> sequential;
  for (const auto& m : msgs) sequential.push_back(signer.sign(m));

  std::vector<Signature> parallel(msgs.size());
  {
    std::vector<std::jthread> workers;
    for (size_t w = 0; w < 4; ++w) {
      workers.emplace_back([&, w] {
        for (size_t i = w; i < msgs.size(); i += 4) parallel[i] = signer.sign(msgs[i]);
      });
    }
  }
  EXPECT_EQ(parallel, sequential);
}

TEST(Scheme, CustomParameterSet)
{
  const auto p = validate(parse_paramset_config("k=5\nl=4\neta=2\n"));
  Rng rng(64);
  const KeyPair kp = keygen(testing::random_seed(rng), p);
  const auto msg = bytes_of("custom");
  const Signature sig = sign(kp.sk, msg, p);
  EXPECT_TRUE(verify(kp.pk, msg, sig, p));
  const auto pk = encode_pk(kp.pk, p);
  EXPECT_EQ(pk[1], kCustomParamSetId);
  EXPECT_THROW(decode_pk(pk, P), DecodeError);
  EXPECT_TRUE(verify_encoded(pk, msg, encode_sig(sig, p), p));
}

} // namespace
} // namespace bgsig
