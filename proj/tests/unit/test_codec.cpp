#include "bgsig/codec.hpp"

#include "bgsig/scheme.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace bgsig {
namespace {

const ValidatedParamSet& P = default_params();
using testing::Rng;

TEST(PackBits, ZerosPadToWholeBytes)
{
  const std::vector<int64_t> v = { 0, 0, 0, 0 };
  EXPECT_EQ(pack_bits(v, 3, 0), (std::vector<uint8_t>{ 0x00, 0x00 }));
}

TEST(PackBits, LittleEndianLayout)
{
  const std::vector<int64_t> v = { 1, 2, 7 };
  // 001 | 010 | 111 -> bits LSB first: 1,0,0, 0,1,0, 1,1,1
  EXPECT_EQ(pack_bits(v, 3, 0), (std::vector<uint8_t>{ 0b11010001, 0b1 }));
  const std::vector<int64_t> s = { -6, 6 };
  EXPECT_EQ(pack_bits(s, 4, -6), (std::vector<uint8_t>{ 0xC0 }));
}

TEST(PackBits, RoundTripRandomSequences)
{
  Rng rng(41);
  for (const uint32_t width : { 3u, 4u, 20u, 23u }) {
    for (int t = 0; t < 1000; ++t) {
      const size_t count = rng() % 300;
      const int64_t offset = static_cast<int64_t>(rng() % 1000) - 500;
      std::vector<int64_t> v(count);
      for (auto& x : v) x = static_cast<int64_t>(rng() % (1ull << width)) + offset;
      const auto packed = pack_bits(v, width, offset);
      ASSERT_EQ(packed.size(), packed_size(count, width));
      ASSERT_EQ(unpack_bits(packed, width, offset, count), v);
    }
  }
}

TEST(PackBits, RejectsOutOfRange)
{
  const std::vector<int64_t> v = { 8 };
  EXPECT_THROW(pack_bits(v, 3, 0), std::invalid_argument);
  const std::vector<int64_t> neg = { -7 };
  EXPECT_THROW(pack_bits(neg, 4, -6), std::invalid_argument);
}

TEST(UnpackBits, Strictness)
{
  // 4 values * 3 bits = 12 bits; the top nibble of byte 1 is padding
  const std::vector<uint8_t> padded = { 0x00, 0x10 };
  EXPECT_THROW(unpack_bits(padded, 3, 0, 4), DecodeError);
  const std::vector<uint8_t> short_buf = { 0x00 };
  EXPECT_THROW(unpack_bits(short_buf, 3, 0, 4), DecodeError);
  const std::vector<uint8_t> ok = { 0xFF, 0x0F };
  EXPECT_NO_THROW(unpack_bits(ok, 3, 0, 4));
  EXPECT_THROW(unpack_bits(ok, 3, 0, 4, 7), DecodeError);
}

TEST(ObjectSizes, DefaultParams)
{
  EXPECT_EQ(public_key_size(P), 2978u);
  EXPECT_EQ(secret_key_size(P), 3906u);
  EXPECT_EQ(signature_size(P), 1954u);
  EXPECT_EQ(signature_size(P), 2u + 32u + 3u * 256u * 20u / 8u);
  EXPECT_EQ(w1_size(P), 384u);
}

struct Material {
  KeyPair kp;
  Signature sig;
};

Material make_material(Rng& rng)
{
  Material m;
  m.kp = keygen(testing::random_seed(rng), P);
  const auto msg = testing::random_bytes(rng, rng() % 64);
  m.sig = sign(m.kp.sk, msg, P);
  return m;
}

TEST(Objects, RoundTripAndSizes)
{
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const Material m = make_material(rng);
    const auto pk = encode_pk(m.kp.pk, P);
    const auto sk = encode_sk(m.kp.sk, P);
    const auto sig = encode_sig(m.sig, P);
    ASSERT_EQ(pk.size(), 2978u);
    ASSERT_EQ(sk.size(), 3906u);
    ASSERT_EQ(sig.size(), 1954u);
    ASSERT_EQ(decode_pk(pk, P), m.kp.pk);
    ASSERT_EQ(decode_sk(sk, P), m.kp.sk);
    ASSERT_EQ(decode_sig(sig, P), m.sig);
    // canonical: encode(decode(bytes)) == bytes
    ASSERT_EQ(encode_pk(decode_pk(pk, P), P), pk);
    ASSERT_EQ(encode_sk(decode_sk(sk, P), P), sk);
    ASSERT_EQ(encode_sig(decode_sig(sig, P), P), sig);
  }
}

TEST(Objects, HeaderLayout)
{
  Rng rng(43);
  const Material m = make_material(rng);
  const auto pk = encode_pk(m.kp.pk, P);
  const auto sk = encode_sk(m.kp.sk, P);
  const auto sig = encode_sig(m.sig, P);
  EXPECT_EQ(pk[0], 0xB1);
  EXPECT_EQ(sk[0], 0xB2);
  EXPECT_EQ(sig[0], 0xB3);
  EXPECT_EQ(pk[1], kDefaultParamSetId);
  EXPECT_TRUE(std::equal(m.kp.pk.rho.bytes.begin(), m.kp.pk.rho.bytes.end(), pk.begin() + 2));
  EXPECT_TRUE(std::equal(m.sig.c_hash.bytes.begin(), m.sig.c_hash.bytes.end(), sig.begin() + 2));

  // kind confusion
  EXPECT_THROW(decode_sig(pk, P), DecodeError);
  auto relabelled = sig;
  relabelled[0] = 0xB1;
  EXPECT_THROW(decode_sig(relabelled, P), DecodeError);
  auto other_params = sig;
  other_params[1] = kCustomParamSetId;
  EXPECT_THROW(decode_sig(other_params, P), DecodeError);
}

TEST(Objects, LengthMismatch)
{
  Rng rng(44);
  const Material m = make_material(rng);
  auto sig = encode_sig(m.sig, P);
  auto truncated = sig;
  truncated.pop_back();
  EXPECT_THROW(decode_sig(truncated, P), DecodeError);
  sig.push_back(0);
  EXPECT_THROW(decode_sig(sig, P), DecodeError);
  EXPECT_THROW(decode_pk(std::vector<uint8_t>{}, P), DecodeError);
}

TEST(Objects, ZCoefficientOutOfRange)
{
  Rng rng(45);
  const Material m = make_material(rng);
  auto sig = encode_sig(m.sig, P);
  // first z coefficient occupies the low 20 bits starting at byte 34
  const uint32_t bad = 2 * 523416 + 1; // 1046833, first invalid raw value
  sig[34] = static_cast<uint8_t>(bad);
  sig[35] = static_cast<uint8_t>(bad >> 8);
  sig[36] = static_cast<uint8_t>((sig[36] & 0xF0) | ((bad >> 16) & 0x0F));
  EXPECT_THROW(decode_sig(sig, P), DecodeError);

  const uint32_t last_ok = bad - 1;
  sig[34] = static_cast<uint8_t>(last_ok);
  sig[35] = static_cast<uint8_t>(last_ok >> 8);
  sig[36] = static_cast<uint8_t>((sig[36] & 0xF0) | ((last_ok >> 16) & 0x0F));
  const Signature s = decode_sig(sig, P);
  EXPECT_EQ(to_centered(s.z[0][0]), 523416);
}

TEST(Objects, TCoefficientOutOfRange)
{
  Rng rng(46);
  const Material m = make_material(rng);
  auto pk = encode_pk(m.kp.pk, P);
  // first t coefficient: low 23 bits starting at byte 34; set raw to q
  pk[34] = static_cast<uint8_t>(kQ);
  pk[35] = static_cast<uint8_t>(kQ >> 8);
  pk[36] = static_cast<uint8_t>((pk[36] & 0x80) | ((kQ >> 16) & 0x7F));
  EXPECT_THROW(decode_pk(pk, P), DecodeError);
}

TEST(Objects, SecretKeyConsistencyChecked)
{
  Rng rng(47);
  const Material m = make_material(rng);
  SecretKey sk = m.kp.sk;
  // still within eta, but t no longer matches
  sk.s2[0][0] = sk.s2[0][0] == 0 ? 1 : 0;
  EXPECT_THROW(decode_sk(encode_sk(sk, P), P), DecodeError);
}

// A single flipped bit must never decode to the same object.
template<typename Decode, typename T>
void flip_sweep(Rng& rng, const std::vector<uint8_t>& bytes, const T& original, Decode decode,
                int flips)
{
  for (int t = 0; t < flips; ++t) {
    auto corrupt = bytes;
    const size_t bit = rng() % (bytes.size() * 8);
    corrupt[bit / 8] ^= static_cast<uint8_t>(1u << (bit % 8));
    try {
      const T decoded = decode(corrupt);
      ASSERT_NE(decoded, original) << "bit " << bit;
    } catch (const DecodeError&) {
    }
  }
}

TEST(Objects, SingleBitFlipsNeverSilent)
{
  Rng rng(48);
  const Material m = make_material(rng);
  flip_sweep(rng, encode_pk(m.kp.pk, P), m.kp.pk,
             [](const auto& b) { return decode_pk(b, P); }, 1000);
  flip_sweep(rng, encode_sig(m.sig, P), m.sig, [](const auto& b) { return decode_sig(b, P); },
             1000);
  flip_sweep(rng, encode_sk(m.kp.sk, P), m.kp.sk, [](const auto& b) { return decode_sk(b, P); },
             200);
}

TEST(EncodeW1, Basics)
{
  HighVec h;
  h.polys.resize(4);
  const auto zeros = encode_w1(h, P);
  EXPECT_EQ(zeros, std::vector<uint8_t>(384, 0));

  HighVec h2 = h;
  h2.polys[3][255] = 5;
  EXPECT_NE(encode_w1(h2, P), zeros);

  Rng rng(49);
  for (int t = 0; t < 1000; ++t) {
    HighVec r;
    r.polys.resize(4);
    for (auto& poly : r.polys)
      for (auto& v : poly) v = static_cast<uint8_t>(rng() % 8);
    ASSERT_EQ(decode_w1(encode_w1(r, P), P), r);
  }
}

} // namespace
} // namespace bgsig
