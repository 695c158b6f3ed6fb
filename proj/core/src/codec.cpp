#include "bgsig/codec.hpp"

#include "bgsig/sampling.hpp"

#include <algorithm>
#include <string>

namespace bgsig {

std::vector<uint8_t> pack_bits(std::span<const int64_t> values, uint32_t width, int64_t offset)
{
  if (width == 0 || width > 32) {
    throw std::invalid_argument("pack width must be in [1, 32]");
  }
  const uint64_t limit = uint64_t{ 1 } << width;
  std::vector<uint8_t> out(packed_size(values.size(), width), 0);

  uint64_t acc = 0;
  uint32_t acc_bits = 0;
  size_t pos = 0;
  for (const int64_t v : values) {
    const int64_t raw = v - offset;
    if (raw < 0 || static_cast<uint64_t>(raw) >= limit) {
      throw std::invalid_argument("value " + std::to_string(v) + " does not fit in " +
                                  std::to_string(width) + " bits at offset " +
                                  std::to_string(offset));
    }
    acc |= static_cast<uint64_t>(raw) << acc_bits;
    acc_bits += width;
    while (acc_bits >= 8) {
      out[pos++] = static_cast<uint8_t>(acc);
      acc >>= 8;
      acc_bits -= 8;
    }
  }
  if (acc_bits > 0) {
    out[pos] = static_cast<uint8_t>(acc);
  }
  return out;
}

std::vector<int64_t> unpack_bits(std::span<const uint8_t> bytes, uint32_t width, int64_t offset,
                                 size_t count, std::optional<uint64_t> raw_limit)
{
  if (width == 0 || width > 32) {
    throw std::invalid_argument("unpack width must be in [1, 32]");
  }
  if (bytes.size() != packed_size(count, width)) {
    throw DecodeError("packed field has " + std::to_string(bytes.size()) + " bytes, expected " +
                      std::to_string(packed_size(count, width)));
  }
  const uint64_t mask = (uint64_t{ 1 } << width) - 1;
  std::vector<int64_t> out;
  out.reserve(count);

  uint64_t acc = 0;
  uint32_t acc_bits = 0;
  size_t pos = 0;
  for (size_t i = 0; i < count; ++i) {
    while (acc_bits < width) {
      acc |= uint64_t{ bytes[pos++] } << acc_bits;
      acc_bits += 8;
    }
    const uint64_t raw = acc & mask;
    acc >>= width;
    acc_bits -= width;
    if (raw_limit && raw >= *raw_limit) {
      throw DecodeError("packed value " + std::to_string(raw) + " at index " + std::to_string(i) +
                        " is out of range");
    }
    out.push_back(static_cast<int64_t>(raw) + offset);
  }
  if (acc != 0) {
    throw DecodeError("nonzero padding bits");
  }
  return out;
}

namespace {

// Serialises fields in order and tracks the cursor on the way back.
class Writer {
public:
  explicit Writer(size_t reserve) { buf_.reserve(reserve); }

  void header(ObjectKind kind, const ValidatedParamSet& p)
  {
    buf_.push_back(static_cast<uint8_t>(kHeaderMagic | static_cast<uint8_t>(kind)));
    buf_.push_back(p.id());
  }

  void bytes(std::span<const uint8_t> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }

  void polys(const PolyVec& v, uint32_t width, int64_t offset, bool centered)
  {
    std::vector<int64_t> vals;
    vals.reserve(v.size() * kN);
    for (const auto& poly : v) {
      for (const uint32_t c : poly.coeffs) {
        vals.push_back(centered ? int64_t{ to_centered(c) } : int64_t{ c });
      }
    }
    bytes(pack_bits(vals, width, offset));
  }

  std::vector<uint8_t> finish() { return std::move(buf_); }

private:
  std::vector<uint8_t> buf_;
};

class Reader {
public:
  Reader(std::span<const uint8_t> in, size_t expected, ObjectKind kind, const ValidatedParamSet& p)
    : in_(in)
  {
    if (in.size() != expected) {
      throw DecodeError("encoded object has " + std::to_string(in.size()) + " bytes, expected " +
                        std::to_string(expected));
    }
    if (in[0] != (kHeaderMagic | static_cast<uint8_t>(kind))) {
      throw DecodeError("bad header kind byte");
    }
    if (in[1] != p.id()) {
      throw DecodeError("parameter set id mismatch");
    }
    pos_ = kHeaderSize;
  }

  template<size_t N>
  void bytes(std::array<uint8_t, N>& out)
  {
    std::copy_n(in_.begin() + pos_, N, out.begin());
    pos_ += N;
  }

  PolyVec polys(size_t len, uint32_t width, int64_t offset, uint64_t raw_limit)
  {
    const size_t nbytes = packed_size(len * kN, width);
    const auto vals = unpack_bits(in_.subspan(pos_, nbytes), width, offset, len * kN, raw_limit);
    pos_ += nbytes;
    PolyVec v(len);
    for (size_t i = 0; i < len; ++i) {
      for (size_t j = 0; j < kN; ++j) {
        v[i][j] = field::from_signed(vals[i * kN + j]);
      }
    }
    return v;
  }

private:
  std::span<const uint8_t> in_;
  size_t pos_ = 0;
};

void check_len(const PolyVec& v, size_t expected, const char* what)
{
  if (v.size() != expected) {
    throw std::invalid_argument(std::string(what) + " has wrong length");
  }
}

} // namespace

size_t public_key_size(const ValidatedParamSet& p) noexcept
{
  return kHeaderSize + Seed::kSize + packed_size(p->k * kN, p->bits_t);
}

size_t secret_key_size(const ValidatedParamSet& p) noexcept
{
  return kHeaderSize + 2 * Seed::kSize + packed_size(p->k * kN, p->bits_t) +
         packed_size(p->l * kN, p->bits_s) + packed_size(p->k * kN, p->bits_s);
}

size_t signature_size(const ValidatedParamSet& p) noexcept
{
  return kHeaderSize + CHash::kSize + packed_size(p->l * kN, p->bits_z);
}

size_t w1_size(const ValidatedParamSet& p) noexcept
{
  return packed_size(p->k * kN, p->bits_w1);
}

std::vector<uint8_t> encode_pk(const PublicKey& pk, const ValidatedParamSet& p)
{
  check_len(pk.t, p->k, "t");
  Writer w(public_key_size(p));
  w.header(ObjectKind::public_key, p);
  w.bytes(pk.rho.bytes);
  w.polys(pk.t, p->bits_t, 0, false);
  return w.finish();
}

PublicKey decode_pk(std::span<const uint8_t> bytes, const ValidatedParamSet& p)
{
  Reader r(bytes, public_key_size(p), ObjectKind::public_key, p);
  PublicKey pk;
  r.bytes(pk.rho.bytes);
  pk.t = r.polys(p->k, p->bits_t, 0, p->q);
  return pk;
}

std::vector<uint8_t> encode_sk(const SecretKey& sk, const ValidatedParamSet& p)
{
  check_len(sk.t, p->k, "t");
  check_len(sk.s1, p->l, "s1");
  check_len(sk.s2, p->k, "s2");
  const int64_t eta = p->eta;
  Writer w(secret_key_size(p));
  w.header(ObjectKind::secret_key, p);
  w.bytes(sk.rho.bytes);
  w.bytes(sk.key.bytes);
  w.polys(sk.t, p->bits_t, 0, false);
  w.polys(sk.s1, p->bits_s, -eta, true);
  w.polys(sk.s2, p->bits_s, -eta, true);
  return w.finish();
}

SecretKey decode_sk(std::span<const uint8_t> bytes, const ValidatedParamSet& p)
{
  Reader r(bytes, secret_key_size(p), ObjectKind::secret_key, p);
  const int64_t eta = p->eta;
  SecretKey sk;
  r.bytes(sk.rho.bytes);
  r.bytes(sk.key.bytes);
  sk.t = r.polys(p->k, p->bits_t, 0, p->q);
  sk.s1 = r.polys(p->l, p->bits_s, -eta, 2 * p->eta + 1);
  sk.s2 = r.polys(p->k, p->bits_s, -eta, 2 * p->eta + 1);

  if (vec_add(matvec_mul(expand_a(sk.rho, p), sk.s1), sk.s2) != sk.t) {
    throw DecodeError("secret key is inconsistent: t != A*s1 + s2");
  }
  return sk;
}

std::vector<uint8_t> encode_sig(const Signature& sig, const ValidatedParamSet& p)
{
  check_len(sig.z, p->l, "z");
  Writer w(signature_size(p));
  w.header(ObjectKind::signature, p);
  w.bytes(sig.c_hash.bytes);
  w.polys(sig.z, p->bits_z, -int64_t{ p.z_bound() }, true);
  return w.finish();
}

Signature decode_sig(std::span<const uint8_t> bytes, const ValidatedParamSet& p)
{
  Reader r(bytes, signature_size(p), ObjectKind::signature, p);
  Signature sig;
  r.bytes(sig.c_hash.bytes);
  sig.z = r.polys(p->l, p->bits_z, -int64_t{ p.z_bound() }, 2ull * p.z_bound() + 1);
  return sig;
}

std::vector<uint8_t> encode_w1(const HighVec& h, const ValidatedParamSet& p)
{
  std::vector<int64_t> vals;
  vals.reserve(h.polys.size() * kN);
  for (const auto& poly : h.polys) {
    vals.insert(vals.end(), poly.begin(), poly.end());
  }
  return pack_bits(vals, p->bits_w1, 0);
}

HighVec decode_w1(std::span<const uint8_t> bytes, const ValidatedParamSet& p)
{
  const auto vals = unpack_bits(bytes, p->bits_w1, 0, p->k * kN, p.high_count());
  HighVec h;
  h.polys.resize(p->k);
  for (size_t i = 0; i < vals.size(); ++i) {
    h.polys[i / kN][i % kN] = static_cast<uint8_t>(vals[i]);
  }
  return h;
}

} // namespace bgsig
