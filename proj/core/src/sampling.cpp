#include "bgsig/sampling.hpp"

#include <algorithm>

namespace bgsig {

namespace {

Shake256 tagged_stream(DomainTag tag)
{
  Shake256 h;
  h.absorb_byte(static_cast<uint8_t>(tag));
  return h;
}

void absorb_u16(Shake256& h, uint16_t v)
{
  const std::array<uint8_t, 2> le = { static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8) };
  h.absorb(le);
}

// Rejection-samples kN values in [0, bound) from `width`-bit chunks and maps
// each accepted chunk through `map`.
template<typename Map>
Poly rejection_sample(XofBitReader& reader, uint32_t width, uint32_t bound, Map map)
{
  Poly out;
  size_t filled = 0;
  while (filled < kN) {
    const uint32_t v = reader.next(width);
    if (v < bound) {
      out[filled++] = map(v);
    }
  }
  return out;
}

} // namespace

uint32_t XofBitReader::next(uint32_t width) noexcept
{
  while (acc_bits_ < width) {
    std::array<uint8_t, 1> b{};
    stream_.squeeze(b);
    acc_ |= uint64_t{ b[0] } << acc_bits_;
    acc_bits_ += 8;
  }
  const uint32_t v = static_cast<uint32_t>(acc_ & ((uint64_t{ 1 } << width) - 1));
  acc_ >>= width;
  acc_bits_ -= width;
  return v;
}

std::vector<uint8_t> xof(DomainTag tag, std::span<const uint8_t> input, size_t outlen)
{
  Shake256 h = tagged_stream(tag);
  h.absorb(input);
  return h.squeeze(outlen);
}

Poly expand_a_entry(const Seed& rho, uint8_t i, uint8_t j)
{
  Shake256 h = tagged_stream(DomainTag::matrix);
  h.absorb(rho.span());
  h.absorb_byte(i);
  h.absorb_byte(j);
  XofBitReader reader(std::move(h));
  return rejection_sample(reader, 23, kQ, [](uint32_t v) { return v; });
}

MatrixA expand_a(const Seed& rho, const ValidatedParamSet& p)
{
  MatrixA A(p->k, p->l);
  for (uint32_t i = 0; i < p->k; ++i) {
    for (uint32_t j = 0; j < p->l; ++j) {
      A.at(i, j) = expand_a_entry(rho, static_cast<uint8_t>(i), static_cast<uint8_t>(j));
    }
  }
  return A;
}

Poly expand_s(const Seed& sigma, uint16_t nonce, const ValidatedParamSet& p)
{
  Shake256 h = tagged_stream(DomainTag::secret);
  h.absorb(sigma.span());
  absorb_u16(h, nonce);
  XofBitReader reader(std::move(h));
  const int64_t eta = p->eta;
  return rejection_sample(reader, p->bits_s, 2 * p->eta + 1,
                          [eta](uint32_t v) { return field::from_signed(int64_t{ v } - eta); });
}

Poly expand_mask(const Seed& key, std::span<const uint8_t> message, uint16_t attempt, uint16_t j,
                 const ValidatedParamSet& p)
{
  Shake256 h = tagged_stream(DomainTag::mask);
  h.absorb(key.span());
  absorb_u16(h, attempt);
  absorb_u16(h, j);
  h.absorb(message);
  XofBitReader reader(std::move(h));
  const int64_t gamma = p->gamma;
  const uint32_t bound = 2 * p->gamma + 1;
  return rejection_sample(reader, bits_for(bound), bound,
                          [gamma](uint32_t v) { return field::from_signed(int64_t{ v } - gamma); });
}

CHash hash_challenge(std::span<const uint8_t> w1_bytes, const Seed& pk_digest,
                     std::span<const uint8_t> message)
{
  Shake256 h = tagged_stream(DomainTag::challenge);
  h.absorb(w1_bytes);
  h.absorb(pk_digest.bytes);
  h.absorb(message);
  CHash out;
  h.squeeze(out.bytes);
  return out;
}

Challenge sample_in_ball(const CHash& ch, const ValidatedParamSet& p)
{
  Shake256 h = tagged_stream(DomainTag::ball);
  h.absorb(ch.span());

  std::array<uint8_t, 8> sign_bytes{};
  h.squeeze(sign_bytes);
  uint64_t signs = 0;
  for (size_t i = 0; i < 8; ++i) {
    signs |= uint64_t{ sign_bytes[i] } << (8 * i);
  }

  // dense working copy; positions [n - tau, n) are filled in order and each
  // new nonzero is swapped to a uniformly chosen index in [0, i]
  std::array<int8_t, kN> c{};
  for (uint32_t i = kN - p->tau; i < kN; ++i) {
    uint32_t j = 0;
    do {
      std::array<uint8_t, 1> b{};
      h.squeeze(b);
      j = b[0];
    } while (j > i);
    c[i] = c[j];
    c[j] = static_cast<int8_t>(1 - 2 * static_cast<int>(signs & 1));
    signs >>= 1;
  }

  Challenge out;
  out.terms.reserve(p->tau);
  for (uint16_t i = 0; i < kN; ++i) {
    if (c[i] != 0) {
      out.terms.push_back({ i, c[i] });
    }
  }
  return out;
}

Poly Challenge::to_poly() const noexcept
{
  Poly p;
  for (const auto& t : terms) {
    p[t.position] = t.sign > 0 ? 1 : kQ - 1;
  }
  return p;
}

Poly challenge_mul(const Challenge& c, const Poly& a) noexcept
{
  // coefficients of c*a are bounded by tau * q in magnitude; accumulate signed
  std::array<int64_t, kN> acc{};
  for (const auto& t : c.terms) {
    const size_t shift = t.position;
    for (size_t i = 0; i < kN; ++i) {
      const int64_t v = t.sign * int64_t{ a[i] };
      const size_t d = i + shift;
      if (d < kN) {
        acc[d] += v;
      } else {
        acc[d - kN] -= v;
      }
    }
  }
  Poly r;
  for (size_t i = 0; i < kN; ++i) {
    r[i] = field::from_signed(acc[i]);
  }
  return r;
}

PolyVec challenge_mul(const Challenge& c, const PolyVec& v)
{
  PolyVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    r[i] = challenge_mul(c, v[i]);
  }
  return r;
}

} // namespace bgsig
