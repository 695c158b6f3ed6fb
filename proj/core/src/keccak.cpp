#include "bgsig/keccak.hpp"

#include <bit>

namespace bgsig {

namespace {

constexpr std::array<uint64_t, 24> kRoundConstants = {
  0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808AULL, 0x8000000080008000ULL,
  0x000000000000808BULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
  0x000000000000008AULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000AULL,
  0x000000008000808BULL, 0x800000000000008BULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
  0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800AULL, 0x800000008000000AULL,
  0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// rho offsets and pi destinations, in the order lanes are visited by the
// combined rho-pi walk starting at lane 1
constexpr std::array<int, 24> kRho = { 1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                       27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44 };
constexpr std::array<int, 24> kPi = { 10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                                      15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1 };

} // namespace

void keccak_f1600(std::array<uint64_t, 25>& a) noexcept
{
  for (const uint64_t rc : kRoundConstants) {
    // theta
    std::array<uint64_t, 5> c{};
    for (int x = 0; x < 5; ++x) {
      c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
    }
    for (int x = 0; x < 5; ++x) {
      const uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
      for (int y = 0; y < 25; y += 5) {
        a[y + x] ^= d;
      }
    }

    // rho + pi
    uint64_t cur = a[1];
    for (int i = 0; i < 24; ++i) {
      const int j = kPi[i];
      const uint64_t tmp = a[j];
      a[j] = std::rotl(cur, kRho[i]);
      cur = tmp;
    }

    // chi
    for (int y = 0; y < 25; y += 5) {
      const std::array<uint64_t, 5> row = { a[y], a[y + 1], a[y + 2], a[y + 3], a[y + 4] };
      for (int x = 0; x < 5; ++x) {
        a[y + x] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
      }
    }

    // iota
    a[0] ^= rc;
  }
}

namespace {

inline void xor_byte(std::array<uint64_t, 25>& s, size_t pos, uint8_t b) noexcept
{
  s[pos / 8] ^= uint64_t{ b } << (8 * (pos % 8));
}

inline uint8_t get_byte(const std::array<uint64_t, 25>& s, size_t pos) noexcept
{
  return static_cast<uint8_t>(s[pos / 8] >> (8 * (pos % 8)));
}

} // namespace

void Shake256::absorb(std::span<const uint8_t> data) noexcept
{
  for (const uint8_t b : data) {
    xor_byte(state_, pos_, b);
    if (++pos_ == kRate) {
      keccak_f1600(state_);
      pos_ = 0;
    }
  }
}

void Shake256::finalize() noexcept
{
  // SHAKE domain bits 1111 followed by pad10*1
  xor_byte(state_, pos_, 0x1F);
  xor_byte(state_, kRate - 1, 0x80);
  keccak_f1600(state_);
  pos_ = 0;
  squeezing_ = true;
}

void Shake256::squeeze(std::span<uint8_t> out) noexcept
{
  if (!squeezing_) {
    finalize();
  }
  for (uint8_t& b : out) {
    if (pos_ == kRate) {
      keccak_f1600(state_);
      pos_ = 0;
    }
    b = get_byte(state_, pos_++);
  }
}

std::vector<uint8_t> shake256(std::span<const uint8_t> input, size_t outlen)
{
  Shake256 h;
  h.absorb(input);
  return h.squeeze(outlen);
}

} // namespace bgsig
