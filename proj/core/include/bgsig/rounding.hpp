#pragma once

#include "bgsig/params.hpp"
#include "bgsig/ring.hpp"

#include <array>
#include <cstdint>
#include <vector>

// High/Low split of Z_q elements by alpha = 2*gamma.
//
//   r = high * alpha + low (mod q),  high in [0, (q-1)/alpha),  low in [-gamma, gamma]
//
// low is the centered residue of r mod alpha in (-gamma, gamma]. The single
// exception is the top partial block: when r - low would equal q-1, high
// folds to 0 and low is decremented, so q-1 = 8*alpha never needs its own
// high value.
namespace bgsig {

struct Decomposition {
  uint32_t high = 0;
  int32_t low = 0;

  bool operator==(const Decomposition&) const = default;
};

// Modulus-generic form, used directly by tests on toy moduli.
// Requires alpha even and alpha | q-1, r in [0, q).
constexpr Decomposition decompose(uint32_t r, uint32_t q, uint32_t alpha) noexcept
{
  const int64_t half = alpha / 2;
  int64_t low = r % alpha;
  if (low > half) {
    low -= alpha;
  }
  const int64_t diff = static_cast<int64_t>(r) - low;
  if (diff == static_cast<int64_t>(q) - 1) {
    return { 0, static_cast<int32_t>(low - 1) };
  }
  return { static_cast<uint32_t>(diff / alpha), static_cast<int32_t>(low) };
}

inline Decomposition decompose(uint32_t r, const ValidatedParamSet& p) noexcept
{
  return decompose(r, p->q, p->alpha);
}

// High parts of a polynomial vector, one byte per coefficient.
struct HighVec {
  std::vector<std::array<uint8_t, kN>> polys;

  bool operator==(const HighVec&) const = default;
};

HighVec high_bits(const PolyVec& v, const ValidatedParamSet& p);

// Low parts, stored canonically (negative lows as q + low).
PolyVec low_bits(const PolyVec& v, const ValidatedParamSet& p);

// max |low| over every coefficient, without materialising low_bits.
uint32_t low_inf_norm(const PolyVec& v, const ValidatedParamSet& p) noexcept;

} // namespace bgsig
