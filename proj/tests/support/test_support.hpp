#pragma once

// Shared generators and independent reference computations for the test
// suites. Nothing in here calls into the code path it is used to check.

#include "bgsig/params.hpp"
#include "bgsig/ring.hpp"
#include "bgsig/sampling.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace bgsig::testing {

using Rng = std::mt19937_64;

inline Poly random_poly(Rng& rng)
{
  std::uniform_int_distribution<uint32_t> d(0, kQ - 1);
  Poly p;
  for (auto& c : p.coeffs) {
    c = d(rng);
  }
  return p;
}

// coefficients uniform in [-bound, bound], stored canonically
inline Poly random_small_poly(Rng& rng, int32_t bound)
{
  std::uniform_int_distribution<int32_t> d(-bound, bound);
  Poly p;
  for (auto& c : p.coeffs) {
    const int32_t v = d(rng);
    c = v < 0 ? static_cast<uint32_t>(v + static_cast<int32_t>(kQ)) : static_cast<uint32_t>(v);
  }
  return p;
}

inline PolyVec random_vec(Rng& rng, size_t len)
{
  PolyVec v(len);
  for (auto& p : v) {
    p = random_poly(rng);
  }
  return v;
}

inline PolyVec random_small_vec(Rng& rng, size_t len, int32_t bound)
{
  PolyVec v(len);
  for (auto& p : v) {
    p = random_small_poly(rng, bound);
  }
  return v;
}

inline Seed random_seed(Rng& rng)
{
  Seed s;
  for (auto& b : s.bytes) {
    b = static_cast<uint8_t>(rng());
  }
  return s;
}

inline std::vector<uint8_t> random_bytes(Rng& rng, size_t len)
{
  std::vector<uint8_t> out(len);
  for (auto& b : out) {
    b = static_cast<uint8_t>(rng());
  }
  return out;
}

inline CHash random_chash(Rng& rng)
{
  CHash h;
  for (auto& b : h.bytes) {
    b = static_cast<uint8_t>(rng());
  }
  return h;
}

// Signed schoolbook product with plain long arithmetic and a final reduction;
// the result is returned as centered integers, not reduced field elements,
// so it can stand in for c*s without any modular wrap.
inline std::vector<int64_t> negacyclic_signed(const std::vector<int64_t>& a,
                                              const std::vector<int64_t>& b)
{
  const size_t n = a.size();
  std::vector<int64_t> out(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      const size_t d = i + j;
      if (d < n) {
        out[d] += a[i] * b[j];
      } else {
        out[d - n] -= a[i] * b[j];
      }
    }
  }
  return out;
}

inline std::vector<int64_t> centered(const Poly& p)
{
  std::vector<int64_t> out(kN);
  for (size_t i = 0; i < kN; ++i) {
    out[i] = p[i] > (kQ - 1) / 2 ? int64_t{ p[i] } - kQ : int64_t{ p[i] };
  }
  return out;
}

// Reference High/Low split by search: the unique (high, low) with
// high in [0, (q-1)/alpha), low in the centered residue window, and the
// top-block fold to high 0. Written from the definition, not the formula.
struct RefSplit {
  int64_t high;
  int64_t low;
};

inline RefSplit reference_split(int64_t r, int64_t q, int64_t alpha)
{
  const int64_t half = alpha / 2;
  const int64_t blocks = (q - 1) / alpha;
  // candidate centres h*alpha for h = 0..blocks; the centre at blocks*alpha
  // is q-1, which is identified with -1 (centre 0, low shifted by one)
  for (int64_t h = 0; h <= blocks; ++h) {
    const int64_t low = r - h * alpha;
    if (low > -half && low <= half) {
      if (h == blocks) {
        return { 0, low - 1 };
      }
      return { h, low };
    }
  }
  return { -1, 0 }; // unreachable for r in [0, q)
}

} // namespace bgsig::testing
