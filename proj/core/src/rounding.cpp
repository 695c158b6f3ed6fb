#include "bgsig/rounding.hpp"

#include <algorithm>

namespace bgsig {

HighVec high_bits(const PolyVec& v, const ValidatedParamSet& p)
{
  HighVec h;
  h.polys.resize(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = 0; j < kN; ++j) {
      h.polys[i][j] = static_cast<uint8_t>(decompose(v[i][j], p).high);
    }
  }
  return h;
}

PolyVec low_bits(const PolyVec& v, const ValidatedParamSet& p)
{
  PolyVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = 0; j < kN; ++j) {
      out[i][j] = field::from_signed(decompose(v[i][j], p).low);
    }
  }
  return out;
}

uint32_t low_inf_norm(const PolyVec& v, const ValidatedParamSet& p) noexcept
{
  uint32_t m = 0;
  for (const auto& poly : v) {
    for (const uint32_t c : poly.coeffs) {
      const int32_t low = decompose(c, p).low;
      m = std::max(m, static_cast<uint32_t>(low < 0 ? -low : low));
    }
  }
  return m;
}

} // namespace bgsig
