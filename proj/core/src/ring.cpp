#include "bgsig/ring.hpp"

#include <algorithm>
#include <string>

namespace bgsig {

namespace {

// 1753 is a primitive 512-th root of unity mod q.
constexpr uint32_t kRoot = 1753;

constexpr uint32_t bitrev8(uint32_t v) noexcept
{
  uint32_t r = 0;
  for (int i = 0; i < 8; ++i) {
    r = (r << 1) | ((v >> i) & 1);
  }
  return r;
}

struct Twiddles {
  std::array<uint32_t, kN> zetas{};
  std::array<uint32_t, kN> inv_zetas{};
  uint32_t n_inv = 0;
};

constexpr Twiddles make_twiddles() noexcept
{
  Twiddles t;
  for (uint32_t i = 0; i < kN; ++i) {
    t.zetas[i] = field::pow(kRoot, bitrev8(i));
    t.inv_zetas[i] = field::inv(t.zetas[i]);
  }
  t.n_inv = field::inv(kN);
  return t;
}

constexpr Twiddles kTw = make_twiddles();

static_assert(field::pow(kRoot, 256) == kQ - 1, "root must have order 512");

// Index of the twiddle used by the butterfly block starting at `start` in
// the layer with half-width `len`.
constexpr size_t twiddle_index(size_t len, size_t start) noexcept
{
  return kN / 2 / len + start / (2 * len);
}

} // namespace

Poly poly_add(const Poly& a, const Poly& b) noexcept
{
  Poly r;
  for (size_t i = 0; i < kN; ++i) {
    r[i] = field::add(a[i], b[i]);
  }
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) noexcept
{
  Poly r;
  for (size_t i = 0; i < kN; ++i) {
    r[i] = field::sub(a[i], b[i]);
  }
  return r;
}

Poly poly_neg(const Poly& a) noexcept
{
  Poly r;
  for (size_t i = 0; i < kN; ++i) {
    r[i] = field::neg(a[i]);
  }
  return r;
}

// Cooley-Tukey, natural order in, bit-reversed order out.
NttPoly ntt(const Poly& a) noexcept
{
  NttPoly out;
  auto& f = out.evals;
  f = a.coeffs;
  for (size_t len = kN / 2; len >= 1; len >>= 1) {
    for (size_t start = 0; start < kN; start += 2 * len) {
      const uint32_t zeta = kTw.zetas[twiddle_index(len, start)];
      for (size_t j = start; j < start + len; ++j) {
        const uint32_t t = field::mul(zeta, f[j + len]);
        f[j + len] = field::sub(f[j], t);
        f[j] = field::add(f[j], t);
      }
    }
  }
  return out;
}

// Gentleman-Sande, bit-reversed order in, natural order out.
Poly intt(const NttPoly& a) noexcept
{
  Poly out;
  auto& f = out.coeffs;
  f = a.evals;
  for (size_t len = 1; len < kN; len <<= 1) {
    for (size_t start = 0; start < kN; start += 2 * len) {
      const uint32_t zeta_inv = kTw.inv_zetas[twiddle_index(len, start)];
      for (size_t j = start; j < start + len; ++j) {
        const uint32_t t = f[j];
        f[j] = field::add(t, f[j + len]);
        f[j + len] = field::mul(zeta_inv, field::sub(t, f[j + len]));
      }
    }
  }
  for (auto& c : f) {
    c = field::mul(c, kTw.n_inv);
  }
  return out;
}

NttPoly pointwise_mul(const NttPoly& a, const NttPoly& b) noexcept
{
  NttPoly r;
  for (size_t i = 0; i < kN; ++i) {
    r.evals[i] = field::mul(a.evals[i], b.evals[i]);
  }
  return r;
}

NttPoly pointwise_add(const NttPoly& a, const NttPoly& b) noexcept
{
  NttPoly r;
  for (size_t i = 0; i < kN; ++i) {
    r.evals[i] = field::add(a.evals[i], b.evals[i]);
  }
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) noexcept
{
  return intt(pointwise_mul(ntt(a), ntt(b)));
}

Poly schoolbook_mul(const Poly& a, const Poly& b) noexcept
{
  // accumulate x^k terms with positive sign and x^(k+n) terms with negative sign
  std::array<uint64_t, kN> pos{};
  std::array<uint64_t, kN> neg{};
  for (size_t i = 0; i < kN; ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (size_t j = 0; j < kN; ++j) {
      const uint64_t prod = uint64_t{ a[i] } * b[j] % kQ;
      if (i + j < kN) {
        pos[i + j] += prod;
      } else {
        neg[i + j - kN] += prod;
      }
    }
  }
  Poly r;
  for (size_t i = 0; i < kN; ++i) {
    r[i] = field::sub(static_cast<uint32_t>(pos[i] % kQ), static_cast<uint32_t>(neg[i] % kQ));
  }
  return r;
}

uint32_t inf_norm(const Poly& p) noexcept
{
  uint32_t m = 0;
  for (const uint32_t c : p.coeffs) {
    const int32_t v = to_centered(c);
    m = std::max(m, static_cast<uint32_t>(v < 0 ? -v : v));
  }
  return m;
}

namespace {

void check_same_length(const PolyVec& a, const PolyVec& b)
{
  if (a.size() != b.size()) {
    throw DimensionError("polynomial vector length mismatch: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}

} // namespace

PolyVec vec_add(const PolyVec& a, const PolyVec& b)
{
  check_same_length(a, b);
  PolyVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = poly_add(a[i], b[i]);
  }
  return r;
}

PolyVec vec_sub(const PolyVec& a, const PolyVec& b)
{
  check_same_length(a, b);
  PolyVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = poly_sub(a[i], b[i]);
  }
  return r;
}

uint32_t inf_norm(const PolyVec& v) noexcept
{
  uint32_t m = 0;
  for (const auto& p : v) {
    m = std::max(m, inf_norm(p));
  }
  return m;
}

NttMatrix::NttMatrix(const MatrixA& A)
  : rows_(A.rows())
  , cols_(A.cols())
{
  entries_.reserve(rows_ * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) {
      entries_.push_back(ntt(A.at(i, j)));
    }
  }
}

PolyVec NttMatrix::mul(const PolyVec& v) const
{
  if (v.size() != cols_) {
    throw DimensionError("matrix has " + std::to_string(cols_) + " columns, vector has length " +
                         std::to_string(v.size()));
  }
  std::vector<NttPoly> v_hat;
  v_hat.reserve(cols_);
  for (const auto& p : v) {
    v_hat.push_back(ntt(p));
  }

  PolyVec r(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    NttPoly acc;
    for (size_t j = 0; j < cols_; ++j) {
      acc = pointwise_add(acc, pointwise_mul(entries_[i * cols_ + j], v_hat[j]));
    }
    r[i] = intt(acc);
  }
  return r;
}

PolyVec matvec_mul(const MatrixA& A, const PolyVec& v)
{
  return NttMatrix(A).mul(v);
}

} // namespace bgsig
