#pragma once

#include "bgsig/params.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

// Arithmetic in R_q = Z_q[X]/(X^256 + 1), q = 8380417.
//
// Coefficients are always stored canonically in [0, q). Signed (centered)
// values only appear as a view, for norms and for packing small vectors.
// Nothing here is constant time.
namespace bgsig {

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace field {

constexpr uint32_t add(uint32_t a, uint32_t b) noexcept
{
  const uint32_t s = a + b;
  return s >= kQ ? s - kQ : s;
}

constexpr uint32_t sub(uint32_t a, uint32_t b) noexcept { return a >= b ? a - b : a + kQ - b; }

constexpr uint32_t neg(uint32_t a) noexcept { return a == 0 ? 0 : kQ - a; }

constexpr uint32_t mul(uint32_t a, uint32_t b) noexcept
{
  return static_cast<uint32_t>((uint64_t{ a } * b) % kQ);
}

constexpr uint32_t pow(uint32_t base, uint64_t e) noexcept
{
  uint32_t r = 1;
  while (e != 0) {
    if (e & 1) {
      r = mul(r, base);
    }
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

constexpr uint32_t inv(uint32_t a) noexcept { return pow(a, kQ - 2); }

// Canonical representative of a signed integer.
constexpr uint32_t from_signed(int64_t v) noexcept
{
  int64_t r = v % static_cast<int64_t>(kQ);
  if (r < 0) {
    r += kQ;
  }
  return static_cast<uint32_t>(r);
}

// Representative in (-q/2, q/2].
constexpr int32_t to_centered(uint32_t x) noexcept
{
  return x > (kQ - 1) / 2 ? static_cast<int32_t>(x) - static_cast<int32_t>(kQ)
                          : static_cast<int32_t>(x);
}

} // namespace field

using field::to_centered;

struct Poly {
  std::array<uint32_t, kN> coeffs{};

  uint32_t& operator[](size_t i) noexcept { return coeffs[i]; }
  uint32_t operator[](size_t i) const noexcept { return coeffs[i]; }

  static Poly constant(uint32_t c) noexcept
  {
    Poly p;
    p.coeffs[0] = c % kQ;
    return p;
  }

  static Poly monomial(size_t degree, uint32_t c = 1) noexcept
  {
    Poly p;
    p.coeffs[degree] = c % kQ;
    return p;
  }

  bool operator==(const Poly&) const = default;
};

// Evaluation-domain representation, bit-reversed order.
struct NttPoly {
  std::array<uint32_t, kN> evals{};

  bool operator==(const NttPoly&) const = default;
};

Poly poly_add(const Poly& a, const Poly& b) noexcept;
Poly poly_sub(const Poly& a, const Poly& b) noexcept;
Poly poly_neg(const Poly& a) noexcept;

// Negacyclic product through the NTT.
Poly poly_mul(const Poly& a, const Poly& b) noexcept;

// O(n^2) negacyclic convolution. Kept as a reference for poly_mul.
Poly schoolbook_mul(const Poly& a, const Poly& b) noexcept;

NttPoly ntt(const Poly& a) noexcept;
Poly intt(const NttPoly& a) noexcept;
NttPoly pointwise_mul(const NttPoly& a, const NttPoly& b) noexcept;
NttPoly pointwise_add(const NttPoly& a, const NttPoly& b) noexcept;

// max |centered coefficient|
uint32_t inf_norm(const Poly& p) noexcept;

class PolyVec {
public:
  PolyVec() = default;
  explicit PolyVec(size_t length)
    : polys_(length)
  {}

  size_t size() const noexcept { return polys_.size(); }
  Poly& operator[](size_t i) noexcept { return polys_[i]; }
  const Poly& operator[](size_t i) const noexcept { return polys_[i]; }

  auto begin() noexcept { return polys_.begin(); }
  auto end() noexcept { return polys_.end(); }
  auto begin() const noexcept { return polys_.begin(); }
  auto end() const noexcept { return polys_.end(); }

  bool operator==(const PolyVec&) const = default;

private:
  std::vector<Poly> polys_;
};

// Throws DimensionError on length mismatch.
PolyVec vec_add(const PolyVec& a, const PolyVec& b);
PolyVec vec_sub(const PolyVec& a, const PolyVec& b);
uint32_t inf_norm(const PolyVec& v) noexcept;

class MatrixA {
public:
  MatrixA(size_t rows, size_t cols)
    : rows_(rows)
    , cols_(cols)
    , entries_(rows * cols)
  {}

  size_t rows() const noexcept { return rows_; }
  size_t cols() const noexcept { return cols_; }

  Poly& at(size_t i, size_t j) noexcept { return entries_[i * cols_ + j]; }
  const Poly& at(size_t i, size_t j) const noexcept { return entries_[i * cols_ + j]; }

  bool operator==(const MatrixA&) const = default;

private:
  size_t rows_;
  size_t cols_;
  std::vector<Poly> entries_;
};

// Row i of the result is sum_j A[i][j] * v[j]. Throws DimensionError unless
// v.size() == A.cols().
PolyVec matvec_mul(const MatrixA& A, const PolyVec& v);

// A with every entry already transformed; reused across signing attempts.
class NttMatrix {
public:
  explicit NttMatrix(const MatrixA& A);

  size_t rows() const noexcept { return rows_; }
  size_t cols() const noexcept { return cols_; }

  PolyVec mul(const PolyVec& v) const;

private:
  size_t rows_;
  size_t cols_;
  std::vector<NttPoly> entries_;
};

} // namespace bgsig
