#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bgsig {

// Ring constants. These are fixed for every parameter set; the ring layer
// is specialised to them.
inline constexpr uint32_t kQ = 8380417; // 2^23 - 2^13 + 1
inline constexpr uint32_t kN = 256;
inline constexpr uint32_t kTau = 60;

// Identifier written into every encoded object header.
inline constexpr uint8_t kDefaultParamSetId = 0x01;
inline constexpr uint8_t kCustomParamSetId = 0xFF;

class ParamError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Raw, unchecked scheme constants. Only a ValidatedParamSet may be handed to
// the rest of the library.
struct ParamSet {
  uint32_t q = 0;
  uint32_t n = 0;
  uint32_t k = 0;
  uint32_t l = 0;
  uint32_t eta = 0;
  uint32_t gamma = 0;
  uint32_t tau = 0;
  uint32_t beta = 0;
  uint32_t alpha = 0;

  // bits per packed coefficient
  uint32_t bits_t = 0;
  uint32_t bits_z = 0;
  uint32_t bits_s = 0;
  uint32_t bits_w1 = 0;

  bool operator==(const ParamSet&) const = default;
};

// Largest possible |c*s| coefficient for a weight-tau challenge and a secret
// with coefficients bounded by eta.
constexpr uint32_t derive_beta(uint32_t eta, uint32_t tau) noexcept { return tau * eta; }

// Smallest w with count <= 2^w.
constexpr uint32_t bits_for(uint64_t count) noexcept
{
  uint32_t w = 0;
  while ((uint64_t{ 1 } << w) < count) {
    ++w;
  }
  return w;
}

// Fills beta, alpha and the packing widths from (q, n, k, l, eta, gamma, tau).
ParamSet derive_params(uint32_t q, uint32_t n, uint32_t k, uint32_t l, uint32_t eta,
                       uint32_t gamma, uint32_t tau);

// Canonical parameter set: k=4, l=3, eta=6, gamma=(q-1)/16.
ParamSet default_paramset();

// A ParamSet that has passed every invariant check. Immutable.
class ValidatedParamSet {
public:
  const ParamSet& get() const noexcept { return p_; }
  const ParamSet* operator->() const noexcept { return &p_; }

  // Header id: kDefaultParamSetId for the canonical set, kCustomParamSetId otherwise.
  uint8_t id() const noexcept { return id_; }

  // Bound on |z| and on |Low(w - c*s2)|.
  uint32_t z_bound() const noexcept { return p_.gamma - p_.beta; }
  // Number of High() values, (q-1)/alpha.
  uint32_t high_count() const noexcept { return (p_.q - 1) / p_.alpha; }

  bool operator==(const ValidatedParamSet& o) const noexcept { return p_ == o.p_; }

private:
  friend ValidatedParamSet validate(const ParamSet& p);
  explicit ValidatedParamSet(const ParamSet& p);

  ParamSet p_;
  uint8_t id_;
};

// Throws ParamError naming the first violated invariant.
ValidatedParamSet validate(const ParamSet& p);

// Process-wide validated default set.
const ValidatedParamSet& default_params();

// Parses `key=value` lines (keys q,n,k,l,eta,gamma,tau; '#' comments and blank
// lines allowed). Missing keys take their default value; derived fields are
// always recomputed. Throws ParamError on unknown keys or bad numbers.
ParamSet parse_paramset_config(std::string_view text);
ValidatedParamSet load_paramset_config(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ParamSet& p);

} // namespace bgsig
