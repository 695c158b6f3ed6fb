#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bgsig {

// Keccak-f[1600] permutation on a 25-lane state.
void keccak_f1600(std::array<uint64_t, 25>& state) noexcept;

// Incremental SHAKE-256 (FIPS 202). Absorb any number of times, then squeeze
// any number of times; absorbing after the first squeeze is a logic error.
class Shake256 {
public:
  static constexpr size_t kRate = 136;

  void absorb(std::span<const uint8_t> data) noexcept;
  void absorb_byte(uint8_t b) noexcept { absorb(std::span<const uint8_t>(&b, 1)); }
  void squeeze(std::span<uint8_t> out) noexcept;

  std::vector<uint8_t> squeeze(size_t len)
  {
    std::vector<uint8_t> out(len);
    squeeze(out);
    return out;
  }

private:
  void finalize() noexcept;

  std::array<uint64_t, 25> state_{};
  size_t pos_ = 0; // byte offset into the current rate block
  bool squeezing_ = false;
};

// One-shot SHAKE-256.
std::vector<uint8_t> shake256(std::span<const uint8_t> input, size_t outlen);

} // namespace bgsig
