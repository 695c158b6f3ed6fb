#pragma once

#include "bgsig/keys.hpp"
#include "bgsig/params.hpp"
#include "bgsig/rounding.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

// Byte formats. Every object starts with a two-byte header:
//
//   byte 0: 0xB0 | kind   (kind 1 = public key, 2 = secret key, 3 = signature)
//   byte 1: parameter set id
//
// followed by fixed-width little-endian bit-packed fields:
//
//   pk  = header || rho || t (bits_t, offset 0)
//   sk  = header || rho || key || t (bits_t) || s1 (bits_s, offset -eta) || s2 (same)
//   sig = header || c_hash || z (bits_z, offset -(gamma-beta))
namespace bgsig {

class DecodeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class ObjectKind : uint8_t {
  public_key = 1,
  secret_key = 2,
  signature = 3,
};

inline constexpr uint8_t kHeaderMagic = 0xB0;
inline constexpr size_t kHeaderSize = 2;

// Packs (v - offset) for each v into `width` bits, LSB first. Trailing pad
// bits are zero. Throws std::invalid_argument if any v - offset falls outside
// [0, 2^width).
std::vector<uint8_t> pack_bits(std::span<const int64_t> values, uint32_t width, int64_t offset);

// Inverse of pack_bits. Throws DecodeError on a length mismatch, nonzero pad
// bits, or a raw value >= raw_limit (when given).
std::vector<int64_t> unpack_bits(std::span<const uint8_t> bytes, uint32_t width, int64_t offset,
                                 size_t count, std::optional<uint64_t> raw_limit = std::nullopt);

constexpr size_t packed_size(size_t count, uint32_t width) noexcept
{
  return (count * width + 7) / 8;
}

size_t public_key_size(const ValidatedParamSet& p) noexcept;
size_t secret_key_size(const ValidatedParamSet& p) noexcept;
size_t signature_size(const ValidatedParamSet& p) noexcept;
size_t w1_size(const ValidatedParamSet& p) noexcept;

std::vector<uint8_t> encode_pk(const PublicKey& pk, const ValidatedParamSet& p);
PublicKey decode_pk(std::span<const uint8_t> bytes, const ValidatedParamSet& p);

std::vector<uint8_t> encode_sk(const SecretKey& sk, const ValidatedParamSet& p);
// Also rejects a key whose t differs from A*s1 + s2.
SecretKey decode_sk(std::span<const uint8_t> bytes, const ValidatedParamSet& p);

std::vector<uint8_t> encode_sig(const Signature& sig, const ValidatedParamSet& p);
Signature decode_sig(std::span<const uint8_t> bytes, const ValidatedParamSet& p);

// bits_w1-bit packing of every high value; the first input to H.
std::vector<uint8_t> encode_w1(const HighVec& h, const ValidatedParamSet& p);
HighVec decode_w1(std::span<const uint8_t> bytes, const ValidatedParamSet& p);

} // namespace bgsig
