#pragma once

#include "bgsig/params.hpp"
#include "bgsig/sampling.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Known-answer records. The text format is a sequence of `name=value` blocks
// separated by blank lines; lines starting with '#' are comments. An optional
// leading block `master=<64 hex>` / `count=<decimal>` records how the file was
// generated, which lets kat_check also verify each seed and message. Every
// other block is one record:
//
//   index=0
//   seed=<64 hex>
//   message=<hex, possibly empty>
//   pk_hash=<64 hex>      SHAKE-256(encoded pk), 32 bytes
//   sk_hash=<64 hex>      SHAKE-256(encoded sk), 32 bytes
//   signature=<hex>       encoded signature
//   attempts=<decimal>    signing attempts used
namespace bgsig {

class KatFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct KatRecord {
  uint32_t index = 0;
  Seed seed;
  std::vector<uint8_t> message;
  std::array<uint8_t, 32> pk_hash{};
  std::array<uint8_t, 32> sk_hash{};
  std::vector<uint8_t> signature;
  uint32_t attempts = 0;

  bool operator==(const KatRecord&) const = default;
};

// keygen(seed), sign(message) and record the outputs.
KatRecord kat_make_record(uint32_t index, const Seed& seed, std::vector<uint8_t> message,
                          const ValidatedParamSet& p = default_params());

// Seed and message (length 37*i mod 129) of record i, expanded from `master`.
Seed kat_record_seed(const Seed& master, uint32_t index);
std::vector<uint8_t> kat_record_message(const Seed& master, uint32_t index);

std::vector<KatRecord> kat_generate(const Seed& master, uint32_t count,
                                    const ValidatedParamSet& p = default_params());

struct KatFile {
  std::optional<Seed> master;
  std::vector<KatRecord> records;
};

std::string kat_write(const KatFile& file);

// Throws KatFormatError on structural problems (unknown or missing fields,
// bad hex, count mismatch).
KatFile kat_parse(std::string_view text);

struct KatCheckResult {
  bool ok = false;
  std::optional<size_t> record; // position in the file of the first failure
  std::string field;
  std::string detail;

  // "record 3: field 'signature' mismatch" style summary
  std::string report() const;
};

// Regenerates every record from its seed and message and compares each field
// byte for byte. With a master seed present, seeds and messages are checked
// against their derivation as well.
KatCheckResult kat_check(std::string_view text, const ValidatedParamSet& p = default_params());

} // namespace bgsig
