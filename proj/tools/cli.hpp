#pragma once

#include "bgsig/params.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

// Command implementations behind the `bgsig` executable. Each returns the
// process exit code; nothing here writes secret key material to `out`.
namespace bgsig::tool {

enum ExitCode : int {
  kExitOk = 0,        // success / ACCEPT / KAT match
  kExitReject = 1,    // REJECT / KAT mismatch
  kExitIo = 2,        // unreadable or unwritable file
  kExitMalformed = 3, // malformed seed, key, signature or KAT file
};

struct Streams {
  std::istream& in;  // message source for the "-" path
  std::ostream& out;
  std::ostream& err;
};

using Path = std::filesystem::path;

// A missing seed draws 32 bytes from std::random_device.
int cmd_keygen(const std::optional<std::string>& seed_hex, const Path& pk_path,
               const Path& sk_path, const ValidatedParamSet& p, Streams io);

int cmd_sign(const Path& sk_path, const Path& msg_path, const Path& sig_path, bool randomized,
             const ValidatedParamSet& p, Streams io);

int cmd_verify(const Path& pk_path, const Path& msg_path, const Path& sig_path,
               const ValidatedParamSet& p, Streams io);

int cmd_kat_gen(const std::string& seed_hex, uint32_t count, const Path& out_path,
                const ValidatedParamSet& p, Streams io);

int cmd_kat_check(const Path& kat_path, const ValidatedParamSet& p, Streams io);

int cmd_bench(uint32_t trials, const std::optional<std::string>& seed_hex,
              const std::optional<Path>& csv_path, unsigned threads, const ValidatedParamSet& p,
              Streams io);

// First 8 hex digits of SHAKE-256(encoded pk).
std::string fingerprint(const std::vector<uint8_t>& pk_bytes);

} // namespace bgsig::tool
