#include "cli.hpp"

#include "bench.hpp"

#include "bgsig/codec.hpp"
#include "bgsig/hex.hpp"
#include "bgsig/kat.hpp"
#include "bgsig/keccak.hpp"
#include "bgsig/scheme.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <vector>

namespace bgsig::tool {

namespace {

struct IoError {
  std::string what;
};

std::vector<uint8_t> read_file(const Path& path, std::istream& stdin_stream)
{
  if (path == "-") {
    return { std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>() };
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw IoError{ "cannot open '" + path.string() + "' for reading" };
  }
  std::vector<uint8_t> data{ std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>() };
  if (f.bad()) {
    throw IoError{ "error reading '" + path.string() + "'" };
  }
  return data;
}

void write_file(const Path& path, std::span<const uint8_t> data)
{
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw IoError{ "cannot open '" + path.string() + "' for writing" };
  }
  f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!f) {
    throw IoError{ "error writing '" + path.string() + "'" };
  }
}

void write_text(const Path& path, const std::string& text)
{
  write_file(path, { reinterpret_cast<const uint8_t*>(text.data()), text.size() });
}

std::optional<Seed> parse_seed(const std::string& hex)
{
  const auto bytes = from_hex(hex);
  if (!bytes || bytes->size() != Seed::kSize) {
    return std::nullopt;
  }
  Seed s;
  std::copy(bytes->begin(), bytes->end(), s.bytes.begin());
  return s;
}

Seed random_seed()
{
  std::random_device rd;
  Seed s;
  for (size_t i = 0; i < Seed::kSize; i += 4) {
    const uint32_t v = rd();
    for (size_t j = 0; j < 4; ++j) {
      s.bytes[i + j] = static_cast<uint8_t>(v >> (8 * j));
    }
  }
  return s;
}

} // namespace

std::string fingerprint(const std::vector<uint8_t>& pk_bytes)
{
  const auto d = shake256(pk_bytes, 4);
  return to_hex(d);
}

int cmd_keygen(const std::optional<std::string>& seed_hex, const Path& pk_path,
               const Path& sk_path, const ValidatedParamSet& p, Streams io)
{
  Seed seed;
  if (seed_hex) {
    const auto parsed = parse_seed(*seed_hex);
    if (!parsed) {
      io.err << "error: --seed must be 64 hex digits\n";
      return kExitMalformed;
    }
    seed = *parsed;
  } else {
    seed = random_seed();
  }

  const KeyPair kp = keygen(seed, p);
  const auto pk = encode_pk(kp.pk, p);
  const auto sk = encode_sk(kp.sk, p);
  try {
    write_file(pk_path, pk);
    write_file(sk_path, sk);
  } catch (const IoError& e) {
    io.err << "error: " << e.what << "\n";
    return kExitIo;
  }
  io.out << "public key:  " << pk_path.string() << " (" << pk.size() << " bytes)\n";
  io.out << "secret key:  " << sk_path.string() << " (" << sk.size() << " bytes)\n";
  io.out << "fingerprint: " << fingerprint(pk) << "\n";
  return kExitOk;
}

int cmd_sign(const Path& sk_path, const Path& msg_path, const Path& sig_path, bool randomized,
             const ValidatedParamSet& p, Streams io)
{
  std::vector<uint8_t> sk_bytes;
  std::vector<uint8_t> msg;
  try {
    sk_bytes = read_file(sk_path, io.in);
    msg = read_file(msg_path, io.in);
  } catch (const IoError& e) {
    io.err << "error: " << e.what << "\n";
    return kExitIo;
  }

  SecretKey sk;
  try {
    sk = decode_sk(sk_bytes, p);
  } catch (const DecodeError& e) {
    io.err << "error: malformed secret key: " << e.what() << "\n";
    return kExitMalformed;
  }

  SignOptions opts;
  if (randomized) {
    opts.salt = random_seed();
  }
  SignTranscript transcript;
  Signature sig;
  try {
    sig = sign(sk, msg, p, opts, &transcript);
  } catch (const AttemptsExhausted& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }

  try {
    write_file(sig_path, encode_sig(sig, p));
  } catch (const IoError& e) {
    io.err << "error: " << e.what << "\n";
    return kExitIo;
  }
  io.out << "signature: " << sig_path.string() << " (" << signature_size(p) << " bytes)\n";
  io.out << "attempts:  " << transcript.attempts.size() << "\n";
  return kExitOk;
}

int cmd_verify(const Path& pk_path, const Path& msg_path, const Path& sig_path,
               const ValidatedParamSet& p, Streams io)
{
  std::vector<uint8_t> pk_bytes;
  std::vector<uint8_t> msg;
  std::vector<uint8_t> sig_bytes;
  try {
    pk_bytes = read_file(pk_path, io.in);
    msg = read_file(msg_path, io.in);
    sig_bytes = read_file(sig_path, io.in);
  } catch (const IoError& e) {
    io.err << "error: " << e.what << "\n";
    return kExitIo;
  }

  PublicKey pk;
  Signature sig;
  try {
    pk = decode_pk(pk_bytes, p);
    sig = decode_sig(sig_bytes, p);
  } catch (const DecodeError& e) {
    io.out << "REJECT\n";
    io.err << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  }

  if (verify(pk, msg, sig, p)) {
    io.out << "ACCEPT\n";
    return kExitOk;
  }
  io.out << "REJECT\n";
  return kExitReject;
}

int cmd_kat_gen(const std::string& seed_hex, uint32_t count, const Path& out_path,
                const ValidatedParamSet& p, Streams io)
{
  const auto master = parse_seed(seed_hex);
  if (!master) {
    io.err << "error: --seed must be 64 hex digits\n";
    return kExitMalformed;
  }
  if (count == 0 || count > 0x10000) {
    io.err << "error: --count must be in [1, 65536]\n";
    return kExitMalformed;
  }

  KatFile file;
  file.master = *master;
  file.records = kat_generate(*master, count, p);
  try {
    write_text(out_path, kat_write(file));
  } catch (const IoError& e) {
    io.err << "error: " << e.what << "\n";
    return kExitIo;
  }
  io.out << "wrote " << count << " records to " << out_path.string() << "\n";
  return kExitOk;
}

int cmd_kat_check(const Path& kat_path, const ValidatedParamSet& p, Streams io)
{
  std::vector<uint8_t> raw;
  try {
    raw = read_file(kat_path, io.in);
  } catch (const IoError& e) {
    io.err << "error: " << e.what << "\n";
    return kExitIo;
  }
  const std::string_view text(reinterpret_cast<const char*>(raw.data()), raw.size());

  try {
    (void)kat_parse(text);
  } catch (const KatFormatError& e) {
    io.err << "malformed KAT file: " << e.what() << "\n";
    return kExitMalformed;
  }

  const KatCheckResult res = kat_check(text, p);
  if (!res.ok) {
    io.out << "FAIL " << res.report() << "\n";
    return kExitReject;
  }
  io.out << "PASS\n";
  return kExitOk;
}

int cmd_bench(uint32_t trials, const std::optional<std::string>& seed_hex,
              const std::optional<Path>& csv_path, unsigned threads, const ValidatedParamSet& p,
              Streams io)
{
  if (trials == 0) {
    io.err << "error: --trials must be >= 1\n";
    return kExitMalformed;
  }
  Seed master;
  if (seed_hex) {
    const auto parsed = parse_seed(*seed_hex);
    if (!parsed) {
      io.err << "error: --seed must be 64 hex digits\n";
      return kExitMalformed;
    }
    master = *parsed;
  }

  const BenchResult r = run_bench(trials, master, threads, p);
  if (trials == 1) {
    io.out << "attempts: " << r.attempts.front() << "\n";
  }
  write_bench_report(io.out, r, p);

  if (csv_path) {
    std::ostringstream csv;
    write_bench_csv(csv, r);
    try {
      write_text(*csv_path, csv.str());
    } catch (const IoError& e) {
      io.err << "error: " << e.what << "\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

} // namespace bgsig::tool
