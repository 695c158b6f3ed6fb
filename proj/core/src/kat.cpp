#include "bgsig/kat.hpp"

#include "bgsig/codec.hpp"
#include "bgsig/hex.hpp"
#include "bgsig/keccak.hpp"
#include "bgsig/scheme.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace bgsig {

std::string to_hex(std::span<const uint8_t> bytes)
{
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (const uint8_t b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xF]);
  }
  return s;
}

std::optional<std::vector<uint8_t>> from_hex(std::string_view text)
{
  if (text.size() % 2 != 0) {
    return std::nullopt;
  }
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::vector<uint8_t> out(text.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    const int hi = nibble(text[2 * i]);
    const int lo = nibble(text[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      return std::nullopt;
    }
    out[i] = static_cast<uint8_t>(hi << 4 | lo);
  }
  return out;
}

namespace {

std::array<uint8_t, 32> digest32(std::span<const uint8_t> bytes)
{
  std::array<uint8_t, 32> d{};
  Shake256 h;
  h.absorb(bytes);
  h.squeeze(d);
  return d;
}

// Derivation for record seeds and messages. Uses plain SHAKE-256 with a
// trailing label byte, outside the scheme's tagged domains.
std::vector<uint8_t> kat_expand(const Seed& master, uint32_t index, uint8_t label, size_t len)
{
  Shake256 h;
  h.absorb(master.span());
  const std::array<uint8_t, 2> le = { static_cast<uint8_t>(index), static_cast<uint8_t>(index >> 8) };
  h.absorb(le);
  h.absorb_byte(label);
  return h.squeeze(len);
}

} // namespace

Seed kat_record_seed(const Seed& master, uint32_t index)
{
  Seed seed;
  const auto s = kat_expand(master, index, 'S', Seed::kSize);
  std::copy(s.begin(), s.end(), seed.bytes.begin());
  return seed;
}

std::vector<uint8_t> kat_record_message(const Seed& master, uint32_t index)
{
  return kat_expand(master, index, 'M', (37 * index) % 129);
}

KatRecord kat_make_record(uint32_t index, const Seed& seed, std::vector<uint8_t> message,
                          const ValidatedParamSet& p)
{
  const KeyPair kp = keygen(seed, p);
  SignTranscript transcript;
  const Signature sig = sign(kp.sk, message, p, {}, &transcript);

  KatRecord r;
  r.index = index;
  r.seed = seed;
  r.message = std::move(message);
  r.pk_hash = digest32(encode_pk(kp.pk, p));
  r.sk_hash = digest32(encode_sk(kp.sk, p));
  r.signature = encode_sig(sig, p);
  r.attempts = static_cast<uint32_t>(transcript.attempts.size());
  return r;
}

std::vector<KatRecord> kat_generate(const Seed& master, uint32_t count, const ValidatedParamSet& p)
{
  if (count > 0x10000) {
    throw std::invalid_argument("at most 65536 KAT records");
  }
  std::vector<KatRecord> out;
  out.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    out.push_back(kat_make_record(i, kat_record_seed(master, i), kat_record_message(master, i), p));
  }
  return out;
}

std::string kat_write(const KatFile& file)
{
  std::ostringstream os;
  os << "# bgsig known-answer tests\n";
  if (file.master) {
    os << "\n";
    os << "master=" << to_hex(file.master->bytes) << "\n";
    os << "count=" << file.records.size() << "\n";
  }
  for (const auto& r : file.records) {
    os << "\n";
    os << "index=" << r.index << "\n";
    os << "seed=" << to_hex(r.seed.bytes) << "\n";
    os << "message=" << to_hex(r.message) << "\n";
    os << "pk_hash=" << to_hex(r.pk_hash) << "\n";
    os << "sk_hash=" << to_hex(r.sk_hash) << "\n";
    os << "signature=" << to_hex(r.signature) << "\n";
    os << "attempts=" << r.attempts << "\n";
  }
  return os.str();
}

namespace {

constexpr std::array<std::string_view, 7> kFields = { "index",   "seed",      "message", "pk_hash",
                                                      "sk_hash", "signature", "attempts" };

std::vector<uint8_t> parse_hex_field(std::string_view name, std::string_view value, size_t record)
{
  auto bytes = from_hex(value);
  if (!bytes) {
    throw KatFormatError("record " + std::to_string(record) + ": field '" + std::string(name) +
                         "' is not valid hex");
  }
  return std::move(*bytes);
}

template<size_t N>
void parse_fixed(std::array<uint8_t, N>& out, std::string_view name, std::string_view value,
                 size_t record)
{
  const auto bytes = parse_hex_field(name, value, record);
  if (bytes.size() != N) {
    throw KatFormatError("record " + std::to_string(record) + ": field '" + std::string(name) +
                         "' must be " + std::to_string(N) + " bytes");
  }
  std::copy(bytes.begin(), bytes.end(), out.begin());
}

uint32_t parse_uint(std::string_view name, std::string_view value, size_t record)
{
  uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
    throw KatFormatError("record " + std::to_string(record) + ": field '" + std::string(name) +
                         "' is not a decimal integer");
  }
  return v;
}

} // namespace

KatFile kat_parse(std::string_view text)
{
  KatFile file;
  std::optional<uint32_t> declared_count;

  KatRecord cur;
  std::vector<bool> seen(kFields.size(), false);
  bool in_block = false;
  bool in_preamble = false;
  bool any_block = false;

  auto flush = [&]() {
    if (in_preamble) {
      if (!file.master || !declared_count) {
        throw KatFormatError("preamble needs both 'master' and 'count'");
      }
      in_preamble = false;
      return;
    }
    if (!in_block) {
      return;
    }
    for (size_t f = 0; f < kFields.size(); ++f) {
      if (!seen[f]) {
        throw KatFormatError("record " + std::to_string(file.records.size()) +
                             ": missing field '" + std::string(kFields[f]) + "'");
      }
    }
    file.records.push_back(std::move(cur));
    cur = KatRecord{};
    std::fill(seen.begin(), seen.end(), false);
    in_block = false;
  };

  while (true) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }

    if (line.empty()) {
      flush();
    } else if (line.front() != '#') {
      const size_t record = file.records.size();
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw KatFormatError("record " + std::to_string(record) + ": expected name=value");
      }
      const auto name = line.substr(0, eq);
      const auto value = line.substr(eq + 1);

      if ((name == "master" || name == "count") && !any_block && !in_block) {
        in_preamble = true;
        if (name == "master") {
          Seed m;
          parse_fixed(m.bytes, name, value, record);
          file.master = m;
        } else {
          declared_count = parse_uint(name, value, record);
        }
      } else {
        if (in_preamble) {
          throw KatFormatError("preamble must be followed by a blank line");
        }
        const auto it = std::find(kFields.begin(), kFields.end(), name);
        if (it == kFields.end()) {
          throw KatFormatError("record " + std::to_string(record) + ": unknown field '" +
                               std::string(name) + "'");
        }
        const auto idx = static_cast<size_t>(it - kFields.begin());
        if (seen[idx]) {
          throw KatFormatError("record " + std::to_string(record) + ": duplicate field '" +
                               std::string(name) + "'");
        }
        seen[idx] = true;
        in_block = true;
        any_block = true;

        if (name == "index") cur.index = parse_uint(name, value, record);
        else if (name == "seed") parse_fixed(cur.seed.bytes, name, value, record);
        else if (name == "message") cur.message = parse_hex_field(name, value, record);
        else if (name == "pk_hash") parse_fixed(cur.pk_hash, name, value, record);
        else if (name == "sk_hash") parse_fixed(cur.sk_hash, name, value, record);
        else if (name == "signature") cur.signature = parse_hex_field(name, value, record);
        else cur.attempts = parse_uint(name, value, record);
      }
    }

    if (eol == std::string_view::npos) {
      break;
    }
    text.remove_prefix(eol + 1);
  }
  flush();

  if (declared_count && *declared_count != file.records.size()) {
    throw KatFormatError("count=" + std::to_string(*declared_count) + " but file has " +
                         std::to_string(file.records.size()) + " records");
  }
  return file;
}

std::string KatCheckResult::report() const
{
  if (ok) {
    return "ok";
  }
  std::string s;
  if (record) {
    s += "record " + std::to_string(*record) + ": ";
  }
  if (!field.empty()) {
    s += "field '" + field + "' ";
  }
  return s + detail;
}

KatCheckResult kat_check(std::string_view text, const ValidatedParamSet& p)
{
  KatCheckResult res;
  KatFile file;
  try {
    file = kat_parse(text);
  } catch (const KatFormatError& e) {
    res.detail = e.what();
    return res;
  }
  const auto& records = file.records;
  if (records.empty()) {
    res.detail = "no records";
    return res;
  }

  for (size_t i = 0; i < records.size(); ++i) {
    const KatRecord& want = records[i];
    auto fail = [&](const char* field) {
      res.record = i;
      res.field = field;
      res.detail = "mismatch";
      return res;
    };

    if (file.master) {
      if (want.index != i) return fail("index");
      if (want.seed != kat_record_seed(*file.master, want.index)) return fail("seed");
      if (want.message != kat_record_message(*file.master, want.index)) return fail("message");
    }

    const KatRecord got = kat_make_record(want.index, want.seed, want.message, p);
    if (got.pk_hash != want.pk_hash) return fail("pk_hash");
    if (got.sk_hash != want.sk_hash) return fail("sk_hash");
    if (got.signature != want.signature) return fail("signature");
    if (got.attempts != want.attempts) return fail("attempts");
  }
  res.ok = true;
  return res;
}

} // namespace bgsig
