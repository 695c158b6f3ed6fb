#include "bgsig/codec.hpp"
#include "bgsig/rounding.hpp"
#include "bgsig/scheme.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace bgsig;

Poly random_poly(std::mt19937_64& rng)
{
  std::uniform_int_distribution<uint32_t> d(0, kQ - 1);
  Poly p;
  for (auto& c : p.coeffs) c = d(rng);
  return p;
}

Seed seed_from(uint64_t v)
{
  Seed s;
  for (size_t i = 0; i < 8; ++i) s.bytes[i] = static_cast<uint8_t>(v >> (8 * i));
  return s;
}

void BM_Ntt(benchmark::State& state)
{
  std::mt19937_64 rng(1);
  const Poly a = random_poly(rng);
  for (auto _ : state) benchmark::DoNotOptimize(ntt(a));
}
BENCHMARK(BM_Ntt);

void BM_InverseNtt(benchmark::State& state)
{
  std::mt19937_64 rng(2);
  const NttPoly a = ntt(random_poly(rng));
  for (auto _ : state) benchmark::DoNotOptimize(intt(a));
}
BENCHMARK(BM_InverseNtt);

void BM_PolyMul(benchmark::State& state)
{
  std::mt19937_64 rng(3);
  const Poly a = random_poly(rng);
  const Poly b = random_poly(rng);
  for (auto _ : state) benchmark::DoNotOptimize(poly_mul(a, b));
}
BENCHMARK(BM_PolyMul);

void BM_SchoolbookMul(benchmark::State& state)
{
  std::mt19937_64 rng(4);
  const Poly a = random_poly(rng);
  const Poly b = random_poly(rng);
  for (auto _ : state) benchmark::DoNotOptimize(schoolbook_mul(a, b));
}
BENCHMARK(BM_SchoolbookMul);

void BM_Decompose(benchmark::State& state)
{
  uint32_t r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(r, default_params()));
    r = (r + 7919) % kQ;
  }
}
BENCHMARK(BM_Decompose);

void BM_Keygen(benchmark::State& state)
{
  uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(keygen(seed_from(i++)));
}
BENCHMARK(BM_Keygen);

void BM_Sign(benchmark::State& state)
{
  const Signer signer(keygen(seed_from(42)).sk);
  std::vector<uint8_t> msg(32, 0);
  uint64_t i = 0;
  for (auto _ : state) {
    msg[0] = static_cast<uint8_t>(i);
    msg[1] = static_cast<uint8_t>(i++ >> 8);
    benchmark::DoNotOptimize(signer.sign(msg));
  }
}
BENCHMARK(BM_Sign);

void BM_Verify(benchmark::State& state)
{
  const KeyPair kp = keygen(seed_from(43));
  const std::vector<uint8_t> msg(32, 0x5a);
  const Signature sig = sign(kp.sk, msg);
  for (auto _ : state) benchmark::DoNotOptimize(verify(kp.pk, msg, sig));
}
BENCHMARK(BM_Verify);

void BM_EncodeDecodeSig(benchmark::State& state)
{
  const KeyPair kp = keygen(seed_from(44));
  const std::vector<uint8_t> msg(32, 0x11);
  const Signature sig = sign(kp.sk, msg);
  for (auto _ : state) benchmark::DoNotOptimize(decode_sig(encode_sig(sig, default_params()), default_params()));
}
BENCHMARK(BM_EncodeDecodeSig);

} // namespace

BENCHMARK_MAIN();
