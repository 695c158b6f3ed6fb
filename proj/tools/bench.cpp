#include "bench.hpp"

#include "bgsig/keccak.hpp"
#include "bgsig/scheme.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace bgsig::tool {

double BenchResult::z_acceptance() const noexcept
{
  return total_attempts ? double(z_pass) / double(total_attempts) : 0.0;
}

double BenchResult::low_acceptance() const noexcept
{
  return total_attempts ? double(low_pass) / double(total_attempts) : 0.0;
}

double BenchResult::combined_acceptance() const noexcept
{
  return total_attempts ? double(trials) / double(total_attempts) : 0.0;
}

double BenchResult::mean_attempts() const noexcept
{
  return trials ? double(total_attempts) / double(trials) : 0.0;
}

uint32_t BenchResult::attempts_percentile(double pct) const
{
  if (attempts.empty()) {
    return 0;
  }
  std::vector<uint32_t> sorted = attempts;
  std::sort(sorted.begin(), sorted.end());
  // nearest-rank
  const auto rank = static_cast<size_t>(std::ceil(pct / 100.0 * double(sorted.size())));
  return sorted[std::clamp<size_t>(rank, 1, sorted.size()) - 1];
}

double BenchResult::signatures_per_second() const noexcept
{
  return seconds > 0 ? double(trials) / seconds : 0.0;
}

namespace {

struct TrialStats {
  uint32_t attempts = 0;
  uint32_t z_pass = 0;
  uint32_t low_pass = 0;
};

TrialStats run_trial(const Seed& master, uint32_t index, const ValidatedParamSet& p)
{
  Shake256 h;
  h.absorb(master.span());
  const std::array<uint8_t, 4> le = { static_cast<uint8_t>(index), static_cast<uint8_t>(index >> 8),
                                      static_cast<uint8_t>(index >> 16),
                                      static_cast<uint8_t>(index >> 24) };
  h.absorb(le);
  Seed key_seed;
  h.squeeze(key_seed.bytes);
  std::array<uint8_t, 32> message{};
  h.squeeze(message);

  const KeyPair kp = keygen(key_seed, p);
  SignTranscript transcript;
  Signer(kp.sk, p).sign(message, {}, &transcript);

  TrialStats s;
  s.attempts = static_cast<uint32_t>(transcript.attempts.size());
  for (const auto& a : transcript.attempts) {
    s.z_pass += a.z_ok ? 1 : 0;
    s.low_pass += a.low_ok ? 1 : 0;
  }
  return s;
}

} // namespace

BenchResult run_bench(uint32_t trials, const Seed& master, unsigned threads,
                      const ValidatedParamSet& p)
{
  if (trials == 0) {
    throw std::invalid_argument("trials must be >= 1");
  }
  threads = std::clamp(threads, 1u, trials);

  std::vector<TrialStats> stats(trials);
  const auto start = std::chrono::steady_clock::now();
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (uint32_t i = t; i < trials; i += threads) {
          stats[i] = run_trial(master, i, p);
        }
      });
    }
  }
  const auto stop = std::chrono::steady_clock::now();

  BenchResult r;
  r.trials = trials;
  r.seconds = std::chrono::duration<double>(stop - start).count();
  r.attempts.reserve(trials);
  for (const auto& s : stats) {
    r.total_attempts += s.attempts;
    r.z_pass += s.z_pass;
    r.low_pass += s.low_pass;
    r.attempts.push_back(s.attempts);
  }
  return r;
}

double expected_z_acceptance(const ValidatedParamSet& p)
{
  const double ratio = double(2 * p.z_bound() + 1) / double(2 * p->gamma + 1);
  return std::pow(ratio, double(p->n) * p->l);
}

void write_bench_report(std::ostream& os, const BenchResult& r, const ValidatedParamSet& p)
{
  os << std::fixed << std::setprecision(4);
  os << "trials:                 " << r.trials << "\n";
  os << "total attempts:         " << r.total_attempts << "\n";
  os << "z-bound acceptance:     " << r.z_acceptance() << "  (closed form "
     << expected_z_acceptance(p) << ")\n";
  os << "low-bound acceptance:   " << r.low_acceptance() << "\n";
  os << "combined acceptance:    " << r.combined_acceptance() << "  (product of conditions "
     << r.z_acceptance() * r.low_acceptance() << ")\n";
  os << "mean attempts:          " << r.mean_attempts() << "\n";
  os << "attempts p50/p90/p99/max: " << r.attempts_percentile(50) << "/"
     << r.attempts_percentile(90) << "/" << r.attempts_percentile(99) << "/"
     << r.attempts_percentile(100) << "\n";
  os << std::setprecision(1);
  os << "signatures/second:      " << r.signatures_per_second() << "\n";
}

void write_bench_csv(std::ostream& os, const BenchResult& r)
{
  os << "trials,total_attempts,z_acceptance,low_acceptance,combined_acceptance,mean_attempts,"
        "p50_attempts,p90_attempts,p99_attempts,max_attempts,signatures_per_second\n";
  os << std::setprecision(6) << r.trials << "," << r.total_attempts << "," << r.z_acceptance()
     << "," << r.low_acceptance() << "," << r.combined_acceptance() << "," << r.mean_attempts()
     << "," << r.attempts_percentile(50) << "," << r.attempts_percentile(90) << ","
     << r.attempts_percentile(99) << "," << r.attempts_percentile(100) << ","
     << r.signatures_per_second() << "\n";
}

} // namespace bgsig::tool
