#pragma once

#include "bgsig/params.hpp"
#include "bgsig/sampling.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace bgsig::tool {

// Rejection-loop measurements over `trials` independent (key, message)
// signings. Rates are per attempt.
struct BenchResult {
  uint32_t trials = 0;
  uint64_t total_attempts = 0;
  uint64_t z_pass = 0;   // attempts with |z| <= gamma - beta
  uint64_t low_pass = 0; // attempts with |Low(w - c*s2)| <= gamma - beta
  std::vector<uint32_t> attempts; // per trial, in trial order
  double seconds = 0.0;

  double z_acceptance() const noexcept;
  double low_acceptance() const noexcept;
  double combined_acceptance() const noexcept; // accepted / total attempts
  double mean_attempts() const noexcept;
  uint32_t attempts_percentile(double pct) const;
  double signatures_per_second() const noexcept;
};

// Trial i signs a message derived from (master, i) under a key derived from
// (master, i); results do not depend on the thread count.
BenchResult run_bench(uint32_t trials, const Seed& master, unsigned threads = 1,
                      const ValidatedParamSet& p = default_params());

// Closed-form z-bound acceptance ((2(gamma-beta)+1)/(2*gamma+1))^(n*l).
double expected_z_acceptance(const ValidatedParamSet& p = default_params());

void write_bench_report(std::ostream& os, const BenchResult& r, const ValidatedParamSet& p);
void write_bench_csv(std::ostream& os, const BenchResult& r);

} // namespace bgsig::tool
