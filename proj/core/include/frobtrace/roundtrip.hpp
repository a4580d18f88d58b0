#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobtrace/reconstruct.hpp"

namespace frobtrace {

struct RoundTripOptions {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint32_t dim_bound = 12;
  Mode mode = Mode::exact;
  std::uint32_t conductor = 24;  // must contain every field sampled from
  double tol = 1e-6;
  // Traces are generated for r = d m_i with d <= max_d (0: all d <= N_i).
  std::uint32_t max_d = 0;
  unsigned jobs = 1;
  SampleOptions sample{};
};

struct RoundTripFailure {
  std::uint64_t trial;
  std::uint64_t trial_seed;
  WeilRep input;
  CanonicalRep expected;
  std::optional<CanonicalRep> got;
  std::string error;  // "E_CODE: detail" when reconstruct threw
};

struct RoundTripReport {
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::vector<RoundTripFailure> failures;  // in trial order
};

// Seed of trial k; trial k draws from mt19937_64(trial_seed(seed, k)).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// Residue degrees whose cosets a dataset needs for the given bound.
std::vector<std::uint32_t> required_degrees(const CharTable& table, const std::vector<TwistOrbit>& orbits,
                                            std::uint32_t dim_bound, std::uint32_t max_d = 0);

// Sample, evaluate traces, reconstruct, compare canonical forms. Results do not
// depend on `jobs`. A ConfigError in any trial (e.g. missing data) is rethrown.
RoundTripReport run_roundtrip(const LocalShape& shape, const CharTable& table, const std::vector<TwistOrbit>& orbits,
                              const RoundTripOptions& options);

}  // namespace frobtrace
