#include "frobtrace/roundtrip.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "frobtrace/error.hpp"

namespace frobtrace {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<std::uint32_t> required_degrees(const CharTable& table, const std::vector<TwistOrbit>& orbits,
                                            std::uint32_t dim_bound, std::uint32_t max_d) {
  std::set<std::uint32_t> rs;
  for (const auto& o : orbits) {
    std::uint32_t n = dim_bound / table.degree(o.rep);
    if (max_d) n = std::min(n, max_d);
    for (std::uint32_t d = 1; d <= n; ++d) rs.insert(d * o.m);
  }
  return {rs.begin(), rs.end()};
}

RoundTripReport run_roundtrip(const LocalShape& shape, const CharTable& table, const std::vector<TwistOrbit>& orbits,
                              const RoundTripOptions& options) {
  const auto degrees = required_degrees(table, orbits, options.dim_bound, options.max_d);
  ReconstructOptions ropts;
  ropts.dim_bound = options.dim_bound;
  ropts.mode = options.mode;
  ropts.conductor = options.conductor;
  ropts.cluster_tol = options.tol;
  ropts.find_mu = false;
  SampleOptions sample = options.sample;
  sample.max_dim = std::min(sample.max_dim, options.dim_bound);

  std::vector<std::optional<RoundTripFailure>> results(options.trials);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr fatal;
  std::mutex fatal_lock;

  auto work = [&] {
    for (std::uint64_t k; (k = next++) < options.trials;) {
      const std::uint64_t s = trial_seed(options.seed, k);
      std::mt19937_64 rng(s);
      const WeilRep rep = sample_weil_rep(table, rng, sample);
      const CanonicalRep expected = canonical_form(rep, table, shape.group, orbits);
      try {
        const auto data = dataset_from_rep(rep, table, shape, degrees);
        const auto rec = reconstruct(data, table, shape, orbits, ropts);
        if (!rep_equal(expected, rec.canonical, options.tol))
          results[k] = RoundTripFailure{k, s, rep, expected, rec.canonical, {}};
      } catch (const ConfigError&) {
        const std::lock_guard lock(fatal_lock);
        if (!fatal) fatal = std::current_exception();
        next = options.trials;
      } catch (const Error& e) {
        results[k] = RoundTripFailure{k, s, rep, expected, std::nullopt, e.code() + ": " + e.what()};
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(work);
  }
  if (fatal) std::rethrow_exception(fatal);

  RoundTripReport report;
  report.trials = options.trials;
  for (auto& r : results) {
    if (r)
      report.failures.push_back(std::move(*r));
    else
      ++report.passed;
  }
  return report;
}

}  // namespace frobtrace
