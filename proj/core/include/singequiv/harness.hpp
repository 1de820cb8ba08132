#pragma once

#include "singequiv/extension.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace singequiv {

// Small portable RNG helpers: draws depend only on the mt19937_64 stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(gen_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 gen_;
};

std::uint64_t instance_seed(std::uint64_t seed, std::size_t k);

struct RandomAlgebraOptions {
  std::size_t max_vertices = 4;
  std::size_t max_arrows = 5;
  std::size_t max_dim = 12;
};

// Presentation text of a random monomial algebra; all paths of the
// truncation length are listed as relations so the nilpotency bound is
// certified by construction.
std::string random_monomial_source(Rng& rng, const RandomAlgebraOptions& opt);
// Retries until the dimension is within max_dim.
AlgebraPtr random_monomial_algebra(Rng& rng, const RandomAlgebraOptions& opt);

// M and N are 0-2 dimensional with arrows acting strictly triangularly (so
// paths of length >= 2 act by zero); phi sends each m (x) n to zero or a
// multiple of a basis path between the right vertices. Not validated.
ExtensionData random_extension_candidate(Rng& rng, const AlgebraPtr& a);
// First candidate passing validate_extension (at most `tries`).
std::optional<ExtensionData> random_extension_data(Rng& rng, const AlgebraPtr& a, std::size_t tries = 50);

struct HarnessOptions {
  std::uint64_t seed = 42;
  std::size_t count = 50;
  std::size_t bound = 8;
};

struct HarnessViolation {
  std::size_t instance = 0;
  std::uint64_t replay_seed = 0;
  std::string check;
  std::string detail;
};

struct HarnessReport {
  HarnessOptions options;
  std::size_t ideals = 0;               // vertex ideals examined
  std::size_t ideals_conclusive = 0;    // both homological verdicts conclusive
  std::size_t ideals_yes = 0;
  std::size_t resolutions = 0;          // minimal resolutions checked
  std::size_t tor_checks = 0;           // Tor balance / route comparisons
  std::size_t extensions = 0;           // valid extension data found
  std::size_t extensions_nontrivial = 0;  // with phi != 0
  std::size_t round_trips = 0;
  std::size_t certified_peels = 0;
  std::size_t non_injective = 0;        // phi = 0 controls
  std::vector<HarnessViolation> violations;
};

// Runs instance k with the RNG seeded by instance_seed(seed, k); a single
// instance can be replayed with run_harness_instance.
HarnessReport run_harness(const HarnessOptions& opt);
void run_harness_instance(std::size_t k, std::uint64_t replay_seed, std::size_t bound, HarnessReport& report);

}  // namespace singequiv
