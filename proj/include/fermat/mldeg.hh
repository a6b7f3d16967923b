#ifndef FERMAT_MLDEG_HH
#define FERMAT_MLDEG_HH

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/partitions.hh"

namespace fermat {

enum class Strategy {
  closed,
  partitioning,
  partitioning_diff,
  random_data,
  random_diff,
  automatic,
};

std::string_view strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);

// Default modulus for single runs; verification adds the second one.
inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint32_t kVerificationPrime = 65537;

struct EngineConfig {
  std::vector<std::uint32_t> primes{kDefaultPrime};
  std::uint64_t seed = 0;
  unsigned threads = 1;
  double timeout_seconds = 0;  // 0 = unlimited
  Strategy strategy = Strategy::automatic;
  // cross_check runs the random-data strategies only up to this n.
  unsigned random_data_max_n = 4;
};

struct PartitionContribution {
  Partition a;
  std::uint64_t c;
  std::uint64_t o;
  std::uint64_t ideal_degree;
  std::uint64_t contribution;  // c * ideal_degree / o, exact
};

struct PhaseTiming {
  std::string label;
  double seconds = 0;
};

struct MLDegreeResult {
  unsigned n = 0;
  unsigned d = 0;
  Strategy strategy = Strategy::automatic;
  std::uint64_t value = 0;
  std::optional<std::vector<PartitionContribution>> breakdown;
  std::vector<std::uint32_t> primes;
  std::vector<PhaseTiming> elapsed;

  double total_seconds() const;
};

// Prime admissibility for a problem instance: prime, >= 101, coprime to d
// and n+1, and larger than every possible partition part.
bool prime_admissible(std::uint32_t p, unsigned n, unsigned d);
void require_admissible_prime(std::uint32_t p, unsigned n, unsigned d);
std::uint32_t next_admissible_prime(std::uint32_t above, unsigned n, unsigned d);

// 2^{n+1} - 2, the ML degree of the degree-2 Fermat hypersurface.
std::uint64_t closed_form_quadric(unsigned n);
// ML degree of the plane Fermat curve, split on d mod 6:
// d^2+d, d^2+d-3, d^2+d-2, d^2+d-5 for residues {0,2}, {3,5}, {4}, {1}.
std::uint64_t closed_form_plane_curve(unsigned d);
// Stratum degree for a length-2 partition: d-1 when a1 = a2 with d odd,
// d otherwise.
std::uint64_t length2_degree(unsigned a1, unsigned a2, unsigned d);
// Total count of critical points with exactly two distinct coordinate
// values: d(2^n - 1), lowered by binom(n+1, (n+1)/2)/2 when d and n are odd.
std::uint64_t length2_total(unsigned n, unsigned d);
// Number of points of the plane curve on the distinguished arrangement:
// 4d, 4d-3, 4d-2, 4d-5 for d mod 6 in {0,2}, {3,5}, {4}, {1}.
std::uint64_t boundary_count_plane(unsigned d);

// Partition-sum strategy: enumerate the strata, compute each stratum degree
// (directly, or by the difference of the Vandermonde-only ideal and its sum
// with the weighted form), and total c_a * deg / o_a. Every prime in the
// config must agree, including per-stratum degrees; disagreement triggers up
// to two retries on fresh primes before a BadPrimeError.
MLDegreeResult mldeg_partitioning(unsigned n, unsigned d, const EngineConfig& cfg,
                                  bool by_difference);

// Random-data strategy: sample a data vector from the seed and compute the
// fiber degree, either of the saturated critical ideal or as the difference
// deg I^u - deg(I^u + (sum x_i)) with the u-independent slice ideal.
MLDegreeResult mldeg_random_data(unsigned n, unsigned d, const EngineConfig& cfg,
                                 bool by_difference);

// Dispatch on cfg.strategy; `automatic` takes the closed form when d = 2 or
// n = 2 and partitioning-by-difference otherwise.
MLDegreeResult compute_mldeg(unsigned n, unsigned d, const EngineConfig& cfg);

struct ConsistencyReport {
  unsigned n = 0;
  unsigned d = 0;
  std::vector<MLDegreeResult> results;
  bool consistent = false;
  std::string detail;  // first discrepancy, with context

  std::uint64_t consensus_value() const;
};

// Runs every applicable strategy (partitioning variants always, random-data
// up to cfg.random_data_max_n, closed forms when they exist) over at least
// two admissible primes and compares the answers. A nonempty `only` list
// restricts the plan to those strategies (still subject to applicability).
ConsistencyReport cross_check(unsigned n, unsigned d, EngineConfig cfg,
                              std::span<const Strategy> only = {});

// Drops the process-wide stratum-degree memo (used by determinism tests).
void clear_stratum_degree_cache();

}  // namespace fermat

#endif  // FERMAT_MLDEG_HH
