#include "fermat/mldeg.hh"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "fermat/deadline.hh"
#include "fermat/errors.hh"
#include "fermat/fermat_ideals.hh"
#include "fermat/groebner.hh"

namespace fermat {

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::closed: return "closed";
    case Strategy::partitioning: return "partitioning";
    case Strategy::partitioning_diff: return "partitioning-diff";
    case Strategy::random_data: return "random";
    case Strategy::random_diff: return "random-diff";
    case Strategy::automatic: return "auto";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
  for (Strategy s : {Strategy::closed, Strategy::partitioning, Strategy::partitioning_diff,
                     Strategy::random_data, Strategy::random_diff, Strategy::automatic})
    if (strategy_name(s) == name) return s;
  return std::nullopt;
}

double MLDegreeResult::total_seconds() const {
  double t = 0;
  for (const PhaseTiming& p : elapsed) t += p.seconds;
  return t;
}

bool prime_admissible(std::uint32_t p, unsigned n, unsigned d) {
  if (p < PrimeField::kMinModulus || !is_prime(p)) return false;
  if (d % p == 0 || (n + 1) % p == 0) return false;
  // Partition parts range over 1..n; the weighted forms need them all
  // invertible mod p.
  if (p <= n) return false;
  return true;
}

void require_admissible_prime(std::uint32_t p, unsigned n, unsigned d) {
  if (!prime_admissible(p, n, d))
    throw BadPrimeError("prime " + std::to_string(p) + " is not admissible for n=" +
                        std::to_string(n) + ", d=" + std::to_string(d));
}

std::uint32_t next_admissible_prime(std::uint32_t above, unsigned n, unsigned d) {
  for (std::uint32_t q = above + 1;; ++q) {
    if (prime_admissible(q, n, d)) return q;
    if (q == 0xffffffffu) throw BadPrimeError("ran out of 32-bit primes");
  }
}

std::uint64_t closed_form_quadric(unsigned n) {
  if (n < 1) throw StructuralError("closed_form_quadric needs n >= 1");
  if (n >= 63) throw OverflowError("2^{n+1} - 2 exceeds 64 bits");
  return (std::uint64_t{1} << (n + 1)) - 2;
}

std::uint64_t closed_form_plane_curve(unsigned d) {
  if (d < 2) throw StructuralError("closed_form_plane_curve needs d >= 2");
  std::uint64_t base = std::uint64_t{d} * d + d;
  switch (d % 6) {
    case 0:
    case 2: return base;
    case 3:
    case 5: return base - 3;
    case 4: return base - 2;
    default: return base - 5;  // d = 1 mod 6
  }
}

std::uint64_t length2_degree(unsigned a1, unsigned a2, unsigned d) {
  if (a1 < a2 || a2 < 1) throw StructuralError("length2_degree needs a1 >= a2 >= 1");
  if (a1 == a2 && d % 2 == 1) return d - 1;
  return d;
}

std::uint64_t length2_total(unsigned n, unsigned d) {
  if (n < 1 || d < 2) throw StructuralError("length2_total needs n >= 1, d >= 2");
  if (n >= 63) throw OverflowError("2^n overflows");
  std::uint64_t total = std::uint64_t{d} * ((std::uint64_t{1} << n) - 1);
  if (d % 2 == 1 && n % 2 == 1) total -= binomial_checked(n + 1, (n + 1) / 2) / 2;
  return total;
}

std::uint64_t boundary_count_plane(unsigned d) {
  if (d < 2) throw StructuralError("boundary_count_plane needs d >= 2");
  std::uint64_t base = 4ULL * d;
  switch (d % 6) {
    case 0:
    case 2: return base;
    case 3:
    case 5: return base - 3;
    case 4: return base - 2;
    default: return base - 5;
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs tasks 0..count-1 on `width` workers with a shared deadline; the first
// failure (in task order) is rethrown after all workers drain.
void run_parallel(std::size_t count, unsigned width, const Deadline* deadline,
                  const std::function<void(std::size_t)>& task) {
  width = std::max(1u, std::min<unsigned>(width, static_cast<unsigned>(count)));
  if (width <= 1) {
    DeadlineScope scope(deadline);
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::vector<std::exception_ptr> failures(count);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(width);
  for (unsigned w = 0; w < width; ++w) {
    workers.emplace_back([&] {
      DeadlineScope scope(deadline);
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          task(i);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : workers) t.join();
  for (const std::exception_ptr& e : failures)
    if (e) std::rethrow_exception(e);
}

std::uint64_t contribution_or_throw(const Partition& a, std::uint64_t c, std::uint64_t o,
                                    std::uint64_t deg) {
  unsigned __int128 num = static_cast<unsigned __int128>(c) * deg;
  if (num % o != 0)
    throw BadPrimeError("o_a does not divide c_a * deg for partition " + a.str() +
                        " (deg=" + std::to_string(deg) + ")");
  unsigned __int128 q = num / o;
  if (q > static_cast<unsigned __int128>(~std::uint64_t{0}))
    throw OverflowError("partition contribution exceeds 64 bits");
  return static_cast<std::uint64_t>(q);
}

// Process-wide memo of stratum degrees. Direct and by-difference routes are
// kept apart so cross-mode agreement stays a real check.
struct StratumKey {
  std::vector<unsigned> parts;
  unsigned d;
  std::uint32_t p;
  bool by_difference;
  auto operator<=>(const StratumKey&) const = default;
};
std::mutex stratum_cache_mutex;
std::map<StratumKey, std::uint64_t> stratum_cache;

std::uint64_t stratum_degree(const Partition& a, unsigned d, std::uint32_t p,
                             bool by_difference) {
  StratumKey key{a.parts(), d, p, by_difference};
  {
    std::lock_guard<std::mutex> lock(stratum_cache_mutex);
    auto it = stratum_cache.find(key);
    if (it != stratum_cache.end()) return it->second;
  }
  std::uint64_t deg;
  if (by_difference) {
    Ideal tilde = partition_ideal_vandermonde_only(a, d, p);
    std::uint64_t whole = degree_projective(tilde);
    Ideal on_line = tilde.plus({weighted_linear_form(tilde.ring(), a)});
    std::uint64_t boundary = degree_projective(on_line);
    if (boundary > whole)
      throw BadPrimeError("difference strategy went negative for partition " + a.str());
    deg = whole - boundary;
  } else {
    deg = degree_projective(partition_ideal(a, d, p));
  }
  std::lock_guard<std::mutex> lock(stratum_cache_mutex);
  stratum_cache.emplace(std::move(key), deg);
  return deg;
}

std::vector<std::uint32_t> fresh_primes(const std::vector<std::uint32_t>& used, unsigned n,
                                        unsigned d) {
  std::uint32_t top = 0;
  for (std::uint32_t p : used) top = std::max(top, p);
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < used.size(); ++i) {
    top = next_admissible_prime(top, n, d);
    out.push_back(top);
  }
  return out;
}

std::uint64_t stream_tag(unsigned n, unsigned d, std::uint32_t p, unsigned attempt) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint64_t v : {std::uint64_t{n}, std::uint64_t{d}, std::uint64_t{p},
                          std::uint64_t{attempt}}) {
    h ^= v + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

constexpr unsigned kPrimeRetries = 3;

}  // namespace

void clear_stratum_degree_cache() {
  std::lock_guard<std::mutex> lock(stratum_cache_mutex);
  stratum_cache.clear();
}

MLDegreeResult mldeg_partitioning(unsigned n, unsigned d, const EngineConfig& cfg,
                                  bool by_difference) {
  if (n < 1 || d < 2) throw StructuralError("mldeg needs n >= 1 and d >= 2");
  if (cfg.primes.empty()) throw StructuralError("config needs at least one prime");
  for (std::uint32_t p : cfg.primes) require_admissible_prime(p, n, d);

  MLDegreeResult result;
  result.n = n;
  result.d = d;
  result.strategy = by_difference ? Strategy::partitioning_diff : Strategy::partitioning;

  const std::vector<Partition> partitions = enumerate_partitions(n + 1, d);
  Deadline deadline = Deadline::after_seconds(cfg.timeout_seconds);

  std::vector<std::uint32_t> primes = cfg.primes;
  std::string last_error;
  for (unsigned attempt = 0; attempt < kPrimeRetries; ++attempt) {
    try {
      std::optional<std::vector<PartitionContribution>> agreed;
      std::optional<std::uint64_t> agreed_value;
      result.elapsed.clear();
      for (std::uint32_t p : primes) {
        auto start = Clock::now();
        std::vector<std::uint64_t> degrees(partitions.size());
        run_parallel(partitions.size(), cfg.threads, &deadline, [&](std::size_t i) {
          degrees[i] = stratum_degree(partitions[i], d, p, by_difference);
        });
        std::vector<PartitionContribution> lines;
        lines.reserve(partitions.size());
        unsigned __int128 total = 0;
        for (std::size_t i = 0; i < partitions.size(); ++i) {
          std::uint64_t c = coefficient_c(partitions[i]);
          std::uint64_t o = symmetry_order_o(partitions[i]);
          std::uint64_t contribution =
              contribution_or_throw(partitions[i], c, o, degrees[i]);
          total += contribution;
          lines.push_back({partitions[i], c, o, degrees[i], contribution});
        }
        if (total > static_cast<unsigned __int128>(~std::uint64_t{0}))
          throw OverflowError("ML degree exceeds 64 bits");
        std::uint64_t value = static_cast<std::uint64_t>(total);
        result.elapsed.push_back({"p=" + std::to_string(p), seconds_since(start)});
        if (!agreed_value) {
          agreed_value = value;
          agreed = std::move(lines);
        } else if (*agreed_value != value) {
          throw BadPrimeError("partitioning disagrees across primes: " +
                              std::to_string(*agreed_value) + " vs " + std::to_string(value) +
                              " (p=" + std::to_string(p) + ")");
        } else {
          for (std::size_t i = 0; i < lines.size(); ++i)
            if (lines[i].ideal_degree != (*agreed)[i].ideal_degree)
              throw BadPrimeError("stratum degree for " + partitions[i].str() +
                                  " disagrees across primes");
        }
      }
      result.value = *agreed_value;
      result.breakdown = std::move(agreed);
      result.primes = primes;
      return result;
    } catch (const BadPrimeError& e) {
      last_error = e.what();
      primes = fresh_primes(primes, n, d);
    }
  }
  throw BadPrimeError("partitioning failed after " + std::to_string(kPrimeRetries) +
                      " prime sets; last error: " + last_error);
}

MLDegreeResult mldeg_random_data(unsigned n, unsigned d, const EngineConfig& cfg,
                                 bool by_difference) {
  if (n < 2 || d < 2) throw StructuralError("random-data strategy needs n >= 2 and d >= 2");
  if (cfg.primes.empty()) throw StructuralError("config needs at least one prime");
  for (std::uint32_t p : cfg.primes) require_admissible_prime(p, n, d);

  MLDegreeResult result;
  result.n = n;
  result.d = d;
  result.strategy = by_difference ? Strategy::random_diff : Strategy::random_data;

  Deadline deadline = Deadline::after_seconds(cfg.timeout_seconds);
  DeadlineScope scope(&deadline);

  std::vector<std::uint32_t> primes = cfg.primes;
  std::string last_error;
  for (unsigned attempt = 0; attempt < kPrimeRetries; ++attempt) {
    try {
      std::optional<std::uint64_t> agreed;
      result.elapsed.clear();
      for (std::uint32_t p : primes) {
        auto start = Clock::now();
        PrimeField field(p);
        SplitMix64 rng = SplitMix64::stream(cfg.seed, stream_tag(n, d, p, attempt));
        DataVector u = DataVector::sample(field, n + 1, rng);
        Ideal critical = critical_ideal(n, d, u, p);
        std::uint64_t value;
        if (by_difference) {
          std::uint64_t whole = degree_projective(critical);
          std::uint64_t on_slice = degree_projective(arrangement_slice_ideal(n, d, p));
          if (on_slice > whole)
            throw BadPrimeError("random-data difference went negative");
          value = whole - on_slice;
        } else {
          value = degree_projective(remove_arrangement(critical));
        }
        result.elapsed.push_back({"p=" + std::to_string(p), seconds_since(start)});
        if (!agreed) {
          agreed = value;
        } else if (*agreed != value) {
          throw BadPrimeError("random-data disagrees across primes: " + std::to_string(*agreed) +
                              " vs " + std::to_string(value) + " (p=" + std::to_string(p) + ")");
        }
      }
      result.value = *agreed;
      result.primes = primes;
      return result;
    } catch (const BadPrimeError& e) {
      last_error = e.what();
      primes = fresh_primes(primes, n, d);
    }
  }
  throw BadPrimeError("random-data failed after " + std::to_string(kPrimeRetries) +
                      " prime sets; last error: " + last_error);
}

namespace {

MLDegreeResult closed_form_result(unsigned n, unsigned d) {
  MLDegreeResult r;
  r.n = n;
  r.d = d;
  r.strategy = Strategy::closed;
  auto start = Clock::now();
  if (d == 2) {
    r.value = closed_form_quadric(n);
  } else if (n == 2) {
    r.value = closed_form_plane_curve(d);
  } else {
    throw StructuralError("no closed formula for n=" + std::to_string(n) +
                          ", d=" + std::to_string(d));
  }
  r.elapsed.push_back({"formula", seconds_since(start)});
  return r;
}

}  // namespace

MLDegreeResult compute_mldeg(unsigned n, unsigned d, const EngineConfig& cfg) {
  switch (cfg.strategy) {
    case Strategy::closed: return closed_form_result(n, d);
    case Strategy::partitioning: return mldeg_partitioning(n, d, cfg, false);
    case Strategy::partitioning_diff: return mldeg_partitioning(n, d, cfg, true);
    case Strategy::random_data: return mldeg_random_data(n, d, cfg, false);
    case Strategy::random_diff: return mldeg_random_data(n, d, cfg, true);
    case Strategy::automatic: {
      if (d == 2 || n == 2) {
        MLDegreeResult r = closed_form_result(n, d);
        r.strategy = Strategy::automatic;
        return r;
      }
      MLDegreeResult r = mldeg_partitioning(n, d, cfg, true);
      r.strategy = Strategy::automatic;
      return r;
    }
  }
  throw StructuralError("unknown strategy");
}

std::uint64_t ConsistencyReport::consensus_value() const {
  if (results.empty()) throw StructuralError("no results to take a consensus from");
  return results.front().value;
}

ConsistencyReport cross_check(unsigned n, unsigned d, EngineConfig cfg,
                              std::span<const Strategy> only) {
  ConsistencyReport report;
  report.n = n;
  report.d = d;
  for (std::uint32_t p : cfg.primes) require_admissible_prime(p, n, d);
  for (std::uint32_t candidate : {kDefaultPrime, kVerificationPrime}) {
    if (cfg.primes.size() >= 2) break;
    if (prime_admissible(candidate, n, d) &&
        std::find(cfg.primes.begin(), cfg.primes.end(), candidate) == cfg.primes.end())
      cfg.primes.push_back(candidate);
  }
  while (cfg.primes.size() < 2) {
    std::uint32_t top = cfg.primes.empty() ? 0 : *std::max_element(cfg.primes.begin(),
                                                                   cfg.primes.end());
    cfg.primes.push_back(next_admissible_prime(top, n, d));
  }

  std::vector<Strategy> plan;
  if (d == 2 || n == 2) plan.push_back(Strategy::closed);
  plan.push_back(Strategy::partitioning);
  plan.push_back(Strategy::partitioning_diff);
  if (n >= 2 && n <= cfg.random_data_max_n) {
    plan.push_back(Strategy::random_data);
    plan.push_back(Strategy::random_diff);
  }
  if (!only.empty()) {
    std::erase_if(plan, [&](Strategy s) {
      return std::find(only.begin(), only.end(), s) == only.end();
    });
  }

  for (Strategy s : plan) {
    EngineConfig sub = cfg;
    sub.strategy = s;
    report.results.push_back(compute_mldeg(n, d, sub));
  }

  report.consistent = !report.results.empty();
  for (const MLDegreeResult& r : report.results) {
    if (r.value != report.results.front().value) {
      report.consistent = false;
      std::ostringstream out;
      out << "strategy " << strategy_name(report.results.front().strategy) << " gives "
          << report.results.front().value << " but " << strategy_name(r.strategy) << " gives "
          << r.value << " for n=" << n << ", d=" << d << " (primes";
      for (std::uint32_t p : r.primes.empty() ? cfg.primes : r.primes) out << " " << p;
      out << ", seed " << cfg.seed << ")";
      report.detail = out.str();
      break;
    }
  }
  return report;
}

}  // namespace fermat
