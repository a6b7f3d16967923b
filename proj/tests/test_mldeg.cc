#include <doctest.h>

#include "fermat/errors.hh"
#include "fermat/mldeg.hh"

using namespace fermat;

namespace {

EngineConfig two_prime_config() {
  EngineConfig cfg;
  cfg.primes = {32003, 65537};
  cfg.threads = 2;
  return cfg;
}

}  // namespace

TEST_CASE("closed_form_quadric") {
  CHECK(closed_form_quadric(1) == 2);
  CHECK(closed_form_quadric(2) == 6);
  CHECK(closed_form_quadric(9) == 1022);
  CHECK(closed_form_quadric(10) == 2046);
  CHECK(closed_form_quadric(15) == 65534);
  CHECK_THROWS_AS(closed_form_quadric(0), StructuralError);
  CHECK_THROWS_AS(closed_form_quadric(63), OverflowError);
}

TEST_CASE("closed_form_plane_curve across the residues") {
  CHECK(closed_form_plane_curve(7) == 51);
  CHECK(closed_form_plane_curve(13) == 177);
  CHECK(closed_form_plane_curve(6) == 42);
  CHECK(closed_form_plane_curve(2) == 6);
  CHECK(closed_form_plane_curve(3) == 9);
  CHECK(closed_form_plane_curve(4) == 18);
  CHECK(closed_form_plane_curve(5) == 27);
}

TEST_CASE("length2_degree branches") {
  CHECK(length2_degree(1, 1, 3) == 2);
  CHECK(length2_degree(2, 1, 3) == 3);
  CHECK(length2_degree(1, 1, 2) == 2);
  CHECK_THROWS_AS(length2_degree(1, 2, 3), StructuralError);
}

TEST_CASE("length2_total: formula instances and quadric tie-in") {
  CHECK(length2_total(3, 3) == 18);
  CHECK(length2_total(2, 5) == 15);
  CHECK(length2_total(4, 2) == 30);
  CHECK(length2_total(4, 2) == closed_form_quadric(4));
}

TEST_CASE("length2_total agrees with the stratum-by-stratum sum") {
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned d = 2; d <= 6; ++d) {
      unsigned __int128 total = 0;
      for (unsigned a1 = (n + 2) / 2; a1 <= n; ++a1) {
        unsigned a2 = n + 1 - a1;
        if (a2 < 1 || a2 > a1) continue;
        Partition a({a1, a2});
        total += static_cast<unsigned __int128>(coefficient_c(a)) *
                 length2_degree(a1, a2, d) / symmetry_order_o(a);
      }
      CHECK(static_cast<std::uint64_t>(total) == length2_total(n, d));
    }
  }
}

TEST_CASE("boundary_count_plane and the curve formula composition") {
  CHECK(boundary_count_plane(4) == 14);
  CHECK(boundary_count_plane(3) == 9);
  for (unsigned d = 2; d <= 13; ++d)
    CHECK(std::uint64_t{d} * d - 3 * d + boundary_count_plane(d) ==
          closed_form_plane_curve(d));
}

TEST_CASE("prime admissibility screening") {
  CHECK(prime_admissible(32003, 3, 3));
  CHECK(prime_admissible(65537, 3, 3));
  CHECK_FALSE(prime_admissible(97, 3, 3));     // below the floor
  CHECK_FALSE(prime_admissible(32004, 3, 3));  // composite
  CHECK_FALSE(prime_admissible(101, 3, 101));  // divides d
  CHECK_FALSE(prime_admissible(101, 100, 3));  // divides n+1
  CHECK_FALSE(prime_admissible(103, 150, 3));  // too small for the parts
  CHECK(next_admissible_prime(32003, 3, 3) == 32009);
  CHECK_THROWS_AS(require_admissible_prime(97, 3, 3), BadPrimeError);
}

TEST_CASE("partitioning reproduces small table cells with breakdown") {
  EngineConfig cfg = two_prime_config();
  MLDegreeResult r = mldeg_partitioning(3, 3, cfg, false);
  CHECK(r.value == 30);
  REQUIRE(r.breakdown.has_value());
  REQUIRE(r.breakdown->size() == 3);
  // (3,1): 4*3/1, (2,2): 6*2/2, (2,1,1): 12*2/2.
  CHECK((*r.breakdown)[0].a.parts() == std::vector<unsigned>{3, 1});
  CHECK((*r.breakdown)[0].contribution == 12);
  CHECK((*r.breakdown)[1].a.parts() == std::vector<unsigned>{2, 2});
  CHECK((*r.breakdown)[1].ideal_degree == 2);
  CHECK((*r.breakdown)[1].contribution == 6);
  CHECK((*r.breakdown)[2].a.parts() == std::vector<unsigned>{2, 1, 1});
  CHECK((*r.breakdown)[2].contribution == 12);
  CHECK(r.primes == std::vector<std::uint32_t>{32003, 65537});

  std::uint64_t total = 0;
  for (const auto& line : *r.breakdown) total += line.contribution;
  CHECK(total == r.value);
}

TEST_CASE("quadric column via partitioning") {
  EngineConfig cfg;
  cfg.primes = {32003};
  for (unsigned n = 2; n <= 6; ++n) {
    CHECK(mldeg_partitioning(n, 2, cfg, false).value == closed_form_quadric(n));
    CHECK(mldeg_partitioning(n, 2, cfg, true).value == closed_form_quadric(n));
  }
}

TEST_CASE("partitioning by difference matches the direct route") {
  EngineConfig cfg = two_prime_config();
  for (auto [n, d] : {std::pair{2u, 3u}, std::pair{3u, 3u}, std::pair{2u, 4u},
                      std::pair{3u, 4u}}) {
    MLDegreeResult direct = mldeg_partitioning(n, d, cfg, false);
    MLDegreeResult diff = mldeg_partitioning(n, d, cfg, true);
    CHECK(direct.value == diff.value);
    REQUIRE(diff.breakdown.has_value());
    for (std::size_t i = 0; i < diff.breakdown->size(); ++i)
      CHECK((*diff.breakdown)[i].ideal_degree == (*direct.breakdown)[i].ideal_degree);
  }
}

TEST_CASE("random-data strategies agree with partitioning") {
  EngineConfig cfg = two_prime_config();
  for (auto [n, d] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 4u}}) {
    std::uint64_t expect = mldeg_partitioning(n, d, cfg, false).value;
    CHECK(mldeg_random_data(n, d, cfg, false).value == expect);
    CHECK(mldeg_random_data(n, d, cfg, true).value == expect);
  }
  CHECK(mldeg_random_data(2, 4, cfg, false).value == 18);
  CHECK(mldeg_random_data(3, 2, cfg, true).value == 14);
}

TEST_CASE("determinism: identical config gives identical results") {
  EngineConfig cfg = two_prime_config();
  cfg.seed = 1234;
  clear_stratum_degree_cache();
  MLDegreeResult a = mldeg_partitioning(3, 3, cfg, true);
  MLDegreeResult b = mldeg_partitioning(3, 3, cfg, true);
  CHECK(a.value == b.value);
  CHECK(a.primes == b.primes);
  REQUIRE(a.breakdown.has_value());
  REQUIRE(b.breakdown.has_value());
  REQUIRE(a.breakdown->size() == b.breakdown->size());
  for (std::size_t i = 0; i < a.breakdown->size(); ++i) {
    CHECK((*a.breakdown)[i].a == (*b.breakdown)[i].a);
    CHECK((*a.breakdown)[i].c == (*b.breakdown)[i].c);
    CHECK((*a.breakdown)[i].o == (*b.breakdown)[i].o);
    CHECK((*a.breakdown)[i].ideal_degree == (*b.breakdown)[i].ideal_degree);
    CHECK((*a.breakdown)[i].contribution == (*b.breakdown)[i].contribution);
  }
  MLDegreeResult c1 = mldeg_random_data(2, 3, cfg, false);
  MLDegreeResult c2 = mldeg_random_data(2, 3, cfg, false);
  CHECK(c1.value == c2.value);
  CHECK(c1.primes == c2.primes);
}

TEST_CASE("compute_mldeg dispatch") {
  EngineConfig cfg;
  cfg.primes = {32003};
  cfg.strategy = Strategy::automatic;
  CHECK(compute_mldeg(5, 2, cfg).value == 62);    // closed, d = 2
  CHECK(compute_mldeg(2, 5, cfg).value == 27);    // closed, n = 2
  CHECK(compute_mldeg(3, 3, cfg).value == 30);    // partitioning-diff
  cfg.strategy = Strategy::closed;
  CHECK_THROWS_AS(compute_mldeg(3, 3, cfg), StructuralError);
}

TEST_CASE("cross_check pads primes and agrees on a plane curve") {
  EngineConfig cfg;
  cfg.primes = {32003};
  cfg.threads = 2;
  ConsistencyReport rep = cross_check(2, 5, cfg);
  CHECK(rep.consistent);
  CHECK(rep.consensus_value() == 27);
  // closed + two partitioning + two random-data strategies
  CHECK(rep.results.size() == 5);
  for (const MLDegreeResult& r : rep.results)
    if (r.strategy != Strategy::closed) CHECK(r.primes.size() >= 2);
}

TEST_CASE("cross_check honors a strategy filter") {
  EngineConfig cfg;
  cfg.primes = {32003, 65537};
  Strategy only[] = {Strategy::partitioning, Strategy::partitioning_diff};
  ConsistencyReport rep = cross_check(3, 3, cfg, only);
  CHECK(rep.consistent);
  CHECK(rep.results.size() == 2);
  CHECK(rep.consensus_value() == 30);
}

TEST_CASE("timeouts surface as TimeoutError") {
  EngineConfig cfg;
  cfg.primes = {32003};
  cfg.timeout_seconds = 1e-9;
  CHECK_THROWS_AS(mldeg_partitioning(4, 4, cfg, false), TimeoutError);
}

TEST_CASE("strategy names round-trip") {
  for (Strategy s : {Strategy::closed, Strategy::partitioning, Strategy::partitioning_diff,
                     Strategy::random_data, Strategy::random_diff, Strategy::automatic})
    CHECK(strategy_from_name(strategy_name(s)) == s);
  CHECK_FALSE(strategy_from_name("bogus").has_value());
}
