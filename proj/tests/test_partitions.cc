#include <doctest.h>

#include <map>

#include "fermat/errors.hh"
#include "fermat/partitions.hh"

using namespace fermat;

namespace {

// Independent oracle: partition count p(m) by the classic recursion over
// largest parts.
std::uint64_t partition_count(unsigned m, unsigned cap) {
  if (m == 0) return 1;
  std::uint64_t total = 0;
  for (unsigned first = std::min(m, cap); first >= 1; --first)
    total += partition_count(m - first, first);
  return total;
}

// Independent oracle: Bell numbers from the Bell triangle.
std::vector<std::uint64_t> bell_numbers(unsigned up_to) {
  std::vector<std::uint64_t> bell{1};  // B_0
  std::vector<std::uint64_t> row{1};
  for (unsigned nrow = 1; nrow <= up_to; ++nrow) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
    bell.push_back(row.front());
  }
  return bell;
}

// All partitions, lengths 1..m, for the Bell identity (the engine's
// enumeration intentionally drops length 1).
void all_partitions(unsigned m, unsigned cap, std::vector<unsigned>& cur,
                    std::vector<Partition>& out) {
  if (m == 0) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned first = std::min(m, cap); first >= 1; --first) {
    cur.push_back(first);
    all_partitions(m - first, first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("partition structure and validation") {
  Partition a({4, 3, 3, 3, 2, 1, 1});
  CHECK(a.n_plus_1() == 17);
  CHECK(a.length() == 7);
  CHECK(a.multiplicities() == std::vector<unsigned>{1, 3, 1, 2});
  CHECK(a.str() == "(4,3,3,3,2,1,1)");
  CHECK_THROWS_AS(Partition({1, 2}), StructuralError);
  CHECK_THROWS_AS(Partition({2, 0}), StructuralError);
  CHECK_THROWS_AS(Partition({}), StructuralError);
}

TEST_CASE("enumerate_partitions: spec instances") {
  {
    auto ps = enumerate_partitions(3, 2);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].parts() == std::vector<unsigned>{2, 1});
  }
  {
    auto ps = enumerate_partitions(3, 3);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0].parts() == std::vector<unsigned>{2, 1});
    CHECK(ps[1].parts() == std::vector<unsigned>{1, 1, 1});
  }
  {
    auto ps = enumerate_partitions(4, 3);
    REQUIRE(ps.size() == 3);
    CHECK(ps[0].parts() == std::vector<unsigned>{3, 1});
    CHECK(ps[1].parts() == std::vector<unsigned>{2, 2});
    CHECK(ps[2].parts() == std::vector<unsigned>{2, 1, 1});
  }
  CHECK_THROWS_AS(enumerate_partitions(1, 3), StructuralError);
  CHECK_THROWS_AS(enumerate_partitions(3, 1), StructuralError);
}

TEST_CASE("enumeration is decreasing-lex ordered and length-capped") {
  for (unsigned m = 2; m <= 9; ++m) {
    for (unsigned d = 2; d <= 9; ++d) {
      auto ps = enumerate_partitions(m, d);
      for (const Partition& a : ps) {
        CHECK(a.n_plus_1() == m);
        CHECK(a.length() >= 2);
        CHECK(a.length() <= std::min(d, m));
      }
      for (std::size_t i = 0; i + 1 < ps.size(); ++i)
        CHECK(ps[i + 1].parts() < ps[i].parts());
    }
  }
}

TEST_CASE("full-length enumeration counts p(m) - 1") {
  for (unsigned m = 2; m <= 10; ++m)
    CHECK(enumerate_partitions(m, m).size() == partition_count(m, m) - 1);
}

TEST_CASE("coefficient_c: spec instances") {
  CHECK(coefficient_c(Partition({2, 1})) == 3);
  CHECK(coefficient_c(Partition({1, 1, 1})) == 6);
  // One-factor product for a two-block split.
  CHECK(coefficient_c(Partition({5, 3})) == binomial_checked(8, 5));
  CHECK(coefficient_c(Partition({4, 2})) == binomial_checked(6, 4));
}

TEST_CASE("symmetry_order_o: spec instances") {
  CHECK(symmetry_order_o(Partition({2, 1})) == 1);
  CHECK(symmetry_order_o(Partition({1, 1, 1})) == 6);
  CHECK(symmetry_order_o(Partition({4, 3, 3, 3, 2, 1, 1})) == 12);
}

TEST_CASE("bell identity: sum of c_a/o_a over all partitions") {
  auto bell = bell_numbers(8);
  for (unsigned m = 2; m <= 8; ++m) {
    std::vector<Partition> ps;
    std::vector<unsigned> cur;
    all_partitions(m, m, cur, ps);
    std::uint64_t total = 0;
    for (const Partition& a : ps) {
      std::uint64_t c = coefficient_c(a);
      std::uint64_t o = symmetry_order_o(a);
      REQUIRE(c % o == 0);  // c_a/o_a counts set partitions with block sizes a
      total += c / o;
    }
    CHECK(total == bell[m]);
  }
}

TEST_CASE("binomial_checked: exactness and overflow") {
  CHECK(binomial_checked(4, 2) == 6);
  CHECK(binomial_checked(10, 0) == 1);
  CHECK(binomial_checked(3, 5) == 0);
  CHECK(binomial_checked(62, 31) == 465428353255261088ULL);
  CHECK_THROWS_AS(binomial_checked(300, 150), OverflowError);
}
