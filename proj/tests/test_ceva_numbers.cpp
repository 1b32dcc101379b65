#include <doctest.h>

#include <omp.h>

#include <algorithm>
#include <set>

#include "cevian/ceva_numbers.hpp"
#include "cevian/errors.hpp"
#include "cevian/primes.hpp"
#include "support/oracles.hpp"

using namespace cevian;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("count_concurrencies examples") {
  CHECK(count_concurrencies(2) == 1);
  CHECK(count_concurrencies(3) == 0);
  CHECK(count_concurrencies(4) == 7);
  CHECK(testing::brute_force_d(6) == 13);
  CHECK(count_concurrencies(6) == 13);
  CHECK_THROWS_AS(count_concurrencies(1), ValidationError);
  CHECK_THROWS_AS(count_concurrencies(kMaxDivisions + 1), ValidationError);

  std::vector<CevaSolution> sols;
  count_concurrencies(6, &sols);
  std::set<std::array<std::int64_t, 3>> found;
  for (const auto& s : sols) found.insert({s.i, s.j, s.k});
  for (std::array<std::int64_t, 3> t : {std::array<std::int64_t, 3>{3, 3, 3}, {2, 3, 4}, {1, 3, 5}}) {
    std::sort(t.begin(), t.end());
    do {
      CHECK(found.count(t) == 1);
    } while (std::next_permutation(t.begin(), t.end()));
  }
}

TEST_CASE("d(n) prefix matches exhaustive enumeration") {
  // frozen from brute_force_d: 2..12
  const std::vector<std::uint64_t> golden{1, 0, 7, 0, 13, 0, 19, 0, 25, 0, 31};
  for (std::int64_t n = 2; n <= 12; ++n) {
    CHECK(testing::brute_force_d(n) == golden[static_cast<std::size_t>(n - 2)]);
  }
  CHECK(d_sequence(2, 12) == golden);
  for (std::int64_t n = 13; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(count_concurrencies(n) == testing::brute_force_d(n));
  }
}

TEST_CASE("solution sets are closed under permutation and complement") {
  for (std::int64_t n = 2; n <= 80; ++n) {
    std::vector<CevaSolution> sols;
    const auto count = count_concurrencies(n, &sols);
    REQUIRE(sols.size() == count);
    std::set<std::array<std::int64_t, 3>> set;
    for (const auto& s : sols) {
      REQUIRE(s.satisfies());
      set.insert({s.i, s.j, s.k});
    }
    CHECK(set.size() == sols.size());
    for (const auto& s : sols) {
      std::array<std::int64_t, 3> t{s.i, s.j, s.k};
      std::sort(t.begin(), t.end());
      do {
        CHECK(set.count(t) == 1);
      } while (std::next_permutation(t.begin(), t.end()));
      CHECK(set.count({n - s.i, n - s.j, n - s.k}) == 1);
    }
  }
}

TEST_CASE("odd prime powers have no triple points") {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13, 25, 27, 49}) {
    CAPTURE(q);
    CHECK(count_concurrencies(q) == 0);
    CHECK_FALSE(has_concurrency(q));
  }
}

TEST_CASE("powers of two have 3q-5 triple points, each through a median") {
  for (unsigned m = 1; m <= 4; ++m) {
    const std::int64_t q = std::int64_t{1} << m;
    std::vector<CevaSolution> sols;
    CHECK(count_concurrencies(q, &sols) == static_cast<std::uint64_t>(3 * q - 5));
    CHECK(theorem2_d(2, m) == 3 * q - 5);
    for (const auto& s : sols) CHECK((s.i == q / 2 || s.j == q / 2 || s.k == q / 2));
  }
}

TEST_CASE("theorem2_d") {
  CHECK(theorem2_d(3, 2) == 0);
  CHECK(theorem2_d(2, 3) == 19);
  CHECK(theorem2_d(2, 1) == 1);
  CHECK_THROWS_AS(theorem2_d(9, 1), ValidationError);
  CHECK_THROWS_AS(theorem2_d(2, 0), ValidationError);
}

TEST_CASE("has_concurrency") {
  CHECK_FALSE(has_concurrency(5));
  const auto w6 = find_concurrency(6);
  REQUIRE(w6);
  CHECK(*w6 == CevaSolution{6, 2, 3, 4});
  CHECK(has_concurrency(15));
  for (std::int64_t n = 2; n <= 500; ++n) {
    const auto w = find_concurrency(n);
    REQUIRE(w.has_value() == (count_concurrencies(n) > 0));
    if (w) CHECK(w->satisfies());
  }
}

TEST_CASE("odd_positive_list") {
  const auto upto14 = odd_positive_list(14);
  CHECK(upto14.empty());
  const auto upto15 = odd_positive_list(15);
  CHECK(upto15 == std::vector<std::int64_t>{15});
  // frozen from exhaustive enumeration over odd n <= 100
  const std::vector<std::int64_t> golden{15, 35, 45, 55, 63, 65, 75, 77, 85, 91, 99};
  std::vector<std::int64_t> brute;
  for (std::int64_t n = 3; n <= 100; n += 2)
    if (testing::brute_force_d(n) > 0) brute.push_back(n);
  CHECK(brute == golden);
  CHECK(odd_positive_list(100) == golden);
  CHECK(odd_positive_list_serial(100) == golden);
  CHECK(odd_positive_list(2).empty());
  CHECK_THROWS_AS(odd_positive_list(1), ValidationError);
}

TEST_CASE("scan_family") {
  const auto f1 = scan_family(Family::PTimes2PMinus1, 3);
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].p == 2);
  CHECK(f1[0].n == 6);
  CHECK(f1[0].companion_prime == 3);
  CHECK(f1[0].has_solution);
  CHECK(*f1[0].witness == CevaSolution{6, 2, 3, 4});
  CHECK(f1[1].n == 15);
  CHECK(f1[1].has_solution);

  const auto f2 = scan_family(Family::PSquaredTimes2PPlus1, 3);
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].n == 20);
  CHECK(f2[1].n == 63);
  CHECK((f2[0].has_solution && f2[1].has_solution));

  CHECK(scan_family(Family::PTimes2PMinus1, 1).empty());

  for (const auto& r : scan_family(Family::PTimes2PMinus1, 13, true)) {
    CHECK(r.has_solution);
    CHECK(r.witness.has_value());
    CHECK(r.witness->satisfies());
    CHECK(*r.solution_count == count_concurrencies_serial(r.n));
  }
  for (const auto& r : scan_family(Family::PSquaredTimes2PPlus1, 5)) {
    CHECK(r.has_solution);
    CHECK_FALSE(r.solution_count.has_value());
  }
}

TEST_CASE("parallel kernels match serial references") {
  const int saved = omp_get_max_threads();
  for (int threads : {1, 4, 7}) {
    omp_set_num_threads(threads);
    CHECK(d_sequence(2, 150) == d_sequence_serial(2, 150));
    CHECK(odd_positive_list(301) == odd_positive_list_serial(301));
    CHECK(scan_family(Family::PTimes2PMinus1, 31, true) ==
          scan_family_serial(Family::PTimes2PMinus1, 31, true));
    CHECK(scan_family(Family::PSquaredTimes2PPlus1, 11) ==
          scan_family_serial(Family::PSquaredTimes2PPlus1, 11));
    for (std::int64_t n : {2, 12, 60, 97, 210}) {
      std::vector<CevaSolution> par;
      std::vector<CevaSolution> ser;
      CHECK(count_concurrencies(n, &par) == count_concurrencies_serial(n, &ser));
      CHECK(par == ser);
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("is_prime") {
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(is_prime(193));
  CHECK_FALSE(is_prime(18721));
  CHECK(is_prime(29));
  CHECK(is_prime(59));
  CHECK_FALSE(is_prime(49619));
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == trial_division_prime(n));
  // strong pseudoprimes to several small bases
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551615ULL));
}
