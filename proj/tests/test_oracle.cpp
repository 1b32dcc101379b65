#include <doctest.h>

#include <omp.h>

#include <random>

#include "cevian/counting.hpp"
#include "cevian/errors.hpp"
#include "cevian/oracle.hpp"
#include "support/oracles.hpp"

using namespace cevian;

namespace {

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

Arrangement medians() {
  return build_arrangement(CevianConfig::create({q(1, 2)}, {q(1, 2)}, {q(1, 2)}));
}

std::uint64_t formula(const Arrangement& arr) {
  const auto& cfg = arr.config();
  const auto d = concurrency_points(arr).size();
  return theorem1_count(cfg.a(), cfg.b(), cfg.c(), BigInt(static_cast<unsigned long>(d)))
      .triangle_count.get_ui();
}

void check_tally(const Arrangement& arr, const OracleResult& r) {
  const auto& cfg = arr.config();
  const long a = static_cast<long>(cfg.a());
  const long b = static_cast<long>(cfg.b());
  const long c = static_cast<long>(cfg.c());
  CHECK(BigInt(static_cast<unsigned long>(r.tally.total())) == testing::choose(a + b + c + 3, 3));
  CHECK(BigInt(static_cast<unsigned long>(r.tally.at_vertex[0])) == testing::choose(a + 2, 3));
  CHECK(BigInt(static_cast<unsigned long>(r.tally.at_vertex[1])) == testing::choose(b + 2, 3));
  CHECK(BigInt(static_cast<unsigned long>(r.tally.at_vertex[2])) == testing::choose(c + 2, 3));
  CHECK(r.tally.interior == concurrency_points(arr).size());
}

}  // namespace

TEST_CASE("classify_triple examples") {
  const auto arr = medians();
  CHECK(classify_triple(arr, {0, 1, 2}) == TripleClass::Triangle);
  CHECK(classify_triple(arr, {0, 2, arr.segment_id(Vertex::A, 0)}) == TripleClass::ConcurrentAtVertex);
  CHECK(classify_triple(arr, {3, 4, 5}) == TripleClass::ConcurrentInterior);
  CHECK_THROWS_AS(classify_triple(arr, {0, 1, 6}), std::out_of_range);
  CHECK_THROWS_AS(classify_triple(arr, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("enumerate_triangles examples") {
  CHECK(enumerate_triangles(medians()).triangle_count == 16);
  const auto generic = build_arrangement(CevianConfig::create({q(1, 2)}, {q(1, 2)}, {q(1, 3)}));
  REQUIRE(concurrency_points(generic).empty());
  CHECK(enumerate_triangles(generic).triangle_count == 17);
  CHECK(enumerate_triangles(build_arrangement(CevianConfig::equal_division(3))).triangle_count == 72);
  CHECK(enumerate_triangles(build_arrangement(CevianConfig{})).triangle_count == 1);
}

TEST_CASE("triangle list is lexicographic and excludes same-vertex triples") {
  OracleOptions opts;
  opts.collect_triples = true;
  const auto arr = build_arrangement(CevianConfig::equal_division(3));
  const auto r = enumerate_triangles(arr, opts);
  REQUIRE(r.triangles.size() == r.triangle_count);
  CHECK(std::is_sorted(r.triangles.begin(), r.triangles.end()));
  for (const auto& t : r.triangles) {
    CHECK(classify_triple(arr, t) == TripleClass::Triangle);
    // two A-cevians plus any segment through A never bound a triangle
    int through_a = 0;
    for (auto id : t) {
      const auto kind = arr.segments()[id].label().kind;
      through_a += kind == SegmentKind::CevianA || kind == SegmentKind::SideAB || kind == SegmentKind::SideCA;
    }
    CHECK(through_a < 3);
  }
}

TEST_CASE("formula equals oracle on equal-division configs") {
  for (long n = 2; n <= 4; ++n) {
    const auto arr = build_arrangement(CevianConfig::equal_division(n));
    const auto r = enumerate_triangles(arr);
    CHECK(r.triangle_count == formula(arr));
    check_tally(arr, r);
  }
}

TEST_CASE("formula equals oracle on randomized configs") {
  std::mt19937_64 rng(123456789);
  int with_d = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto arr = build_arrangement(testing::random_config(rng, 9, 12));
    const auto r = enumerate_triangles(arr);
    CHECK(r.triangle_count == formula(arr));
    check_tally(arr, r);
    with_d += r.tally.interior > 0;
  }
  CHECK(with_d > 0);
}

TEST_CASE("parallel enumeration matches the serial reference") {
  std::mt19937_64 rng(2718);
  OracleOptions opts;
  opts.collect_triples = true;
  const int saved = omp_get_max_threads();
  for (int threads : {1, 3, 8}) {
    omp_set_num_threads(threads);
    for (int trial = 0; trial < 10; ++trial) {
      const auto arr = build_arrangement(testing::random_config(rng, 9, 12));
      const auto par = enumerate_triangles(arr, opts);
      const auto ser = enumerate_triangles_serial(arr, opts);
      CHECK(par.triangle_count == ser.triangle_count);
      CHECK(par.tally == ser.tally);
      CHECK(par.triangles == ser.triangles);
      const auto again = enumerate_triangles(arr, opts);
      CHECK(again.triangles == par.triangles);
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("guard rail") {
  const auto big = build_arrangement(CevianConfig::equal_division(21));  // 63 segments
  CHECK_THROWS_AS(enumerate_triangles(big), GuardRailError);
  OracleOptions raised;
  raised.max_segments = 5;
  CHECK_THROWS_AS(enumerate_triangles(medians(), raised), GuardRailError);
  raised.force = true;
  CHECK(enumerate_triangles(medians(), raised).triangle_count == 16);
}

TEST_CASE("affine invariance on an alternate triangle") {
  std::mt19937_64 rng(1618);
  for (int trial = 0; trial < 15; ++trial) {
    const auto check = check_affine_invariance(testing::random_config(rng, 8, 12));
    CHECK(check.holds());
  }
  const auto eq = check_affine_invariance(CevianConfig::equal_division(4));
  CHECK(eq.d_alternate == 7);
  CHECK(eq.count_alternate == 183);
}

TEST_CASE("bounds_triangle") {
  const Segment ab({0, 0}, {1, 0});
  const Segment bc({1, 0}, {0, 1});
  const Segment ca({0, 1}, {0, 0});
  CHECK(bounds_triangle(ab, bc, ca));
  const Segment high({0, 2}, {1, 2});
  CHECK_FALSE(bounds_triangle(ab, high, ca));
}
