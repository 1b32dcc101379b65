#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "cevian/arrangement.hpp"
#include "cevian/ceva_numbers.hpp"
#include "cevian/errors.hpp"
#include "support/oracles.hpp"

using namespace cevian;

namespace {

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

CevianConfig medians() { return CevianConfig::create({q(1, 2)}, {q(1, 2)}, {q(1, 2)}); }

std::string validation_message(const std::vector<Rational>& a, const std::vector<Rational>& b,
                               const std::vector<Rational>& c) {
  try {
    CevianConfig::create(a, b, c);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("equal_division_config") {
  CHECK(CevianConfig::equal_division(2).feet(Vertex::A) == std::vector<Rational>{q(1, 2)});
  CHECK(CevianConfig::equal_division(3).feet(Vertex::B) == std::vector<Rational>{q(1, 3), q(2, 3)});
  CHECK(CevianConfig::equal_division(4).feet(Vertex::C) ==
        std::vector<Rational>{q(1, 4), q(1, 2), q(3, 4)});
  CHECK_THROWS_AS(CevianConfig::equal_division(1), ValidationError);
  CHECK_THROWS_AS(CevianConfig::equal_division(-3), ValidationError);
}

TEST_CASE("config validation names the offending entry") {
  CHECK(validation_message({q(1, 2)}, {q(1, 3), Rational(1)}, {}) ==
        "feet_b[1] = 1 lies outside the open interval (0,1)");
  CHECK(validation_message({Rational(0)}, {}, {}).find("feet_a[0] = 0") != std::string::npos);
  CHECK(validation_message({}, {}, {q(-1, 2)}).find("feet_c[0] = -1/2") != std::string::npos);
  CHECK(validation_message({q(1, 3), q(1, 2), q(2, 6)}, {}, {}) ==
        "feet_a[2] = 1/3 repeats feet_a[0]");
  CHECK(validation_message({q(1, 3)}, {q(1, 3)}, {q(1, 3)}).empty());
}

TEST_CASE("config canonicalizes order") {
  const auto cfg = CevianConfig::create({q(3, 4), q(1, 4), q(1, 2)}, {}, {});
  CHECK(cfg.feet(Vertex::A) == std::vector<Rational>{q(1, 4), q(1, 2), q(3, 4)});
  CHECK(cfg.a() == 3);
  CHECK(cfg.b() == 0);
}

TEST_CASE("build_arrangement") {
  const auto arr = build_arrangement(medians());
  REQUIRE(arr.segments().size() == 6);
  const Segment& a1 = arr.segments()[arr.segment_id(Vertex::A, 0)];
  CHECK(a1.p() == Point2{0, 0});
  CHECK(a1.q() == Point2{q(1, 2), q(1, 2)});
  CHECK(to_string(a1.label()) == "A1");
  CHECK(to_string(arr.segments()[0].label()) == "AB");
  CHECK(to_string(arr.segments()[1].label()) == "BC");
  CHECK(to_string(arr.segments()[2].label()) == "CA");

  CHECK(build_arrangement(CevianConfig{}).segments().size() == 3);
  CHECK(build_arrangement(CevianConfig::equal_division(3)).segments().size() == 9);
}

TEST_CASE("foot direction conventions") {
  const Triangle t = Triangle::reference();
  // BC traversed B->C, CA traversed C->A, AB traversed A->B
  CHECK(foot_point(t, Vertex::A, q(1, 4)) == Point2{q(3, 4), q(1, 4)});
  CHECK(foot_point(t, Vertex::B, q(1, 4)) == Point2{0, q(3, 4)});
  CHECK(foot_point(t, Vertex::C, q(1, 4)) == Point2{q(1, 4), 0});
  // the Ceva product is 1 exactly for concurrent triples
  CHECK(ceva_product(q(1, 2), q(1, 2), q(1, 2)) == Rational(1));
  CHECK(ceva_product(q(1, 3), q(1, 2), q(2, 3)) == Rational(1));
  CHECK(ceva_product(q(1, 2), q(1, 2), q(1, 3)) == q(1, 2));
}

TEST_CASE("concurrency_points examples") {
  const auto centroid = concurrency_points(build_arrangement(medians()));
  REQUIRE(centroid.size() == 1);
  CHECK(centroid[0].location == Point2{q(1, 3), q(1, 3)});
  CHECK(centroid[0].cevians == std::array<std::size_t, 3>{0, 0, 0});

  CHECK(concurrency_points(build_arrangement(CevianConfig::equal_division(3))).empty());

  // feet 1/2, 1/2, 1/3: Ceva product (1)(1)(1/2) = 1/2 != 1
  const auto generic = CevianConfig::create({q(1, 2)}, {q(1, 2)}, {q(1, 3)});
  CHECK(ceva_product(q(1, 2), q(1, 2), q(1, 3)) != Rational(1));
  CHECK(concurrency_points(build_arrangement(generic)).empty());
}

TEST_CASE("structural zero when a vertex has no cevians") {
  const auto cfg = CevianConfig::create({q(1, 2), q(1, 3)}, {q(1, 2)}, {});
  CHECK(concurrency_points(build_arrangement(cfg)).empty());
  CHECK(count_ceva_triples(cfg) == 0);
}

TEST_CASE("every pair of segments meets in the closed triangle") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const auto arr = build_arrangement(testing::random_config(rng, 9, 12));
    const auto& segs = arr.segments();
    for (std::size_t i = 0; i < segs.size(); ++i)
      for (std::size_t j = i + 1; j < segs.size(); ++j)
        REQUIRE(segment_intersection(segs[i], segs[j]).has_value());
  }
}

TEST_CASE("geometric d agrees with the Ceva product count") {
  std::mt19937_64 rng(4242);
  int with_points = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto cfg = testing::random_config(rng, 9, 12);
    const auto points = concurrency_points(build_arrangement(cfg));
    CHECK(points.size() == count_ceva_triples(cfg));
    CHECK(points.size() <= cfg.a() * cfg.b() * cfg.c());
    for (const auto& p : points) {
      CHECK(ceva_product(cfg.feet(Vertex::A)[p.cevians[0]], cfg.feet(Vertex::B)[p.cevians[1]],
                         cfg.feet(Vertex::C)[p.cevians[2]]) == Rational(1));
    }
    if (!points.empty()) ++with_points;
  }
  CHECK(with_points > 0);
}

TEST_CASE("concurrency points do not depend on listing order") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto base = testing::mirror_config(testing::random_feet(rng, 3, 12));
    auto a = base.feet(Vertex::A);
    auto b = base.feet(Vertex::B);
    auto c = base.feet(Vertex::C);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const auto shuffled = CevianConfig::create(a, b, c);
    CHECK(shuffled == base);
    CHECK(concurrency_points(build_arrangement(shuffled)) ==
          concurrency_points(build_arrangement(base)));
  }
}

TEST_CASE("mirror pairs meet on the C-median") {
  for (long n = 0; n <= 3; ++n) {
    std::vector<Rational> feet;
    for (long i = 1; i <= n; ++i) feet.push_back(q(i, n + 2));
    const auto points = concurrency_points(build_arrangement(testing::mirror_config(feet)));
    CHECK(points.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("geometric d matches the concurrency equation for equal division") {
  for (long n = 2; n <= 12; ++n) {
    CAPTURE(n);
    const auto points = concurrency_points(build_arrangement(CevianConfig::equal_division(n)));
    CHECK(points.size() == count_concurrencies(n));
  }
}

TEST_CASE("d is unchanged on an alternate triangle") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const auto cfg = testing::random_config(rng, 9, 12);
    CHECK(concurrency_points(build_arrangement(cfg, Triangle::reference())).size() ==
          concurrency_points(build_arrangement(cfg, Triangle::alternate())).size());
  }
}
