#include "cevian/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cevian/errors.hpp"

namespace cevian {

namespace {

constexpr const char* kListNames[3] = {"feet_a", "feet_b", "feet_c"};

std::vector<Rational> validated(std::vector<Rational> feet, int which) {
  const std::string name = kListNames[which];
  for (std::size_t i = 0; i < feet.size(); ++i) {
    if (feet[i].sign() <= 0 || feet[i] >= Rational(1)) {
      throw ValidationError(name + "[" + std::to_string(i) + "] = " + feet[i].to_string() +
                            " lies outside the open interval (0,1)");
    }
  }
  std::vector<std::size_t> order(feet.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return feet[l] < feet[r]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (feet[order[k]] == feet[order[k - 1]]) {
      const auto first = std::min(order[k], order[k - 1]);
      const auto second = std::max(order[k], order[k - 1]);
      throw ValidationError(name + "[" + std::to_string(second) + "] = " +
                            feet[second].to_string() + " repeats " + name + "[" +
                            std::to_string(first) + "]");
    }
  }
  std::sort(feet.begin(), feet.end());
  return feet;
}

}  // namespace

CevianConfig CevianConfig::create(std::vector<Rational> feet_a, std::vector<Rational> feet_b,
                                  std::vector<Rational> feet_c) {
  CevianConfig config;
  config.feet_[0] = validated(std::move(feet_a), 0);
  config.feet_[1] = validated(std::move(feet_b), 1);
  config.feet_[2] = validated(std::move(feet_c), 2);
  return config;
}

CevianConfig CevianConfig::equal_division(long n) {
  if (n < 2) throw ValidationError("equal division needs n >= 2, got " + std::to_string(n));
  std::vector<Rational> feet;
  feet.reserve(static_cast<std::size_t>(n - 1));
  for (long i = 1; i < n; ++i) feet.emplace_back(BigInt(i), BigInt(n));
  return create(feet, feet, feet);
}

Triangle Triangle::reference() { return {{0, 0}, {1, 0}, {0, 1}}; }

Triangle Triangle::alternate() { return {{0, 0}, {3, 1}, {1, 4}}; }

std::size_t Arrangement::segment_id(Vertex v, std::size_t cevian_index) const {
  std::size_t base = 3;
  for (int w = 0; w < static_cast<int>(v); ++w) base += config_.count(static_cast<Vertex>(w));
  return base + cevian_index;
}

const Point2& Arrangement::vertex(Vertex v) const {
  switch (v) {
    case Vertex::A: return triangle_.a;
    case Vertex::B: return triangle_.b;
    case Vertex::C: return triangle_.c;
  }
  return triangle_.a;
}

Point2 foot_point(const Triangle& tri, Vertex v, const Rational& t) {
  const Point2* start = nullptr;
  const Point2* end = nullptr;
  switch (v) {
    case Vertex::A: start = &tri.b; end = &tri.c; break;
    case Vertex::B: start = &tri.c; end = &tri.a; break;
    case Vertex::C: start = &tri.a; end = &tri.b; break;
  }
  const Rational s = Rational(1) - t;
  return {s * start->x + t * end->x, s * start->y + t * end->y};
}

Arrangement build_arrangement(const CevianConfig& config, const Triangle& triangle) {
  if (orientation(triangle.a, triangle.b, triangle.c) == 0) {
    throw GeometryError("reference triangle is degenerate");
  }
  Arrangement arr;
  arr.triangle_ = triangle;
  arr.config_ = config;
  arr.segments_.reserve(3 + config.a() + config.b() + config.c());
  arr.segments_.emplace_back(triangle.a, triangle.b, SegmentLabel{SegmentKind::SideAB, 0});
  arr.segments_.emplace_back(triangle.b, triangle.c, SegmentLabel{SegmentKind::SideBC, 0});
  arr.segments_.emplace_back(triangle.c, triangle.a, SegmentLabel{SegmentKind::SideCA, 0});

  constexpr SegmentKind kinds[3] = {SegmentKind::CevianA, SegmentKind::CevianB,
                                    SegmentKind::CevianC};
  for (int w = 0; w < 3; ++w) {
    const auto v = static_cast<Vertex>(w);
    const auto& feet = config.feet(v);
    for (std::size_t i = 0; i < feet.size(); ++i) {
      arr.segments_.emplace_back(arr.vertex(v), foot_point(triangle, v, feet[i]),
                                 SegmentLabel{kinds[w], i});
    }
  }
  return arr;
}

std::vector<ConcurrencyPoint> concurrency_points(const Arrangement& arr) {
  const CevianConfig& config = arr.config();
  std::vector<ConcurrencyPoint> points;
  if (config.a() == 0 || config.b() == 0 || config.c() == 0) return points;

  const auto& segs = arr.segments();
  for (std::size_t i = 0; i < config.a(); ++i) {
    const Segment& sa = segs[arr.segment_id(Vertex::A, i)];
    for (std::size_t j = 0; j < config.b(); ++j) {
      const Segment& sb = segs[arr.segment_id(Vertex::B, j)];
      auto meet = segment_intersection(sa, sb);
      if (!meet) throw GeometryError("cevians " + to_string(sa.label()) + " and " +
                                     to_string(sb.label()) + " do not meet");
      for (std::size_t k = 0; k < config.c(); ++k) {
        if (on_segment(*meet, segs[arr.segment_id(Vertex::C, k)])) {
          points.push_back({*meet, {i, j, k}});
          // two C-cevians share only the vertex C, so at most one can match
          break;
        }
      }
    }
  }
  return points;
}

Rational ceva_product(const Rational& ta, const Rational& tb, const Rational& tc) {
  const Rational one(1);
  return (ta / (one - ta)) * (tb / (one - tb)) * (tc / (one - tc));
}

std::size_t count_ceva_triples(const CevianConfig& config) {
  std::size_t d = 0;
  for (const auto& ta : config.feet(Vertex::A)) {
    for (const auto& tb : config.feet(Vertex::B)) {
      for (const auto& tc : config.feet(Vertex::C)) {
        if (ceva_product(ta, tb, tc) == Rational(1)) ++d;
      }
    }
  }
  return d;
}

}  // namespace cevian
