#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "cevian/geometry.hpp"
#include "cevian/rational.hpp"

namespace cevian {

enum class Vertex { A = 0, B = 1, C = 2 };

/// Foot positions of the cevians drawn from each vertex.
///
/// A foot parameter t places the foot at (1-t)*start + t*end of the
/// opposite side, with BC traversed B->C, CA traversed C->A and AB
/// traversed A->B. Under this convention the Ceva ratios BD/DC, CE/EA and
/// AF/FB are all t/(1-t), so three cevians are concurrent exactly when the
/// product of their t/(1-t) factors is 1.
///
/// Feet lie strictly inside (0,1) and are stored in increasing order.
class CevianConfig {
 public:
  CevianConfig() = default;

  /// Sorts each list and validates it. Throws ValidationError naming the
  /// offending entry (as given, before sorting) for a parameter outside
  /// (0,1) or a repeated foot.
  static CevianConfig create(std::vector<Rational> feet_a, std::vector<Rational> feet_b,
                             std::vector<Rational> feet_c);

  /// n-1 cevians per vertex with feet at i/n. Throws ValidationError for n < 2.
  static CevianConfig equal_division(long n);

  const std::vector<Rational>& feet(Vertex v) const { return feet_[static_cast<int>(v)]; }
  std::size_t count(Vertex v) const { return feet(v).size(); }
  std::size_t a() const { return count(Vertex::A); }
  std::size_t b() const { return count(Vertex::B); }
  std::size_t c() const { return count(Vertex::C); }

  friend bool operator==(const CevianConfig&, const CevianConfig&) = default;

 private:
  std::array<std::vector<Rational>, 3> feet_;
};

struct Triangle {
  Point2 a;
  Point2 b;
  Point2 c;

  /// A=(0,0), B=(1,0), C=(0,1).
  static Triangle reference();
  /// A second, non-right rational triangle used for affine-invariance checks.
  static Triangle alternate();
};

/// The three sides plus every cevian, realized as exact segments.
///
/// Segment ids: 0 = AB, 1 = BC, 2 = CA, then the A-cevians in foot order,
/// then the B-cevians, then the C-cevians.
class Arrangement {
 public:
  const Triangle& triangle() const { return triangle_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const CevianConfig& config() const { return config_; }

  std::size_t segment_id(Vertex v, std::size_t cevian_index) const;
  const Point2& vertex(Vertex v) const;

 private:
  friend Arrangement build_arrangement(const CevianConfig&, const Triangle&);

  Triangle triangle_;
  std::vector<Segment> segments_;
  CevianConfig config_;
};

Arrangement build_arrangement(const CevianConfig& config,
                              const Triangle& triangle = Triangle::reference());

/// Point on side opposite `v` at foot parameter t (see CevianConfig).
Point2 foot_point(const Triangle& triangle, Vertex v, const Rational& t);

/// An interior point where one cevian from each vertex meets. `cevians`
/// holds the A, B and C cevian indices (positions in the config's lists).
struct ConcurrencyPoint {
  Point2 location;
  std::array<std::size_t, 3> cevians{};

  friend bool operator==(const ConcurrencyPoint&, const ConcurrencyPoint&) = default;
};

/// Every interior triple point, ordered by (A index, B index). Its size is d.
std::vector<ConcurrencyPoint> concurrency_points(const Arrangement& arrangement);

/// (ta/(1-ta)) * (tb/(1-tb)) * (tc/(1-tc)).
Rational ceva_product(const Rational& ta, const Rational& tb, const Rational& tc);

/// d computed purely from Ceva's condition over all (A, B, C) cevian triples.
/// Independent of the segment geometry; used as a cross-check.
std::size_t count_ceva_triples(const CevianConfig& config);

}  // namespace cevian
