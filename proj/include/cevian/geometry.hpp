#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "cevian/rational.hpp"

namespace cevian {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

enum class SegmentKind { SideAB, SideBC, SideCA, CevianA, CevianB, CevianC, Free };

/// Identity of a segment inside a figure. `index` is 0-based within its
/// kind and only meaningful for cevians and free segments.
struct SegmentLabel {
  SegmentKind kind = SegmentKind::Free;
  std::size_t index = 0;

  friend bool operator==(const SegmentLabel&, const SegmentLabel&) = default;
};

/// "AB", "BC", "CA", "A1", "B3", "L2" (cevian and line numbers are 1-based).
std::string to_string(const SegmentLabel& label);

/// Closed segment between two distinct points.
class Segment {
 public:
  /// Throws GeometryError when p == q.
  Segment(Point2 p, Point2 q, SegmentLabel label = {});

  const Point2& p() const { return p_; }
  const Point2& q() const { return q_; }
  const SegmentLabel& label() const { return label_; }

 private:
  Point2 p_;
  Point2 q_;
  SegmentLabel label_;
};

/// Sign of (q - p) x (r - p): +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const Point2& p, const Point2& q, const Point2& r);

/// True iff `point` lies on the closed segment.
bool on_segment(const Point2& point, const Segment& segment);

/// The single common point of two closed segments, or nullopt if they are
/// disjoint. Collinear segments that touch only at an endpoint yield that
/// endpoint; collinear segments sharing more than one point throw
/// GeometryError.
std::optional<Point2> segment_intersection(const Segment& s1, const Segment& s2);

}  // namespace cevian
