#include "cevian/geometry.hpp"

#include <algorithm>
#include <utility>

#include "cevian/errors.hpp"

namespace cevian {

namespace {

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

// Parameter of `point` along p->q, for a point already known to be collinear.
Rational project(const Point2& point, const Segment& s) {
  const Rational dx = s.q().x - s.p().x;
  if (!dx.is_zero()) return (point.x - s.p().x) / dx;
  return (point.y - s.p().y) / (s.q().y - s.p().y);
}

std::optional<Point2> collinear_overlap(const Segment& s1, const Segment& s2) {
  Rational t0 = project(s2.p(), s1);
  Rational t1 = project(s2.q(), s1);
  if (t1 < t0) std::swap(t0, t1);
  const Rational lo = std::max(t0, Rational(0));
  const Rational hi = std::min(t1, Rational(1));
  if (hi < lo) return std::nullopt;
  if (lo == hi) {
    const Rational dx = s1.q().x - s1.p().x;
    const Rational dy = s1.q().y - s1.p().y;
    return Point2{s1.p().x + lo * dx, s1.p().y + lo * dy};
  }
  throw GeometryError("overlapping collinear segments " + to_string(s1.label()) + " and " +
                      to_string(s2.label()));
}

}  // namespace

std::string to_string(const SegmentLabel& label) {
  const std::string n = std::to_string(label.index + 1);
  switch (label.kind) {
    case SegmentKind::SideAB: return "AB";
    case SegmentKind::SideBC: return "BC";
    case SegmentKind::SideCA: return "CA";
    case SegmentKind::CevianA: return "A" + n;
    case SegmentKind::CevianB: return "B" + n;
    case SegmentKind::CevianC: return "C" + n;
    case SegmentKind::Free: return "L" + n;
  }
  return "?";
}

Segment::Segment(Point2 p, Point2 q, SegmentLabel label)
    : p_(std::move(p)), q_(std::move(q)), label_(label) {
  if (p_ == q_) throw GeometryError("degenerate segment " + to_string(label_));
}

int orientation(const Point2& p, const Point2& q, const Point2& r) {
  return cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y).sign();
}

bool on_segment(const Point2& point, const Segment& segment) {
  if (orientation(segment.p(), segment.q(), point) != 0) return false;
  const auto [xlo, xhi] = std::minmax(segment.p().x, segment.q().x);
  const auto [ylo, yhi] = std::minmax(segment.p().y, segment.q().y);
  return xlo <= point.x && point.x <= xhi && ylo <= point.y && point.y <= yhi;
}

std::optional<Point2> segment_intersection(const Segment& s1, const Segment& s2) {
  const Rational rx = s1.q().x - s1.p().x;
  const Rational ry = s1.q().y - s1.p().y;
  const Rational sx = s2.q().x - s2.p().x;
  const Rational sy = s2.q().y - s2.p().y;
  const Rational wx = s2.p().x - s1.p().x;
  const Rational wy = s2.p().y - s1.p().y;

  const Rational denom = cross(rx, ry, sx, sy);
  if (denom.is_zero()) {
    if (!cross(wx, wy, rx, ry).is_zero()) return std::nullopt;  // parallel, distinct lines
    return collinear_overlap(s1, s2);
  }

  const Rational t = cross(wx, wy, sx, sy) / denom;
  const Rational u = cross(wx, wy, rx, ry) / denom;
  if (t.sign() < 0 || t > Rational(1) || u.sign() < 0 || u > Rational(1)) return std::nullopt;
  return Point2{s1.p().x + t * rx, s1.p().y + t * ry};
}

}  // namespace cevian
