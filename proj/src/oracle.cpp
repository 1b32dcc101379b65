#include "cevian/oracle.hpp"

#include <exception>
#include <stdexcept>
#include <string>

#include "cevian/errors.hpp"

namespace cevian {

namespace {

// Dense table of pairwise meeting points; every pair must meet.
class MeetTable {
 public:
  explicit MeetTable(const Arrangement& arr) : n_(arr.segments().size()), meet_(n_ * n_) {
    const auto& segs = arr.segments();
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        auto point = segment_intersection(segs[i], segs[j]);
        if (!point) {
          throw GeometryError("segments " + to_string(segs[i].label()) + " and " +
                              to_string(segs[j].label()) + " do not meet");
        }
        meet_[i * n_ + j] = *point;
        meet_[j * n_ + i] = std::move(*point);
      }
    }
  }

  const Point2& at(std::size_t i, std::size_t j) const { return meet_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Point2> meet_;
};

int vertex_index(const Arrangement& arr, const Point2& p) {
  for (int v = 0; v < 3; ++v) {
    if (arr.vertex(static_cast<Vertex>(v)) == p) return v;
  }
  return -1;
}

struct Classified {
  TripleClass kind;
  int vertex;  // -1 unless ConcurrentAtVertex
};

Classified classify_points(const Arrangement& arr, const Point2& p01, const Point2& p02,
                           const Point2& p12) {
  if (p01 != p02 && p01 != p12 && p02 != p12) return {TripleClass::Triangle, -1};
  if (!(p01 == p02 && p02 == p12)) {
    // Two lines through a common point meet nowhere else, so a partial
    // coincidence means the arrangement is not a cevian arrangement.
    throw GeometryError("triple meets in exactly two distinct points");
  }
  const int v = vertex_index(arr, p01);
  if (v >= 0) return {TripleClass::ConcurrentAtVertex, v};
  return {TripleClass::ConcurrentInterior, -1};
}

void tally_one(TripleTally& tally, const Classified& c) {
  switch (c.kind) {
    case TripleClass::Triangle: ++tally.triangles; break;
    case TripleClass::ConcurrentAtVertex: ++tally.at_vertex[static_cast<std::size_t>(c.vertex)]; break;
    case TripleClass::ConcurrentInterior: ++tally.interior; break;
  }
}

void check_guard_rail(const Arrangement& arr, const OracleOptions& options) {
  const std::size_t n = arr.segments().size();
  if (!options.force && n > options.max_segments) {
    throw GuardRailError("arrangement has " + std::to_string(n) + " segments; the brute-force "
                         "enumerator is limited to " + std::to_string(options.max_segments) +
                         " (raise CEVIAN_MAX_SEGMENTS or force)");
  }
}

// All triples whose smallest id is `i`, in lexicographic order.
void scan_first(const Arrangement& arr, const MeetTable& meets, std::size_t i, bool collect,
                TripleTally& tally, std::vector<SegmentTriple>& triangles) {
  const std::size_t n = arr.segments().size();
  for (std::size_t j = i + 1; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const Classified c = classify_points(arr, meets.at(i, j), meets.at(i, k), meets.at(j, k));
      tally_one(tally, c);
      if (collect && c.kind == TripleClass::Triangle) triangles.push_back({i, j, k});
    }
  }
}

OracleResult finish(TripleTally tally, std::vector<SegmentTriple> triangles) {
  OracleResult out;
  out.tally = tally;
  out.triangle_count = tally.triangles;
  out.triangles = std::move(triangles);
  return out;
}

}  // namespace

TripleClass classify_triple(const Arrangement& arr, SegmentTriple triple) {
  const auto& segs = arr.segments();
  for (std::size_t id : triple) {
    if (id >= segs.size()) throw std::out_of_range("segment id " + std::to_string(id));
  }
  if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2]) {
    throw std::invalid_argument("triple repeats a segment");
  }
  auto meet = [&](std::size_t x, std::size_t y) {
    auto p = segment_intersection(segs[x], segs[y]);
    if (!p) throw GeometryError("segments " + to_string(segs[x].label()) + " and " +
                                to_string(segs[y].label()) + " do not meet");
    return *p;
  };
  return classify_points(arr, meet(triple[0], triple[1]), meet(triple[0], triple[2]),
                         meet(triple[1], triple[2]))
      .kind;
}

OracleResult enumerate_triangles_serial(const Arrangement& arr, const OracleOptions& options) {
  check_guard_rail(arr, options);
  const MeetTable meets(arr);
  TripleTally tally;
  std::vector<SegmentTriple> triangles;
  for (std::size_t i = 0; i < arr.segments().size(); ++i) {
    scan_first(arr, meets, i, options.collect_triples, tally, triangles);
  }
  return finish(tally, std::move(triangles));
}

OracleResult enumerate_triangles(const Arrangement& arr, const OracleOptions& options) {
  check_guard_rail(arr, options);
  const MeetTable meets(arr);
  const auto n = static_cast<std::int64_t>(arr.segments().size());
  std::vector<TripleTally> tallies(static_cast<std::size_t>(n));
  std::vector<std::vector<SegmentTriple>> buckets(static_cast<std::size_t>(n));

  // Per-first-segment buckets; the reduction below runs in index order so the
  // result does not depend on how rows were distributed.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto row = static_cast<std::size_t>(i);
    try {
      scan_first(arr, meets, row, options.collect_triples, tallies[row], buckets[row]);
    } catch (...) {
#pragma omp critical(cevian_oracle_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  TripleTally tally;
  std::vector<SegmentTriple> triangles;
  for (std::size_t row = 0; row < tallies.size(); ++row) {
    tally.triangles += tallies[row].triangles;
    for (std::size_t v = 0; v < 3; ++v) tally.at_vertex[v] += tallies[row].at_vertex[v];
    tally.interior += tallies[row].interior;
    triangles.insert(triangles.end(), buckets[row].begin(), buckets[row].end());
  }
  return finish(tally, std::move(triangles));
}

bool bounds_triangle(const Segment& s1, const Segment& s2, const Segment& s3) {
  const auto p12 = segment_intersection(s1, s2);
  if (!p12) return false;
  const auto p13 = segment_intersection(s1, s3);
  if (!p13) return false;
  const auto p23 = segment_intersection(s2, s3);
  if (!p23) return false;
  return *p12 != *p13 && *p12 != *p23 && *p13 != *p23;
}

AffineCheck check_affine_invariance(const CevianConfig& config, const OracleOptions& options) {
  const Arrangement reference = build_arrangement(config, Triangle::reference());
  const Arrangement alternate = build_arrangement(config, Triangle::alternate());
  AffineCheck out;
  out.d_reference = concurrency_points(reference).size();
  out.d_alternate = concurrency_points(alternate).size();
  OracleOptions counting = options;
  counting.collect_triples = false;
  out.count_reference = enumerate_triangles(reference, counting).triangle_count;
  out.count_alternate = enumerate_triangles(alternate, counting).triangle_count;
  return out;
}

FanTally enumerate_fan_triangles(long apex_lines, long parallels) {
  if (apex_lines < 2) throw ValidationError("need at least 2 lines through the apex");
  if (parallels < 1) throw ValidationError("need at least 1 line parallel to the base");

  // Apex C = (0,1) over base AB from (0,0) to (1,0).
  std::vector<Segment> lines;
  const Point2 apex{0, 1};
  for (long i = 0; i < apex_lines; ++i) {
    const Rational x{BigInt(i), BigInt(apex_lines - 1)};
    lines.emplace_back(apex, Point2{x, 0}, SegmentLabel{SegmentKind::Free, lines.size()});
  }
  for (long h = 0; h < parallels; ++h) {
    const Rational y{BigInt(h), BigInt(parallels)};
    lines.emplace_back(Point2{0, y}, Point2{Rational(1) - y, y},
                       SegmentLabel{SegmentKind::Free, lines.size()});
  }

  FanTally tally;
  const std::size_t n = lines.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto pij = segment_intersection(lines[i], lines[j]);
        const auto pik = segment_intersection(lines[i], lines[k]);
        const auto pjk = segment_intersection(lines[j], lines[k]);
        const int missing = !pij + !pik + !pjk;
        if (missing == 3) {
          ++tally.all_parallel;
        } else if (missing == 1) {
          ++tally.two_parallel_apex;
        } else if (missing == 0) {
          if (bounds_triangle(lines[i], lines[j], lines[k])) {
            ++tally.triangles;
          } else {
            ++tally.apex_concurrent;
          }
        } else {
          throw GeometryError("fan triple with exactly one meeting point");
        }
      }
    }
  }
  return tally;
}

}  // namespace cevian
