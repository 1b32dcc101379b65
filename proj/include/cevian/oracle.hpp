#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cevian/arrangement.hpp"
#include "cevian/geometry.hpp"

namespace cevian {

// Brute-force triangle enumeration. Every pair of segments in a cevian
// arrangement meets inside the closed triangle, so a triple of segments
// either bounds a triangle (three distinct pairwise meeting points) or all
// three pass through one point: a vertex or an interior triple point. The
// enumerator classifies every triple directly from the exact geometry and
// never consults the closed-form counts.

enum class TripleClass { Triangle, ConcurrentAtVertex, ConcurrentInterior };

/// Segment ids in increasing order.
using SegmentTriple = std::array<std::size_t, 3>;

/// Throws std::out_of_range for ids outside the arrangement and
/// std::invalid_argument for repeated ids.
TripleClass classify_triple(const Arrangement& arrangement, SegmentTriple triple);

struct TripleTally {
  std::uint64_t triangles = 0;
  std::array<std::uint64_t, 3> at_vertex{};  // concurrent at A, B, C
  std::uint64_t interior = 0;

  std::uint64_t total() const {
    return triangles + at_vertex[0] + at_vertex[1] + at_vertex[2] + interior;
  }
  friend bool operator==(const TripleTally&, const TripleTally&) = default;
};

inline constexpr std::size_t kDefaultMaxSegments = 60;

struct OracleOptions {
  bool collect_triples = false;
  /// Skip the segment-count guard rail.
  bool force = false;
  std::size_t max_segments = kDefaultMaxSegments;
};

struct OracleResult {
  std::uint64_t triangle_count = 0;
  TripleTally tally;
  /// Triangle-bounding triples, lexicographic; filled when collect_triples.
  std::vector<SegmentTriple> triangles;
};

/// Parallel enumeration over the first segment of each triple. Output is
/// identical to enumerate_triangles_serial for any thread count.
/// Throws GuardRailError above options.max_segments unless options.force.
OracleResult enumerate_triangles(const Arrangement& arrangement, const OracleOptions& options = {});
OracleResult enumerate_triangles_serial(const Arrangement& arrangement,
                                        const OracleOptions& options = {});

/// True iff the three closed segments meet pairwise in three distinct points.
bool bounds_triangle(const Segment& s1, const Segment& s2, const Segment& s3);

/// Result of rebuilding a config on Triangle::alternate().
struct AffineCheck {
  std::size_t d_reference = 0;
  std::size_t d_alternate = 0;
  std::uint64_t count_reference = 0;
  std::uint64_t count_alternate = 0;
  bool holds() const { return d_reference == d_alternate && count_reference == count_alternate; }
};

AffineCheck check_affine_invariance(const CevianConfig& config, const OracleOptions& options = {});

/// Independent classification of the fan-and-parallels figure: a triangle
/// with apex C, `apex_lines` segments through C (including sides CA and CB)
/// and `parallels` segments parallel to AB (including AB).
struct FanTally {
  std::uint64_t triangles = 0;
  std::uint64_t apex_concurrent = 0;
  std::uint64_t all_parallel = 0;
  std::uint64_t two_parallel_apex = 0;
  std::uint64_t total() const {
    return triangles + apex_concurrent + all_parallel + two_parallel_apex;
  }
};

/// Throws ValidationError unless apex_lines >= 2 and parallels >= 1.
FanTally enumerate_fan_triangles(long apex_lines, long parallels);

}  // namespace cevian
