#pragma once

#include <cstdint>
#include <string>

#include "cevian/rational.hpp"

namespace cevian {

/// Where the concurrency count d in a report came from.
enum class DProvenance { Geometric, CevaEquation, StructuralZero, UserSupplied };

std::string to_string(DProvenance provenance);

struct CountReport {
  BigInt a;
  BigInt b;
  BigInt c;
  BigInt d;
  DProvenance d_provenance = DProvenance::UserSupplied;
  BigInt triangle_count;
};

/// n(n-1)(n-2)/6, which is 0 for n < 3. Throws ValidationError for n < 0.
BigInt binom3(const BigInt& n);

/// Triangles in the picture of a triangle plus a, b, c cevians from its
/// vertices with d interior triple points:
///
///   C(a+b+c+3, 3) - C(a+2, 3) - C(b+2, 3) - C(c+2, 3) - d
///
/// d is an input: it depends on where the feet are, not just on a, b, c.
/// Throws ValidationError if d > 0 while some count is 0, if d > a*b*c, or
/// if any argument is negative. A zero d with min(a,b,c) = 0 is reported as
/// structural-zero regardless of `provenance`.
CountReport theorem1_count(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                           DProvenance provenance = DProvenance::UserSupplied);

/// (a+1)(b+1)(a+b+2)/2: cevians from two vertices only.
BigInt two_vertex_count(const BigInt& a, const BigInt& b);

/// (n+3)(n+1)^2: n mirror-paired cevians from A and B plus the median from C.
BigInt symmetric_count(const BigInt& n);

/// Equal division into q = p^m pieces from every vertex. d is 0 for odd p and
/// 3q-5 for p = 2; the count is (8q^3-9q^2+3q)/2 or (8q^3-9q^2-3q+10)/2.
/// Throws ValidationError if p is not prime or m < 1.
CountReport theorem2_count(std::uint64_t p, unsigned m);

/// Overcount-and-correct breakdown for a triangle with `apex_lines` lines
/// through its apex (two of which are its sides) and `parallels` lines
/// parallel to the base (one of which is the base).
struct FanBreakdown {
  BigInt total_triples;       // C(p+r, 3)
  BigInt apex_concurrent;     // C(p, 3)
  BigInt all_parallel;        // C(r, 3)
  BigInt two_parallel_apex;   // C(r, 2) * p
  BigInt triangles;
};

/// Throws ValidationError unless apex_lines >= 2 and parallels >= 1.
FanBreakdown fan_parallel_breakdown(long apex_lines, long parallels);
BigInt fan_parallel_count(long apex_lines, long parallels);

}  // namespace cevian
