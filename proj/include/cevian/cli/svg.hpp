#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cevian/arrangement.hpp"
#include "cevian/oracle.hpp"

namespace cevian::cli {

// Figures are drawn in a fixed 1000x1000 viewport with A at the lower
// left, B at the lower right and C at the upper left (a right isosceles
// triangle mirroring the reference coordinates). Coordinates are printed
// with six decimals; they are never read back.

inline constexpr int kViewport = 1000;

enum class Highlight { None, AllTriangles, Triple };

struct SvgOptions {
  Highlight highlight = Highlight::None;
  SegmentTriple triple{};  // used with Highlight::Triple
  OracleOptions oracle;
};

struct SvgFigure {
  std::string text;
  std::size_t concurrency_points = 0;
  std::size_t panels = 1;  // sub-figures in the grid
};

/// Throws ValidationError if a highlighted triple does not bound a triangle.
SvgFigure render_svg(const Arrangement& arrangement, const SvgOptions& options = {});

/// Resolves "AB", "BC", "CA", "A1", "B2", ... or a 0-based numeric id.
std::size_t parse_segment_ref(const Arrangement& arrangement, const std::string& ref);

}  // namespace cevian::cli
