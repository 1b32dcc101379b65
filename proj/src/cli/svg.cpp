#include "cevian/cli/svg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "cevian/errors.hpp"

namespace cevian::cli {

namespace {

constexpr long kMargin = 50;
constexpr long kSpan = kViewport - 2 * kMargin;

// Reference (x, y) to viewport coordinates; y grows downward in SVG.
std::string sx(const Rational& x) { return (Rational(kMargin) + Rational(kSpan) * x).to_fixed(6); }
std::string sy(const Rational& y) {
  return (Rational(kViewport - kMargin) - Rational(kSpan) * y).to_fixed(6);
}

void line(std::ostream& out, const Segment& s, const char* cls) {
  out << "    <line class=\"" << cls << "\" data-id=\"" << to_string(s.label()) << "\" x1=\""
      << sx(s.p().x) << "\" y1=\"" << sy(s.p().y) << "\" x2=\"" << sx(s.q().x) << "\" y2=\""
      << sy(s.q().y) << "\"/>\n";
}

void figure(std::ostream& out, const Arrangement& arr, const std::vector<ConcurrencyPoint>& points) {
  const auto& segs = arr.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) line(out, segs[i], i < 3 ? "side" : "cevian");
  for (const auto& cp : points) {
    out << "    <circle class=\"concurrency\" cx=\"" << sx(cp.location.x) << "\" cy=\""
        << sy(cp.location.y) << "\" r=\"9\"/>\n";
  }
}

void shade(std::ostream& out, const Arrangement& arr, const SegmentTriple& t) {
  const auto& segs = arr.segments();
  const Point2 p01 = *segment_intersection(segs[t[0]], segs[t[1]]);
  const Point2 p02 = *segment_intersection(segs[t[0]], segs[t[2]]);
  const Point2 p12 = *segment_intersection(segs[t[1]], segs[t[2]]);
  out << "    <polygon class=\"highlight\" data-triple=\"" << to_string(segs[t[0]].label()) << ","
      << to_string(segs[t[1]].label()) << "," << to_string(segs[t[2]].label()) << "\" points=\""
      << sx(p01.x) << "," << sy(p01.y) << " " << sx(p02.x) << "," << sy(p02.y) << " "
      << sx(p12.x) << "," << sy(p12.y) << "\"/>\n";
}

void header(std::ostream& out, long width, long height) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kViewport
      << "\" height=\"" << kViewport << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "  <style>\n"
      << "    .side { stroke: #000; stroke-width: 6; }\n"
      << "    .cevian { stroke: #333; stroke-width: 3; }\n"
      << "    .concurrency { fill: #c00; }\n"
      << "    .highlight { fill: #6baed6; fill-opacity: 0.7; stroke: none; }\n"
      << "  </style>\n";
}

}  // namespace

SvgFigure render_svg(const Arrangement& arr, const SvgOptions& options) {
  const auto points = concurrency_points(arr);
  std::ostringstream out;
  SvgFigure result;
  result.concurrency_points = points.size();

  if (options.highlight != Highlight::AllTriangles) {
    header(out, kViewport, kViewport);
    out << "  <g class=\"figure\">\n";
    if (options.highlight == Highlight::Triple) {
      SegmentTriple t = options.triple;
      std::sort(t.begin(), t.end());
      if (classify_triple(arr, t) != TripleClass::Triangle) {
        throw ValidationError("segments " + to_string(arr.segments()[t[0]].label()) + ", " +
                              to_string(arr.segments()[t[1]].label()) + ", " +
                              to_string(arr.segments()[t[2]].label()) +
                              " meet in a single point and bound no triangle");
      }
      shade(out, arr, t);
    }
    figure(out, arr, points);
    out << "  </g>\n</svg>\n";
    result.text = out.str();
    return result;
  }

  OracleOptions oracle = options.oracle;
  oracle.collect_triples = true;
  const OracleResult found = enumerate_triangles(arr, oracle);
  const long panels = static_cast<long>(found.triangles.size());
  const long cols = std::max(1L, static_cast<long>(std::ceil(std::sqrt(static_cast<double>(panels)))));
  const long rows = std::max(1L, (panels + cols - 1) / cols);
  header(out, cols * kViewport, rows * kViewport);
  for (long idx = 0; idx < panels; ++idx) {
    out << "  <g class=\"figure\" transform=\"translate(" << (idx % cols) * kViewport << ","
        << (idx / cols) * kViewport << ")\">\n";
    shade(out, arr, found.triangles[static_cast<std::size_t>(idx)]);
    figure(out, arr, points);
    out << "  </g>\n";
  }
  out << "</svg>\n";
  result.text = out.str();
  result.panels = static_cast<std::size_t>(panels);
  return result;
}

std::size_t parse_segment_ref(const Arrangement& arr, const std::string& ref) {
  std::string key;
  for (char ch : ref) {
    if (!std::isspace(static_cast<unsigned char>(ch))) key += static_cast<char>(std::toupper(ch));
  }
  const auto& segs = arr.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (to_string(segs[i].label()) == key) return i;
  }
  if (!key.empty() && std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const unsigned long id = std::stoul(key);
    if (id < segs.size()) return id;
  }
  throw ValidationError("no segment \"" + ref + "\" in this arrangement");
}

}  // namespace cevian::cli
