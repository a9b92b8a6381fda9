#pragma once

#include <sstream>
#include <string>

#include "rg/overlay.hpp"

namespace rg {

struct SvgStyle {
  std::string fill = "none";
  std::string stroke = "#222222";
  double stroke_width = 1.0;  // in pixels
  double opacity = 1.0;
};

// Default palette of the render command.
inline constexpr const char* kDiskColor = "#f5d547";     // medial disks
inline constexpr const char* kRegionColor = "#f2a0bf";   // robust regions
inline constexpr const char* kPurpleColor = "#9b6dd6";   // purple cells
inline constexpr const char* kGuardColor = "#1f6fd6";
inline constexpr const char* kWitnessColor = "#d64a1f";

/// Minimal SVG scene writer: world coordinates in, y flipped, polygons with
/// holes emitted as evenodd multi-subpath paths.
class SvgWriter {
 public:
  SvgWriter(const BBox& world, int width_px = 800, double margin_frac = 0.04);

  void add_polygon(const PolygonWithHoles& P, const SvgStyle& style);
  void add_multipoly(const MultiPoly& m, const SvgStyle& style);
  void add_disk(const Point& center, double radius, const SvgStyle& style);
  void add_segment(const Point& a, const Point& b, const SvgStyle& style);
  void add_polyline(const std::vector<Point>& pts, const SvgStyle& style);
  void add_point(const Point& p, double radius_px, const std::string& color);

  std::string str() const;
  void write(const std::string& path) const;

 private:
  Point to_px(const Point& w) const;
  void path_ring(std::ostringstream& d, const Ring& ring) const;

  BBox world_;
  double scale_ = 1;
  double ox_ = 0, oy_ = 0;
  int width_ = 0, height_ = 0;
  std::ostringstream body_;
};

}  // namespace rg
