#include "rg/svg.hpp"

#include <fstream>
#include <iomanip>

namespace rg {

SvgWriter::SvgWriter(const BBox& world, int width_px, double margin_frac) : world_(world) {
  const double w = std::max(world.width(), 1e-9);
  const double h = std::max(world.height(), 1e-9);
  const double margin = margin_frac * std::max(w, h);
  scale_ = width_px / (w + 2 * margin);
  ox_ = world.xmin - margin;
  oy_ = world.ymax + margin;
  width_ = width_px;
  height_ = static_cast<int>(std::ceil((h + 2 * margin) * scale_));
  body_ << std::setprecision(10);
}

Point SvgWriter::to_px(const Point& w) const {
  return {(w.x - ox_) * scale_, (oy_ - w.y) * scale_};
}

void SvgWriter::path_ring(std::ostringstream& d, const Ring& ring) const {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point p = to_px(ring[i]);
    d << (i == 0 ? "M " : "L ") << p.x << " " << p.y << " ";
  }
  d << "Z ";
}

namespace {

void style_attrs(std::ostringstream& out, const SvgStyle& s) {
  out << "fill=\"" << s.fill << "\" stroke=\"" << s.stroke << "\" stroke-width=\""
      << s.stroke_width << "\"";
  if (s.opacity < 1.0) out << " opacity=\"" << s.opacity << "\"";
}

}  // namespace

void SvgWriter::add_polygon(const PolygonWithHoles& P, const SvgStyle& style) {
  std::ostringstream d;
  d << std::setprecision(10);
  path_ring(d, P.outer());
  for (const Ring& h : P.holes()) path_ring(d, h);
  body_ << "  <path d=\"" << d.str() << "\" fill-rule=\"evenodd\" ";
  style_attrs(body_, style);
  body_ << "/>\n";
}

void SvgWriter::add_multipoly(const MultiPoly& m, const SvgStyle& style) {
  for (const PolygonWithHoles& part : m) add_polygon(part, style);
}

void SvgWriter::add_disk(const Point& center, double radius, const SvgStyle& style) {
  const Point c = to_px(center);
  body_ << "  <circle cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\"" << radius * scale_
        << "\" ";
  style_attrs(body_, style);
  body_ << "/>\n";
}

void SvgWriter::add_segment(const Point& a, const Point& b, const SvgStyle& style) {
  const Point pa = to_px(a), pb = to_px(b);
  body_ << "  <line x1=\"" << pa.x << "\" y1=\"" << pa.y << "\" x2=\"" << pb.x << "\" y2=\""
        << pb.y << "\" ";
  style_attrs(body_, style);
  body_ << "/>\n";
}

void SvgWriter::add_polyline(const std::vector<Point>& pts, const SvgStyle& style) {
  body_ << "  <polyline points=\"";
  for (const Point& p : pts) {
    const Point q = to_px(p);
    body_ << q.x << "," << q.y << " ";
  }
  body_ << "\" ";
  style_attrs(body_, style);
  body_ << "/>\n";
}

void SvgWriter::add_point(const Point& p, double radius_px, const std::string& color) {
  const Point c = to_px(p);
  body_ << "  <circle cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\"" << radius_px
        << "\" fill=\"" << color << "\" stroke=\"none\"/>\n";
}

std::string SvgWriter::str() const {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
      << height_ << "\" viewBox=\"0 0 " << width_ << " " << height_ << "\">\n"
      << body_.str() << "</svg>\n";
  return out.str();
}

void SvgWriter::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw GeomError("cannot write " + path);
  out << str();
}

}  // namespace rg
