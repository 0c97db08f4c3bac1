#include "outerstring/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "outerstring/arrangement.hpp"
#include "outerstring/crossing_level.hpp"

namespace outerstring {

SvgLayers parse_layers(const std::string& spec) {
  SvgLayers out;
  if (spec.empty()) return out;
  out.strings = false;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "strings") out.strings = true;
    else if (item == "levels") out.levels = true;
    else if (item == "witness") out.witness = true;
    else if (item == "folks") out.folks = true;
    else if (!item.empty()) throw ParseError("unknown layer " + item);
  }
  if (!out.levels && !out.witness && !out.folks) out.strings = true;
  return out;
}

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

class Canvas {
 public:
  Canvas(const Point& lo, const Point& hi) : lo_(lo) {
    const double w = std::max(1e-9, Rational(hi.x - lo.x).get_d());
    const double h = std::max(1e-9, Rational(hi.y - lo.y).get_d());
    scale_ = 800.0 / std::max(w, h);
    width_ = w * scale_ + 2 * kMargin;
    height_ = h * scale_ + 2 * kMargin;
    top_ = hi.y.get_d();
  }

  double x(const Point& p) const { return Rational(p.x - lo_.x).get_d() * scale_ + kMargin; }
  double y(const Point& p) const { return (top_ - p.y.get_d()) * scale_ + kMargin; }

  std::string xy(const Point& p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", x(p), y(p));
    return buf;
  }

  double width() const { return width_; }
  double height() const { return height_; }

 private:
  static constexpr double kMargin = 10.0;
  Point lo_;
  double scale_ = 1.0;
  double width_ = 0;
  double height_ = 0;
  double top_ = 0;
};

std::string folk_of(const std::string& id) {
  const auto dot = id.find('.');
  return dot == std::string::npos ? id : id.substr(0, dot);
}

}  // namespace

std::string render_svg(const Instance& inst, const SvgLayers& layers, const SvgOverlay& overlay) {
  Point lo(0, 0);
  Point hi(1, 1);
  bool first = true;
  auto extend = [&](const Point& p) {
    if (first) {
      lo = p;
      hi = p;
      first = false;
    }
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  };
  for (const auto& s : inst.strings) {
    for (const auto& v : s.vertices) extend(v);
  }
  for (const auto& c : overlay.curves) {
    for (const auto& v : c.vertices) extend(v);
  }
  if (first) hi = Point(1, 1);
  lo.x -= 1;
  hi.x += 1;
  hi.y += 1;
  lo.y = 0;

  const Canvas canvas(lo, hi);
  std::ostringstream out;
  char header[160];
  std::snprintf(header, sizeof header,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                canvas.width(), canvas.height(), canvas.width(), canvas.height());
  out << header;
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (layers.levels && !inst.strings.empty()) {
    const Arrangement arr = Arrangement::build(inst);
    const auto levels = crossing_levels_exact(arr);
    const int r = std::max(1, max_crossing_level(levels).r);
    out << "<g id=\"levels\">\n";
    for (int f = 0; f < arr.face_count(); ++f) {
      out << "<path class=\"face\" data-level=\"" << levels[static_cast<std::size_t>(f)] << "\" d=\"";
      bool move = true;
      for (int h : arr.face_boundary(f)) {
        out << (move ? "M" : " L") << canvas.xy(arr.nodes()[static_cast<std::size_t>(arr.tail(h))].p);
        move = false;
      }
      char fill[96];
      std::snprintf(fill, sizeof fill, " Z\" fill=\"#3050c0\" fill-opacity=\"%.3f\" stroke=\"none\"/>\n",
                    0.08 + 0.7 * levels[static_cast<std::size_t>(f)] / r);
      out << fill;
    }
    out << "</g>\n";
  }

  {
    const Point a(lo.x, Rational(0));
    const Point b(hi.x, Rational(0));
    char ground[160];
    std::snprintf(ground, sizeof ground,
                  "<line class=\"ground\" x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"black\" stroke-width=\"2\"/>\n",
                  canvas.x(a), canvas.y(a), canvas.x(b), canvas.y(b));
    out << ground;
  }

  if (layers.strings || layers.folks) {
    std::vector<std::string> folks;
    out << "<g id=\"strings\" fill=\"none\" stroke-width=\"1.5\">\n";
    for (const auto& s : inst.strings) {
      const char* colour = "#222222";
      if (layers.folks) {
        const std::string f = folk_of(s.id);
        auto it = std::find(folks.begin(), folks.end(), f);
        if (it == folks.end()) it = folks.insert(folks.end(), f);
        colour = kPalette[static_cast<std::size_t>(it - folks.begin()) % kPalette.size()];
      }
      out << "<polyline class=\"string\" data-id=\"" << s.id << "\" stroke=\"" << colour << "\" points=\"";
      for (std::size_t i = 0; i < s.vertices.size(); ++i) out << (i ? " " : "") << canvas.xy(s.vertices[i]);
      out << "\"/>\n";
    }
    out << "</g>\n";
  }

  if (layers.witness) {
    out << "<g id=\"witness\" fill=\"none\" stroke-width=\"2\">\n";
    const std::size_t half = overlay.curves.size() / 2;
    for (std::size_t i = 0; i < overlay.curves.size(); ++i) {
      const auto& c = overlay.curves[i];
      out << "<polyline class=\"curve\" data-id=\"" << c.id << "\" stroke=\"" << (i < half ? kPalette[0] : kPalette[1])
          << "\" points=\"";
      for (std::size_t k = 0; k < c.vertices.size(); ++k) out << (k ? " " : "") << canvas.xy(c.vertices[k]);
      out << "\"/>\n";
    }
    if (overlay.witness) {
      char dot[128];
      std::snprintf(dot, sizeof dot, "<circle class=\"witness\" cx=\"%.3f\" cy=\"%.3f\" r=\"5\" fill=\"#d62728\"/>\n",
                    canvas.x(*overlay.witness), canvas.y(*overlay.witness));
      out << dot;
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace outerstring
