#include "tropical/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "tropical/polytope.hpp"
#include "tropical/regularity.hpp"
#include "tropical/spectral.hpp"

namespace tropical {

namespace {

constexpr double kCanvas = 400.0;

// Axis-aligned square window in data coordinates.
struct Window {
  Scalar x0, y0, side;
};

Window fit(const std::vector<Point2>& pts) {
  Scalar xmin = pts.front()[0], xmax = xmin, ymin = pts.front()[1], ymax = ymin;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  Scalar side = std::max(xmax - xmin, ymax - ymin);
  if (side.is_zero()) side = Scalar(2);
  const Scalar pad = side / Scalar(10);
  const Scalar full = side + pad + pad;
  // Centre the shorter extent.
  const Scalar x0 = (xmin + xmax - full) / Scalar(2);
  const Scalar y0 = (ymin + ymax - full) / Scalar(2);
  return {x0, y0, full};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

class Canvas {
 public:
  explicit Canvas(const Window& w) : w_(w) {}

  double px(const Scalar& x) const { return ((x - w_.x0) / w_.side).to_double() * kCanvas; }
  double py(const Scalar& y) const { return (Scalar(1) - (y - w_.y0) / w_.side).to_double() * kCanvas; }
  std::string xy(const Point2& p) const { return num(px(p[0])) + "," + num(py(p[1])); }

  void grid() {
    const Scalar lo_x = w_.x0, hi_x = w_.x0 + w_.side, lo_y = w_.y0, hi_y = w_.y0 + w_.side;
    const double span = w_.side.to_double();
    const long step = std::max(1L, static_cast<long>(std::ceil(span / 20.0)));
    body_ += "<g stroke=\"#d3d3d3\" stroke-width=\"0.5\">\n";
    for (long k = static_cast<long>(std::ceil(lo_x.to_double() / step)) * step; Scalar(k) <= hi_x; k += step)
      body_ += line({Scalar(k), lo_y}, {Scalar(k), hi_y});
    for (long k = static_cast<long>(std::ceil(lo_y.to_double() / step)) * step; Scalar(k) <= hi_y; k += step)
      body_ += line({lo_x, Scalar(k)}, {hi_x, Scalar(k)});
    body_ += "</g>\n<g stroke=\"#808080\" stroke-width=\"1\">\n";
    if (lo_x <= Scalar(0) && Scalar(0) <= hi_x) body_ += line({Scalar(0), lo_y}, {Scalar(0), hi_y});
    if (lo_y <= Scalar(0) && Scalar(0) <= hi_y) body_ += line({lo_x, Scalar(0)}, {hi_x, Scalar(0)});
    body_ += "</g>\n";
  }

  void polygon(const std::vector<Point2>& pts) {
    std::string s;
    for (const auto& p : pts) s += (s.empty() ? "" : " ") + xy(p);
    body_ += "<polygon points=\"" + s + "\" fill=\"#c8c8c8\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  }

  void segment(const Point2& a, const Point2& b) {
    body_ += "<g stroke=\"#000000\" stroke-width=\"2\">\n" + line(a, b) + "</g>\n";
  }

  void dot(const Point2& p) {
    body_ += "<circle cx=\"" + num(px(p[0])) + "\" cy=\"" + num(py(p[1])) + "\" r=\"4\" fill=\"#000000\"/>\n";
  }

  void cross(const Point2& p) {
    const double x = px(p[0]), y = py(p[1]);
    body_ += "<g stroke=\"#000000\" stroke-width=\"1.5\">\n";
    body_ += raw_line(x - 5, y - 5, x + 5, y + 5);
    body_ += raw_line(x - 5, y + 5, x + 5, y - 5);
    body_ += "</g>\n";
  }

  std::string finish() const {
    const std::string size = num(kCanvas);
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
           "\" viewBox=\"0 0 " + size + " " + size + "\">\n"
           "<rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size + "\" fill=\"#ffffff\"/>\n" +
           body_ + "</svg>\n";
  }

 private:
  std::string line(const Point2& a, const Point2& b) const { return raw_line(px(a[0]), py(a[1]), px(b[0]), py(b[1])); }
  static std::string raw_line(double x1, double y1, double x2, double y2) {
    return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) + "\"/>\n";
  }

  Window w_;
  std::string body_;
};

Point2 project2(const TropVector& x) {
  const auto p = projectivize(x);
  return {p[0], p[1]};
}

std::string render_polytrope(const TropMatrix& e) {
  const auto vertices = polytrope_vertices_2d(e);
  std::vector<Point2> dots;
  const auto cols = columns(e);
  for (std::size_t j : extremal_columns(e)) dots.push_back(project2(cols[j]));
  const Point2 origin{Scalar(0), Scalar(0)};

  std::vector<Point2> all = vertices;
  all.insert(all.end(), dots.begin(), dots.end());
  all.push_back(origin);
  Canvas c(fit(all));
  c.grid();
  c.polygon(vertices);
  for (const auto& d : dots) c.dot(d);
  c.cross(origin);
  return c.finish();
}

// Clip a convex polygon to {p : lo ≤ p[0] − p[1] ≤ hi} (Sutherland–Hodgman).
std::vector<Point2> clip_band(std::vector<Point2> poly, const Scalar& lo, const Scalar& hi) {
  auto clip = [](const std::vector<Point2>& in, auto inside_value) {
    std::vector<Point2> out;
    for (std::size_t i = 0; i < in.size(); ++i) {
      const Point2& a = in[i];
      const Point2& b = in[(i + 1) % in.size()];
      const Scalar fa = inside_value(a), fb = inside_value(b);
      if (fa.sign() >= 0) out.push_back(a);
      if ((fa.sign() > 0 && fb.sign() < 0) || (fa.sign() < 0 && fb.sign() > 0)) {
        const Scalar t = fa / (fa - fb);
        out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
      }
    }
    return out;
  };
  poly = clip(poly, [&](const Point2& p) { return p[0] - p[1] - lo; });
  poly = clip(poly, [&](const Point2& p) { return hi - (p[0] - p[1]); });
  return poly;
}

std::string render_band(const TropMatrix& e) {
  if (!is_idempotent(e)) throw PreconditionError("render: 2x2 matrix is not idempotent");
  const auto cols = columns(e);
  std::vector<Point2> dots;
  std::optional<Scalar> lo, hi;
  for (std::size_t j : extremal_columns(e)) {
    const Point2 p{cols[j][0], cols[j][1]};
    dots.push_back(p);
    const Scalar diff = p[0] - p[1];
    if (!lo || diff < *lo) lo = diff;
    if (!hi || *hi < diff) hi = diff;
  }
  const Point2 origin{Scalar(0), Scalar(0)};

  std::vector<Point2> all = dots;
  all.push_back(origin);
  const Window w = fit(all);
  Canvas c(w);
  c.grid();
  const Scalar x1 = w.x0 + w.side, y1 = w.y0 + w.side;
  if (*lo == *hi) {
    // Rank 1: the line x1 − x2 = lo across the window.
    const auto seg = clip_band({{w.x0, w.y0}, {x1, w.y0}, {x1, y1}, {w.x0, y1}}, *lo, *hi);
    if (seg.size() >= 2) c.segment(*std::min_element(seg.begin(), seg.end()), *std::max_element(seg.begin(), seg.end()));
  } else {
    c.polygon(clip_band({{w.x0, w.y0}, {x1, w.y0}, {x1, y1}, {w.x0, y1}}, *lo, *hi));
  }
  for (const auto& d : dots) c.dot(d);
  c.cross(origin);
  return c.finish();
}

}  // namespace

std::string render_svg(const TropMatrix& e) {
  require_square(e, "render");
  if (e.rows() > 3) throw PreconditionError("render supports n ≤ 3");
  if (e.rows() == 1) throw PreconditionError("render needs a 2x2 or 3x3 matrix");
  return e.rows() == 3 ? render_polytrope(e) : render_band(e);
}

}  // namespace tropical
