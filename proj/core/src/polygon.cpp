#include "okb/polygon.hpp"

#include <algorithm>

#include "okb/errors.hpp"

namespace okb {

Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(const Rational& s, const Point2& a) { return {s * a.x, s * a.y}; }

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

namespace {

Rational cross2(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }

}  // namespace

RationalPolygon RationalPolygon::from_points(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(),
            [](const Point2& a, const Point2& b) { return a.lex_less(b); });
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RationalPolygon out;
  if (points.empty()) return out;
  if (points.size() == 1) {
    out.vertices_ = std::move(points);
    return out;
  }
  bool collinear = true;
  for (size_t i = 2; i < points.size() && collinear; ++i)
    collinear = cross(points[0], points[1], points[i]) == 0;
  if (collinear) {
    out.vertices_ = {points.front(), points.back()};
    return out;
  }

  // Monotone chain; popping on cross <= 0 keeps only strict corners, and the
  // lower-then-upper traversal is counterclockwise from the lex-smallest.
  std::vector<Point2> hull;
  auto build = [&](auto begin, auto end) {
    size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             sign(cross(hull[hull.size() - 2], hull.back(), *it)) <= 0)
        hull.pop_back();
      hull.push_back(*it);
    }
    hull.pop_back();  // chain endpoint; the next chain starts with it
  };
  build(points.begin(), points.end());
  build(points.rbegin(), points.rend());
  out.vertices_ = std::move(hull);
  return out;
}

RationalPolygon RationalPolygon::point(Point2 p) { return from_points({std::move(p)}); }

RationalPolygon RationalPolygon::segment(Point2 a, Point2 b) {
  return from_points({std::move(a), std::move(b)});
}

int RationalPolygon::dimension() const {
  switch (vertices_.size()) {
    case 0:
      return -1;
    case 1:
      return 0;
    case 2:
      return 1;
    default:
      return 2;
  }
}

Rational RationalPolygon::area() const {
  if (vertices_.size() < 3) return 0;
  Rational twice = 0;
  for (size_t i = 0; i < vertices_.size(); ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % vertices_.size()];
    twice += cross2(a, b);
  }
  return twice / 2;
}

bool RationalPolygon::contains(const Point2& p) const {
  switch (dimension()) {
    case -1:
      return false;
    case 0:
      return vertices_[0] == p;
    case 1: {
      const Point2& a = vertices_[0];
      const Point2& b = vertices_[1];
      if (cross(a, b, p) != 0) return false;
      Point2 d = b - a, w = p - a;
      Rational t = d.x * w.x + d.y * w.y;
      return sign(t) >= 0 && t <= d.x * d.x + d.y * d.y;
    }
    default:
      for (size_t i = 0; i < vertices_.size(); ++i)
        if (sign(cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], p)) < 0)
          return false;
      return true;
  }
}

std::string RationalPolygon::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (i > 0) out += " ";
    out += "(" + okb::to_string(vertices_[i].x) + "," + okb::to_string(vertices_[i].y) + ")";
  }
  return out + "]";
}

namespace {

// Edge vectors of the (possibly degenerate) cycle, starting at the
// bottom-most/leftmost vertex so directions appear in increasing angle.
// A segment contributes its two opposite traversals.
struct EdgeWalk {
  Point2 start;
  std::vector<Point2> edges;
};

EdgeWalk edge_walk(const RationalPolygon& p) {
  const std::vector<Point2>& v = p.vertices();
  size_t n = v.size();
  size_t lowest = 0;
  for (size_t i = 1; i < n; ++i)
    if (v[i].y < v[lowest].y || (v[i].y == v[lowest].y && v[i].x < v[lowest].x)) lowest = i;
  EdgeWalk walk;
  walk.start = v[lowest];
  if (n == 1) return walk;
  size_t steps = n == 2 ? 2 : n;
  for (size_t k = 0; k < steps; ++k) {
    size_t i = (lowest + k) % n;
    size_t j = (lowest + k + 1) % n;
    walk.edges.push_back(v[j] - v[i]);
  }
  return walk;
}

// Strict "u turns earlier than v" on angles in [0, 2pi).
bool angle_less(const Point2& u, const Point2& v) {
  auto half = [](const Point2& w) {
    return (sign(w.y) > 0 || (sign(w.y) == 0 && sign(w.x) > 0)) ? 0 : 1;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return sign(cross2(u, v)) > 0;
}

}  // namespace

RationalPolygon minkowski_sum(const RationalPolygon& p, const RationalPolygon& q) {
  if (p.empty() || q.empty()) return RationalPolygon();
  if (p.dimension() == 0 || q.dimension() == 0) {
    const Point2& shift = (p.dimension() == 0 ? p : q).vertices()[0];
    const RationalPolygon& body = p.dimension() == 0 ? q : p;
    std::vector<Point2> moved;
    for (const Point2& v : body.vertices()) moved.push_back(v + shift);
    return RationalPolygon::from_points(std::move(moved));
  }

  EdgeWalk wp = edge_walk(p), wq = edge_walk(q);
  std::vector<Point2> trace{wp.start + wq.start};
  size_t i = 0, j = 0;
  while (i < wp.edges.size() || j < wq.edges.size()) {
    Point2 step;
    if (j == wq.edges.size() ||
        (i < wp.edges.size() && !angle_less(wq.edges[j], wp.edges[i])))
      step = wp.edges[i++];
    else
      step = wq.edges[j++];
    trace.push_back(trace.back() + step);
  }
  return RationalPolygon::from_points(std::move(trace));
}

RationalPolygon scale(const RationalPolygon& p, const Rational& s) {
  if (sign(s) < 0) throw PreconditionError("polygon scale factor must be >= 0");
  if (p.empty()) return p;
  if (sign(s) == 0) return RationalPolygon::point({0, 0});
  std::vector<Point2> scaled;
  for (const Point2& v : p.vertices()) scaled.push_back(s * v);
  return RationalPolygon::from_points(std::move(scaled));
}

namespace {

RationalPolygon segments_intersection(const Point2& a, const Point2& b, const Point2& c,
                                      const Point2& d) {
  Point2 r = b - a, s = d - c;
  Rational rxs = cross2(r, s);
  if (rxs != 0) {
    // Proper lines crossing: one parameter solve, then range checks.
    Point2 w = c - a;
    Rational t = cross2(w, s) / rxs;
    Rational u = cross2(w, r) / rxs;
    if (sign(t) < 0 || t > 1 || sign(u) < 0 || u > 1) return RationalPolygon();
    return RationalPolygon::point(a + t * r);
  }
  if (cross2(c - a, r) != 0) return RationalPolygon();  // parallel, apart
  // Collinear: overlap of parameter intervals along r.
  // The explicit return type matters: a deduced return would be a GMP
  // expression template referencing the dead local w.
  Rational rr = r.x * r.x + r.y * r.y;
  auto param = [&](const Point2& pt) -> Rational {
    Point2 w = pt - a;
    return (w.x * r.x + w.y * r.y) / rr;
  };
  Rational t0 = param(c), t1 = param(d);
  if (t0 > t1) std::swap(t0, t1);
  Rational lo = std::max(Rational(0), t0), hi = std::min(Rational(1), t1);
  if (lo > hi) return RationalPolygon();
  return RationalPolygon::from_points({a + lo * r, a + hi * r});
}

// Sutherland-Hodgman pass: keep the part of the subject cycle on the left of
// the directed clip edge (u, v).
std::vector<Point2> clip_by_edge(const std::vector<Point2>& subject, const Point2& u,
                                 const Point2& v) {
  std::vector<Point2> out;
  size_t n = subject.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2& s = subject[i];
    const Point2& e = subject[(i + 1) % n];
    Rational side_s = cross(u, v, s);
    Rational side_e = cross(u, v, e);
    auto edge_hit = [&]() {
      Rational t = side_s / (side_s - side_e);
      return s + t * (e - s);
    };
    if (sign(side_e) >= 0) {
      if (sign(side_s) < 0) out.push_back(edge_hit());
      out.push_back(e);
    } else if (sign(side_s) >= 0) {
      out.push_back(edge_hit());
    }
  }
  return out;
}

}  // namespace

RationalPolygon intersection(const RationalPolygon& p, const RationalPolygon& q) {
  if (p.empty() || q.empty()) return RationalPolygon();
  if (p.dimension() == 0) return q.contains(p.vertices()[0]) ? p : RationalPolygon();
  if (q.dimension() == 0) return p.contains(q.vertices()[0]) ? q : RationalPolygon();
  if (p.dimension() == 1 && q.dimension() == 1)
    return segments_intersection(p.vertices()[0], p.vertices()[1], q.vertices()[0],
                                 q.vertices()[1]);

  const RationalPolygon& clip = q.dimension() == 2 ? q : p;
  const RationalPolygon& subject = q.dimension() == 2 ? p : q;
  std::vector<Point2> work = subject.vertices();
  size_t edges = clip.vertices().size();
  for (size_t i = 0; i < edges && !work.empty(); ++i)
    work = clip_by_edge(work, clip.vertices()[i], clip.vertices()[(i + 1) % edges]);
  return RationalPolygon::from_points(std::move(work));
}

bool contains(const RationalPolygon& outer, const RationalPolygon& inner) {
  for (const Point2& v : inner.vertices())
    if (!outer.contains(v)) return false;
  return true;
}

Rational difference_area(const RationalPolygon& p, const RationalPolygon& q) {
  return p.area() - intersection(p, q).area();
}

namespace {

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string polygons_to_svg(const std::vector<LabeledPolygon>& items) {
  static const char* kPalette[] = {"#2f6fb6", "#c05131", "#3e8f4e",
                                   "#7b5ea7", "#b08a2e", "#3b8a8f"};
  constexpr int kColors = 6;
  const Rational kScale = 100;

  bool any = false;
  Rational minx, maxx, miny, maxy;
  for (const LabeledPolygon& item : items)
    for (const Point2& v : item.polygon.vertices()) {
      if (!any) {
        minx = maxx = v.x;
        miny = maxy = v.y;
        any = true;
      } else {
        minx = std::min(minx, v.x);
        maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y);
        maxy = std::max(maxy, v.y);
      }
    }
  if (!any) minx = maxx = miny = maxy = 0;

  Rational pad = std::max(maxx - minx, maxy - miny) / 20;
  if (sign(pad) == 0) pad = make_rational(1, 2);
  auto sx = [&](const Rational& x) { return decimal_string((x - minx + pad) * kScale, 6); };
  auto sy = [&](const Rational& y) { return decimal_string((maxy + pad - y) * kScale, 6); };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                    decimal_string((maxx - minx + 2 * pad) * kScale, 6) + " " +
                    decimal_string((maxy - miny + 2 * pad) * kScale, 6) + "\">\n";

  // Axes through the lattice origin, when it is in view.
  if (sign(minx - pad) <= 0 && sign(maxx + pad) >= 0)
    svg += "  <line x1=\"" + sx(0) + "\" y1=\"" + sy(miny - pad) + "\" x2=\"" + sx(0) +
           "\" y2=\"" + sy(maxy + pad) + "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  if (sign(miny - pad) <= 0 && sign(maxy + pad) >= 0)
    svg += "  <line x1=\"" + sx(minx - pad) + "\" y1=\"" + sy(0) + "\" x2=\"" +
           sx(maxx + pad) + "\" y2=\"" + sy(0) + "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

  for (size_t i = 0; i < items.size(); ++i) {
    const RationalPolygon& poly = items[i].polygon;
    const char* color = kPalette[i % kColors];
    const std::vector<Point2>& v = poly.vertices();
    switch (poly.dimension()) {
      case -1:
        break;
      case 0:
        svg += "  <circle cx=\"" + sx(v[0].x) + "\" cy=\"" + sy(v[0].y) +
               "\" r=\"4\" fill=\"" + color + "\"/>\n";
        break;
      case 1:
        svg += "  <path d=\"M " + sx(v[0].x) + " " + sy(v[0].y) + " L " + sx(v[1].x) + " " +
               sy(v[1].y) + "\" stroke=\"" + color +
               "\" stroke-width=\"3\" stroke-linecap=\"round\" fill=\"none\"/>\n";
        break;
      default: {
        std::string d;
        for (size_t k = 0; k < v.size(); ++k)
          d += (k == 0 ? "M " : " L ") + sx(v[k].x) + " " + sy(v[k].y);
        svg += "  <path d=\"" + d + " Z\" fill=\"" + color +
               "\" fill-opacity=\"0.3\" stroke=\"" + color +
               "\" stroke-width=\"2\" stroke-linejoin=\"round\"/>\n";
      }
    }
    if (!items[i].label.empty() && !v.empty())
      svg += "  <text x=\"" + sx(v[0].x) + "\" y=\"" + sy(v[0].y) +
             "\" dx=\"6\" dy=\"-6\" font-family=\"sans-serif\" font-size=\"14\" fill=\"" +
             color + "\">" + xml_escape(items[i].label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace okb
