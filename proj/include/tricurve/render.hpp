#pragma once

// Figure output. Floating point is confined to this header: the triangle is
// embedded in the plane, curve zero sets are traced by marching squares on
// a sign grid, and the result is written as SVG or CSV samples.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tricurve/kernel.hpp"
#include "tricurve/poly.hpp"
#include "tricurve/report.hpp"

namespace tricurve::render {

struct RenderConfig {
  int width = 800;
  int height = 800;
  int grid = 256;
  double margin = 0.08;
  bool labels = true;

  void validate() const {
    if (grid < 16) throw std::invalid_argument("grid must be at least 16");
    if (width < 64 || height < 64) throw std::invalid_argument("width and height must be at least 64");
    if (!(margin >= 0.0 && margin < 1.0)) throw std::invalid_argument("margin must be in [0, 1)");
  }
};

struct Pt {
  double x = 0, y = 0;
};

/// A = (0,0), B = (c,0), C above the x-axis.
class Embedding {
 public:
  explicit Embedding(const RefTriangle& t) {
    const double a2 = t.a2().get_d(), b2 = t.b2().get_d(), c = t.c().get_d();
    const double cx = (b2 + c * c - a2) / (2 * c);
    v_ = {Pt{0, 0}, Pt{c, 0}, Pt{cx, std::sqrt(std::max(0.0, b2 - cx * cx))}};
    area2_ = cross(v_[0], v_[1], v_[2]);
    const Vec3 o = normalize_affine(eval_center(t, CenterId::X3));
    center_ = combine(o[0].get_d(), o[1].get_d(), o[2].get_d());
    radius_ = std::hypot(center_.x - v_[0].x, center_.y - v_[0].y);
  }

  const Pt& vertex(std::size_t i) const { return v_[i]; }
  const Pt& circumcenter() const { return center_; }
  double circumradius() const { return radius_; }

  /// nullopt for points at infinity.
  std::optional<Pt> place(const HomPoint& p) const {
    if (!is_finite(p)) return std::nullopt;
    const Vec3 n = normalize_affine(p);
    return combine(n[0].get_d(), n[1].get_d(), n[2].get_d());
  }

  /// Normalized barycentrics of a plane point.
  std::array<double, 3> barycentric(const Pt& p) const {
    return {cross(p, v_[1], v_[2]) / area2_, cross(v_[0], p, v_[2]) / area2_, cross(v_[0], v_[1], p) / area2_};
  }

 private:
  static double cross(const Pt& a, const Pt& b, const Pt& c) {
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  }
  Pt combine(double u, double v, double w) const {
    return {u * v_[0].x + v * v_[1].x + w * v_[2].x, u * v_[0].y + v * v_[1].y + w * v_[2].y};
  }

  std::array<Pt, 3> v_;
  double area2_ = 1;
  Pt center_;
  double radius_ = 0;
};

/// Polynomial in barycentrics, evaluated in the Cartesian chart. The
/// coefficients are scaled so the largest has magnitude one.
class ChartFunction {
 public:
  ChartFunction(const Poly& f, const Embedding& e) : e_(&e) {
    Rational big = 0;
    for (const auto& [ex, c] : f.terms()) big = std::max<Rational>(big, abs(c));
    for (const auto& [ex, c] : f.terms()) {
      const Rational scaled = c / big;
      terms_.push_back({ex, scaled.get_d()});
    }
  }

  double operator()(const Pt& p) const {
    const auto b = e_->barycentric(p);
    double acc = 0;
    for (const auto& [ex, c] : terms_) acc += c * std::pow(b[0], ex[0]) * std::pow(b[1], ex[1]) * std::pow(b[2], ex[2]);
    return acc;
  }

 private:
  const Embedding* e_;
  std::vector<std::pair<Exponent, double>> terms_;
};

struct Viewport {
  double xmin, xmax, ymin, ymax;
};

/// Bounding box of the triangle, its circumcircle and the finite markers,
/// widened by `margin` on every side.
inline Viewport viewport_for(const Embedding& e, const std::vector<Pt>& markers, double margin) {
  const Pt o = e.circumcenter();
  const double r = e.circumradius();
  Viewport v{o.x - r, o.x + r, o.y - r, o.y + r};
  auto include = [&](const Pt& p) {
    v.xmin = std::min(v.xmin, p.x);
    v.xmax = std::max(v.xmax, p.x);
    v.ymin = std::min(v.ymin, p.y);
    v.ymax = std::max(v.ymax, p.y);
  };
  for (std::size_t i = 0; i < 3; ++i) include(e.vertex(i));
  for (const auto& p : markers) include(p);
  const double side = std::max(v.xmax - v.xmin, v.ymax - v.ymin);
  const double cx = (v.xmin + v.xmax) / 2, cy = (v.ymin + v.ymax) / 2;
  const double half = side / 2 / (1 - margin);
  return {cx - half, cx + half, cy - half, cy + half};
}

struct Trace {
  std::string label;
  std::vector<std::vector<Pt>> chains;
  std::size_t closed = 0;  // number of closed loops among the chains
};

namespace detail {

inline Pt lerp(const Pt& a, const Pt& b, double t) { return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t}; }

/// Zero of f on the segment [a, b] given a sign change, by bisection.
inline Pt refine(const ChartFunction& f, Pt a, Pt b, double fa) {
  for (int i = 0; i < 80; ++i) {
    const Pt m = lerp(a, b, 0.5);
    const double fm = f(m);
    if (fm == 0) return m;
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return lerp(a, b, 0.5);
}

}  // namespace detail

/// Marching squares on a grid x grid sign lattice over the viewport.
inline Trace trace_curve(const std::string& label, const Poly& form, const Embedding& e, const Viewport& v, int grid) {
  const ChartFunction f(form, e);
  const int n = grid;
  auto node = [&](int i, int j) {
    return Pt{v.xmin + (v.xmax - v.xmin) * i / n, v.ymin + (v.ymax - v.ymin) * j / n};
  };
  std::vector<double> val(static_cast<std::size_t>((n + 1) * (n + 1)));
  auto at = [&](int i, int j) -> double& { return val[static_cast<std::size_t>(j * (n + 1) + i)]; };
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      double x = f(node(i, j));
      // Exact zeros on lattice nodes are nudged so every edge has a strict sign.
      if (x == 0) x = std::numeric_limits<double>::min();
      at(i, j) = x;
    }
  }

  // Edge ids: horizontal edges (i,j)-(i+1,j) and vertical edges (i,j)-(i,j+1).
  auto hedge = [&](int i, int j) { return static_cast<long>(j) * n + i; };
  auto vedge = [&](int i, int j) { return static_cast<long>(n) * (n + 1) + static_cast<long>(j) * (n + 1) + i; };
  std::map<long, Pt> crossings;
  auto crossing = [&](long id, int i0, int j0, int i1, int j1) {
    auto it = crossings.find(id);
    if (it != crossings.end()) return id;
    crossings[id] = detail::refine(f, node(i0, j0), node(i1, j1), at(i0, j0));
    return id;
  };

  std::vector<std::pair<long, long>> segments;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const bool s0 = at(i, j) > 0, s1 = at(i + 1, j) > 0, s2 = at(i + 1, j + 1) > 0, s3 = at(i, j + 1) > 0;
      std::vector<long> ids;  // crossings in order bottom, right, top, left
      if (s0 != s1) ids.push_back(crossing(hedge(i, j), i, j, i + 1, j));
      if (s1 != s2) ids.push_back(crossing(vedge(i + 1, j), i + 1, j, i + 1, j + 1));
      if (s3 != s2) ids.push_back(crossing(hedge(i, j + 1), i, j + 1, i + 1, j + 1));
      if (s0 != s3) ids.push_back(crossing(vedge(i, j), i, j, i, j + 1));
      if (ids.size() == 2) {
        segments.push_back({ids[0], ids[1]});
      } else if (ids.size() == 4) {
        // Saddle: the center value decides which corners are joined.
        const Pt lo = node(i, j), hi = node(i + 1, j + 1);
        const Pt c{(lo.x + hi.x) / 2, (lo.y + hi.y) / 2};
        const bool sc = f(c) > 0;
        if (sc == s0) {
          segments.push_back({ids[0], ids[1]});
          segments.push_back({ids[2], ids[3]});
        } else {
          segments.push_back({ids[0], ids[3]});
          segments.push_back({ids[1], ids[2]});
        }
      }
    }
  }

  // Stitch segments into chains.
  std::map<long, std::vector<std::size_t>> incident;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    incident[segments[k].first].push_back(k);
    incident[segments[k].second].push_back(k);
  }
  std::vector<bool> used(segments.size(), false);
  Trace out;
  out.label = label;
  auto walk = [&](long start, std::size_t first) {
    std::vector<Pt> chain{crossings[start]};
    long cur = start;
    std::size_t seg = first;
    while (true) {
      used[seg] = true;
      const long next = segments[seg].first == cur ? segments[seg].second : segments[seg].first;
      chain.push_back(crossings[next]);
      cur = next;
      if (cur == start) {
        ++out.closed;
        break;
      }
      std::size_t follow = segments.size();
      for (auto s : incident[cur]) {
        if (!used[s]) {
          follow = s;
          break;
        }
      }
      if (follow == segments.size()) break;
      seg = follow;
    }
    out.chains.push_back(std::move(chain));
  };
  // Open chains first, starting from their free ends.
  for (const auto& [id, segs] : incident) {
    if (segs.size() == 1 && !used[segs[0]]) walk(id, segs[0]);
  }
  for (std::size_t k = 0; k < segments.size(); ++k) {
    if (!used[k]) walk(segments[k].first, k);
  }
  return out;
}

struct Rendered {
  Viewport viewport;
  std::vector<Trace> traces;
  std::vector<std::pair<std::string, Pt>> markers;
  std::vector<std::string> warnings;
};

inline Rendered render_figure(const Figure& fig, const RefTriangle& t, const RenderConfig& cfg) {
  cfg.validate();
  const Embedding e(t);
  Rendered r;
  std::vector<Pt> pts;
  for (const auto& p : fig.points) {
    if (auto q = e.place(p.point)) {
      r.markers.push_back({p.label, *q});
      pts.push_back(*q);
    } else {
      r.warnings.push_back(p.label + " is at infinity and is not drawn");
    }
  }
  r.viewport = viewport_for(e, pts, cfg.margin);
  for (const auto& c : fig.curves) {
    Trace tr = trace_curve(c.label, c.form, e, r.viewport, cfg.grid);
    if (tr.chains.empty()) r.warnings.push_back("DegenerateRender: " + c.label + " has no real points in the viewport");
    r.traces.push_back(std::move(tr));
  }
  return r;
}

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += ch;
    }
  }
  return out;
}

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace detail

inline std::string to_svg(const Rendered& r, const RefTriangle& t, const RenderConfig& cfg) {
  const Embedding e(t);
  const Viewport& v = r.viewport;
  const double sx = cfg.width / (v.xmax - v.xmin), sy = cfg.height / (v.ymax - v.ymin);
  const double s = std::min(sx, sy);
  auto X = [&](const Pt& p) { return detail::num((p.x - v.xmin) * s); };
  auto Y = [&](const Pt& p) { return detail::num(cfg.height - (p.y - v.ymin) * s); };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.width << "\" height=\"" << cfg.height
    << "\" viewBox=\"0 0 " << cfg.width << " " << cfg.height << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<polygon class=\"triangle\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < 3; ++i) o << (i ? " " : "") << X(e.vertex(i)) << "," << Y(e.vertex(i));
  o << "\"/>\n";
  for (std::size_t k = 0; k < r.traces.size(); ++k) {
    const auto& tr = r.traces[k];
    o << "<g class=\"curve\" data-label=\"" << detail::xml_escape(tr.label) << "\" stroke=\"" << palette[k % 5]
      << "\" fill=\"none\" stroke-width=\"1.2\">\n";
    for (const auto& chain : tr.chains) {
      o << "<polyline points=\"";
      for (std::size_t i = 0; i < chain.size(); ++i) o << (i ? " " : "") << X(chain[i]) << "," << Y(chain[i]);
      o << "\"/>\n";
    }
    o << "</g>\n";
  }
  static const char* names[] = {"A", "B", "C"};
  for (std::size_t i = 0; i < 3; ++i) {
    o << "<text class=\"vertex\" x=\"" << X(e.vertex(i)) << "\" y=\"" << Y(e.vertex(i)) << "\" font-size=\"12\" dx=\"4\" dy=\"-4\">"
      << names[i] << "</text>\n";
  }
  for (const auto& [label, p] : r.markers) {
    o << "<circle class=\"marker\" data-label=\"" << detail::xml_escape(label) << "\" cx=\"" << X(p) << "\" cy=\"" << Y(p)
      << "\" r=\"3\" fill=\"black\"/>\n";
    if (cfg.labels) {
      o << "<text class=\"label\" x=\"" << X(p) << "\" y=\"" << Y(p) << "\" font-size=\"11\" dx=\"5\" dy=\"-5\">"
        << detail::xml_escape(label) << "</text>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

/// One row per traced sample: curve label, x, y.
inline std::string to_csv(const Rendered& r) {
  std::ostringstream o;
  o << "curve,x,y\n";
  char buf[64];
  for (const auto& tr : r.traces) {
    for (const auto& chain : tr.chains) {
      for (const auto& p : chain) {
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g\n", p.x, p.y);
        o << tr.label << buf;
      }
    }
  }
  return o.str();
}

}  // namespace tricurve::render
