#include "logsig/path.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace logsig {

PiecewisePath::PiecewisePath(int dim, std::vector<Point> vertices, std::string name)
    : dim_(dim), name_(std::move(name)) {
  if (dim < 1) throw ShapeError("path dimension must be positive");
  if (vertices.empty()) throw ShapeError("a path needs at least one vertex");
  for (const auto& v : vertices) {
    if (static_cast<int>(v.size()) != dim) throw ShapeError("vertex has the wrong number of coordinates");
    for (double c : v)
      if (!std::isfinite(c)) throw ShapeError("non-finite vertex coordinate");
    if (vertices_.empty() || vertices_.back() != v) vertices_.push_back(v);
  }
}

Point PiecewisePath::increment(int segment) const {
  Point d(dim_);
  for (int i = 0; i < dim_; ++i) d[i] = vertices_[segment + 1][i] - vertices_[segment][i];
  return d;
}

Point PiecewisePath::point_at(PathTime t) const {
  if (segment_count() == 0) return vertices_.front();
  if (t.segment < 0 || t.segment >= segment_count() || t.fraction < 0.0 || t.fraction > 1.0)
    throw ShapeError("path time out of range");
  if (t.fraction == 0.0) return vertices_[t.segment];
  if (t.fraction == 1.0) return vertices_[t.segment + 1];
  Point p(dim_);
  for (int i = 0; i < dim_; ++i)
    p[i] = vertices_[t.segment][i] + t.fraction * (vertices_[t.segment + 1][i] - vertices_[t.segment][i]);
  return p;
}

bool PiecewisePath::is_closed(double tol) const {
  for (int i = 0; i < dim_; ++i)
    if (std::abs(start()[i] - end()[i]) > tol) return false;
  return true;
}

double PiecewisePath::total_variation() const {
  double v = 0.0;
  for (int s = 0; s < segment_count(); ++s)
    for (double c : increment(s)) v += std::abs(c);
  return v;
}

PathTime PiecewisePath::end_time() const {
  if (segment_count() == 0) return {0, 0.0};
  return {segment_count() - 1, 1.0};
}

bool time_less_equal(PathTime a, PathTime b) {
  // Segment boundaries have two spellings; compare by position along the vertex list.
  const double pa = a.segment + a.fraction;
  const double pb = b.segment + b.fraction;
  return pa <= pb;
}

PiecewisePath concat(const PiecewisePath& p, const PiecewisePath& q, bool translate) {
  if (p.dim() != q.dim()) throw ShapeError("concatenating paths of different dimension");
  std::vector<Point> verts = p.vertices();
  Point shift(p.dim(), 0.0);
  for (int i = 0; i < p.dim(); ++i) {
    const double gap = p.end()[i] - q.start()[i];
    if (translate)
      shift[i] = gap;
    else if (std::abs(gap) > kEndpointTol)
      throw ShapeError("endpoint mismatch in concatenation");
  }
  for (std::size_t k = 1; k < q.vertex_count(); ++k) {
    Point v = q.vertex(k);
    for (int i = 0; i < p.dim(); ++i) v[i] += shift[i];
    verts.push_back(std::move(v));
  }
  return PiecewisePath(p.dim(), std::move(verts), p.name());
}

PiecewisePath reverse(const PiecewisePath& p) {
  std::vector<Point> verts(p.vertices().rbegin(), p.vertices().rend());
  return PiecewisePath(p.dim(), std::move(verts), p.name());
}

PiecewisePath restrict_path(const PiecewisePath& p, PathTime s, PathTime t) {
  if (!time_less_equal(s, t)) throw ShapeError("interval start lies after its end");
  std::vector<Point> verts{p.point_at(s)};
  for (int i = s.segment + 1; i <= t.segment; ++i) verts.push_back(p.vertex(i));
  verts.push_back(p.point_at(t));
  return PiecewisePath(p.dim(), std::move(verts), p.name());
}

PiecewisePath normalize(const PiecewisePath& p, PathTime s, PathTime t) {
  if (p.dim() != 2) throw ShapeError("normalisation is defined for planar paths");
  PiecewisePath sub = restrict_path(p, s, t);
  const Point a = sub.start();
  const Point b = sub.end();
  const double cx = b[0] - a[0], cy = b[1] - a[1];
  const double r = std::hypot(cx, cy);
  if (r == 0.0) throw DomainError("degenerate chord: path returns to its starting point");
  const double c = cx / r, sn = cy / r;
  std::vector<Point> verts;
  for (const auto& v : sub.vertices()) {
    const double dx = v[0] - a[0], dy = v[1] - a[1];
    verts.push_back({(c * dx + sn * dy) / r, (-sn * dx + c * dy) / r});
  }
  verts.front() = {0.0, 0.0};
  verts.back() = {1.0, 0.0};
  return PiecewisePath(2, std::move(verts), p.name());
}

PiecewisePath normalize(const PiecewisePath& p) { return normalize(p, p.start_time(), p.end_time()); }

PiecewisePath tilde(const PiecewisePath& p) {
  if (p.dim() != 2) throw ShapeError("tilde is defined for planar paths");
  std::vector<Point> verts = p.vertices();
  verts.push_back(p.start());
  return PiecewisePath(2, std::move(verts), p.name());
}

PiecewisePath x_normalize(const PiecewisePath& p) {
  if (p.dim() != 2) throw ShapeError("planar path required");
  const double x0 = p.start()[0], y0 = p.start()[1];
  const double span = p.end()[0] - x0;
  if (span == 0.0) throw DomainError("x-increment vanishes");
  std::vector<Point> verts;
  for (const auto& v : p.vertices()) verts.push_back({(v[0] - x0) / span, v[1] - y0});
  verts.front() = {0.0, 0.0};
  verts.back()[0] = 1.0;
  return PiecewisePath(2, std::move(verts), p.name());
}

PiecewisePath line(const Point& v) {
  return PiecewisePath(static_cast<int>(v.size()), {Point(v.size(), 0.0), v}, "line");
}

PiecewisePath square_loop() {
  return PiecewisePath(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}, "square");
}

PiecewisePath figure_eight() {
  return PiecewisePath(2,
                       {{0, 0},
                        {0.5, 0},
                        {0.75, 0.25},
                        {0.5, 0.25},
                        {0.5, 0},
                        {0.25, -0.25},
                        {0.5, -0.25},
                        {0.5, 0},
                        {0.5, 0.25},
                        {0.75, 0.25},
                        {0.5, 0},
                        {0.5, -0.25},
                        {0.25, -0.25},
                        {0.5, 0},
                        {1, 0}},
                       "figure8");
}

PiecewisePath brownian_sample(int steps, std::uint64_t seed, int dim) {
  if (steps < 1) throw ShapeError("brownian_sample needs at least one step");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(steps));
  std::vector<Point> verts{Point(dim, 0.0)};
  for (int s = 0; s < steps; ++s) {
    Point next = verts.back();
    for (int i = 0; i < dim; ++i) next[i] += scale * gauss(rng);
    verts.push_back(std::move(next));
  }
  return PiecewisePath(dim, std::move(verts), "brownian");
}

PiecewisePath regular_polygon(int sides, double radius) {
  if (sides < 3) throw ShapeError("a polygon needs at least three sides");
  std::vector<Point> verts;
  for (int k = 0; k < sides; ++k) {
    const double th = 2.0 * std::numbers::pi * k / sides;
    verts.push_back({radius * std::cos(th), radius * std::sin(th)});
  }
  verts.push_back(verts.front());
  return PiecewisePath(2, std::move(verts), "polygon");
}

PiecewisePath conjugated_line(const PiecewisePath& alpha) {
  Point from = alpha.end();
  Point to = from;
  to[0] += 1.0;
  PiecewisePath mid(alpha.dim(), {from, to});
  PiecewisePath out = concat(concat(alpha, mid), reverse(alpha), true);
  out.set_name("conjugated-line");
  return out;
}

PiecewisePath random_normalized_path(int segments, std::uint64_t seed) {
  if (segments < 1) throw ShapeError("need at least one segment");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-0.25, 1.25), uy(-0.75, 0.75), uend(-0.5, 0.5);
  std::vector<Point> verts{{0.0, 0.0}};
  for (int s = 1; s < segments; ++s) verts.push_back({ux(rng), uy(rng)});
  verts.push_back({1.0, uend(rng)});
  return PiecewisePath(2, std::move(verts), "random");
}

}  // namespace logsig
