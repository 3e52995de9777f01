#include "logsig/winding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

namespace logsig {

namespace {

void require_closed_planar(const PiecewisePath& p) {
  if (p.dim() != 2) throw ShapeError("winding numbers need a planar path");
  if (!p.is_closed()) throw DomainError("winding numbers need a closed path");
}

double segment_distance(const Point& a, const Point& b, double x, double y) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((x - a[0]) * dx + (y - a[1]) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(a[0] + t * dx - x, a[1] + t * dy - y);
}

int angle_sum(const PiecewisePath& p, double x, double y) {
  double total = 0.0;
  for (int s = 0; s < p.segment_count(); ++s) {
    const double ax = p.vertex(s)[0] - x, ay = p.vertex(s)[1] - y;
    const double bx = p.vertex(s + 1)[0] - x, by = p.vertex(s + 1)[1] - y;
    total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

WindingGrid fill_grid(const PiecewisePath& p, const GridSpec& spec, bool parallel) {
  require_closed_planar(p);
  if (spec.nx < 1 || spec.ny < 1 || !(spec.x1 > spec.x0) || !(spec.y1 > spec.y0))
    throw ShapeError("grid needs positive resolution and a non-empty rectangle");
  WindingGrid g{spec, std::vector<int>(std::size_t(spec.nx) * spec.ny, 0),
                std::vector<unsigned char>(std::size_t(spec.nx) * spec.ny, 0)};
  const double radius = 2.0 * kOnTraceEps + 0.5 * std::hypot(spec.cell_x(), spec.cell_y());
#pragma omp parallel for schedule(static) if (parallel)
  for (int j = 0; j < spec.ny; ++j)
    for (int i = 0; i < spec.nx; ++i) {
      const std::size_t k = std::size_t(j) * spec.nx + i;
      const double x = spec.center_x(i), y = spec.center_y(j);
      if (distance_to_trace(p, x, y) <= radius)
        g.masked[k] = 1;
      else
        g.values[k] = angle_sum(p, x, y);
    }
  return g;
}

}  // namespace

double distance_to_trace(const PiecewisePath& p, double x, double y) {
  if (p.segment_count() == 0) return std::hypot(p.start()[0] - x, p.start()[1] - y);
  double d = std::numeric_limits<double>::infinity();
  for (int s = 0; s < p.segment_count(); ++s) d = std::min(d, segment_distance(p.vertex(s), p.vertex(s + 1), x, y));
  return d;
}

int winding_number(const PiecewisePath& p, double x, double y) {
  require_closed_planar(p);
  if (distance_to_trace(p, x, y) <= kOnTraceEps) throw DomainError("point lies on the trace");
  return angle_sum(p, x, y);
}

WindingGrid winding_field(const PiecewisePath& p, const GridSpec& spec) { return fill_grid(p, spec, true); }
WindingGrid winding_field_serial(const PiecewisePath& p, const GridSpec& spec) { return fill_grid(p, spec, false); }

double GaussianBump::value(double x, double y) const {
  const double dx = x - cx, dy = y - cy;
  return amp * std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
}
double GaussianBump::d_dx(double x, double y) const { return -(x - cx) / (sigma * sigma) * value(x, y); }
double GaussianBump::d_dy(double x, double y) const { return -(y - cy) / (sigma * sigma) * value(x, y); }

GreenResult green_residual(const PiecewisePath& p, const GaussianBump& f, const GaussianBump& g, const GridSpec& spec) {
  require_closed_planar(p);
  GreenResult r;
  const double cell = spec.cell_x() * spec.cell_y();
  double area = 0.0;
#pragma omp parallel for reduction(+ : area) schedule(static)
  for (int j = 0; j < spec.ny; ++j)
    for (int i = 0; i < spec.nx; ++i) {
      const double x = spec.center_x(i), y = spec.center_y(j);
      if (distance_to_trace(p, x, y) <= kOnTraceEps) continue;
      const int eta = angle_sum(p, x, y);
      if (eta != 0) area += eta * (f.d_dx(x, y) + g.d_dy(x, y)) * cell;
    }
  r.area = area;

  using Rule = boost::math::quadrature::gauss<double, 32>;
  for (int s = 0; s < p.segment_count(); ++s) {
    const Point a = p.vertex(s);
    const Point d = p.increment(s);
    auto integrand = [&](double u) {
      const double x = a[0] + u * d[0], y = a[1] + u * d[1];
      return f.value(x, y) * d[1] - g.value(x, y) * d[0];
    };
    auto panels = [&](int n) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += Rule::integrate(integrand, double(i) / n, double(i + 1) / n);
      return sum;
    };
    double prev = panels(1);
    for (int n = 2; n <= 1024; n *= 2) {
      const double cur = panels(n);
      const bool done = std::abs(cur - prev) < 1e-13;
      prev = cur;
      if (done) break;
    }
    r.line += prev;
  }
  r.residual = std::abs(r.area - r.line);
  return r;
}

WindAppReport windapp_diagnostic(const PiecewisePath& p, const std::vector<Point>& samples, int cells) {
  if (p.dim() != 2) throw ShapeError("planar path required");
  if (cells < 1) throw ShapeError("need at least one quadrature cell");
  WindAppReport rep;
  const Point& s = p.start();
  const Point& e = p.end();
  if (std::abs(s[0]) > kEndpointTol || std::abs(s[1]) > kEndpointTol || std::abs(e[0] - 1.0) > kEndpointTol ||
      std::abs(e[1]) > kEndpointTol) {
    rep.note = "endpoints must be (0,0) and (1,0)";
    return rep;
  }
  for (std::size_t k = 0; k + 1 < p.vertex_count(); ++k) {
    const double x = p.vertex(k)[0];
    if (x < -kEndpointTol || x >= 1.0 - kEndpointTol) {
      rep.note = "trace leaves the strip [0,1) x R before the end point";
      return rep;
    }
  }
  rep.applicable = true;
  const PiecewisePath closed = tilde(p);
  const GridSpec row_spec{0.0, 1.0, 0.0, 1.0, cells, 1};
  const double radius = 2.0 * kOnTraceEps + 0.5 / cells;
  for (const auto& pt : samples) {
    WindAppRow row;
    row.x = pt.at(0);
    row.y = pt.at(1);
    if (row.x <= 0.0 || row.x >= 1.0 || distance_to_trace(closed, row.x, row.y) <= radius) {
      row.skipped = true;
      rep.rows.push_back(row);
      continue;
    }
    row.eta = angle_sum(closed, row.x, row.y);
    double avg = 0.0;
    for (int i = 0; i < cells; ++i) {
      const double v = row_spec.center_x(i);
      if (distance_to_trace(closed, v, row.y) <= kOnTraceEps) continue;
      avg += angle_sum(closed, v, row.y);
    }
    row.row_average = avg / cells;
    row.residual = std::abs(row.eta - row.row_average);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace logsig
