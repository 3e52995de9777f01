#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logsig/errors.hpp"

namespace logsig {

using Point = std::vector<double>;

struct PathTime {
  int segment = 0;
  double fraction = 0.0;
};

// Real coordinates only; see the README for the rationale.
class PiecewisePath {
 public:
  PiecewisePath() = default;
  PiecewisePath(int dim, std::vector<Point> vertices, std::string name = {});

  int dim() const { return dim_; }
  int segment_count() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  const Point& start() const { return vertices_.front(); }
  const Point& end() const { return vertices_.back(); }
  Point increment(int segment) const;
  Point point_at(PathTime t) const;

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  bool is_closed(double tol = 1e-12) const;
  // Sum over segments of the l1 length of each increment.
  double total_variation() const;

  PathTime start_time() const { return {0, 0.0}; }
  PathTime end_time() const;

 private:
  int dim_ = 0;
  std::vector<Point> vertices_;
  std::string name_;
};

inline constexpr double kEndpointTol = 1e-12;

PiecewisePath concat(const PiecewisePath& p, const PiecewisePath& q, bool translate = false);
PiecewisePath reverse(const PiecewisePath& p);
// Sub-path between two times, s no later than t.
PiecewisePath restrict_path(const PiecewisePath& p, PathTime s, PathTime t);
// Rotate and scale the restriction to [s, t] so it runs from (0,0) to (1,0).
PiecewisePath normalize(const PiecewisePath& p, PathTime s, PathTime t);
PiecewisePath normalize(const PiecewisePath& p);
// Append the chord from the end back to the start.
PiecewisePath tilde(const PiecewisePath& p);
// Affine change x -> (x - x0)/(x1 - x0), y -> y - y0 (planar); requires x1 != x0.
PiecewisePath x_normalize(const PiecewisePath& p);

bool time_less_equal(PathTime a, PathTime b);

PiecewisePath line(const Point& v);
PiecewisePath square_loop();
PiecewisePath figure_eight();
PiecewisePath brownian_sample(int steps, std::uint64_t seed, int dim = 2);
PiecewisePath regular_polygon(int sides, double radius = 1.0);
// alpha, then the unit step e1, then alpha run backwards (translated).
PiecewisePath conjugated_line(const PiecewisePath& alpha);
// Planar path from (0,0) to (1, y_end) through `segments - 1` random interior vertices.
PiecewisePath random_normalized_path(int segments, std::uint64_t seed);

}  // namespace logsig
