#pragma once

#include <string>
#include <vector>

#include "logsig/path.hpp"

namespace logsig {

inline constexpr double kOnTraceEps = 1e-9;

double distance_to_trace(const PiecewisePath& p, double x, double y);
// Closed planar path; throws DomainError within kOnTraceEps of the trace.
int winding_number(const PiecewisePath& p, double x, double y);

struct GridSpec {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  int nx = 1, ny = 1;
  double cell_x() const { return (x1 - x0) / nx; }
  double cell_y() const { return (y1 - y0) / ny; }
  double center_x(int i) const { return x0 + (i + 0.5) * cell_x(); }
  double center_y(int j) const { return y0 + (j + 0.5) * cell_y(); }
};

// Values at cell centers, row-major in y (index j * nx + i). Masked cells hold 0.
struct WindingGrid {
  GridSpec spec;
  std::vector<int> values;
  std::vector<unsigned char> masked;
  int at(int i, int j) const { return values[static_cast<std::size_t>(j) * spec.nx + i]; }
  bool is_masked(int i, int j) const { return masked[static_cast<std::size_t>(j) * spec.nx + i] != 0; }
};

WindingGrid winding_field(const PiecewisePath& p, const GridSpec& spec);
WindingGrid winding_field_serial(const PiecewisePath& p, const GridSpec& spec);

// amp * exp(-|z - c|^2 / (2 sigma^2))
struct GaussianBump {
  double cx = 0, cy = 0, sigma = 1, amp = 1;
  double value(double x, double y) const;
  double d_dx(double x, double y) const;
  double d_dy(double x, double y) const;
};

struct GreenResult {
  double area = 0.0;  // int int (df/dx + dg/dy) eta
  double line = 0.0;  // closed integral of f dy - g dx
  double residual = 0.0;
};
GreenResult green_residual(const PiecewisePath& p, const GaussianBump& f, const GaussianBump& g, const GridSpec& spec);

struct WindAppRow {
  double x = 0, y = 0;
  bool skipped = false;  // sample on or near the trace
  int eta = 0;
  double row_average = 0.0;
  double residual = 0.0;
};
struct WindAppReport {
  bool applicable = false;
  std::string note;
  std::vector<WindAppRow> rows;
};
// Hypotheses checked: endpoints (0,0) and (1,0), trace in [0,1] x R meeting x = 1 only at the end.
WindAppReport windapp_diagnostic(const PiecewisePath& p, const std::vector<Point>& samples, int cells = 2000);

}  // namespace logsig
