#pragma once

#include <array>
#include <string>
#include <vector>

namespace wavechan {

using Point = std::array<double, 3>;  // z = 0 in two dimensions

// Uniform-grid point cloud with per-point quadrature weights.
struct DiscretizedDomain {
  int dimension = 2;
  std::vector<Point> points;
  std::vector<double> weights;
  std::string label;

  double total_weight() const;
  std::size_t size() const { return points.size(); }
};

enum class RegionKind { disk2d, annulus2d, square2d, ball3d, shell3d, cube3d };

RegionKind region_kind_from_string(const std::string& s);
const char* to_string(RegionKind k);

struct RegionParams {
  Point center{0, 0, 0};
  double radius = 0;        // disk2d, ball3d
  double inner_radius = 0;  // annulus2d, shell3d
  double outer_radius = 0;
  double side = 0;          // square2d, cube3d
};

int region_dimension(RegionKind kind);
double region_measure(RegionKind kind, const RegionParams& p);
bool region_contains(RegionKind kind, const RegionParams& p, const Point& x);

// Cell-centered uniform Cartesian grid clipped to the region. Squares and
// cubes tile exactly; curved regions keep raw cell weights, validated to
// reproduce the analytic measure within 1%.
DiscretizedDomain make_geometry(RegionKind kind, const RegionParams& p,
                                double spacing, const std::string& label = "");

// Literal subset of `parent` (same points, same weights) clipped to another
// region. Basis for domain-monotonicity experiments.
DiscretizedDomain subset_domain(const DiscretizedDomain& parent,
                                RegionKind kind, const RegionParams& p,
                                const std::string& label = "");

}  // namespace wavechan
