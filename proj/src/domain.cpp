#include "wavechan/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace wavechan {

namespace {
constexpr double kPi = 3.14159265358979323846264338;
}

double DiscretizedDomain::total_weight() const {
  double t = 0;
  for (double w : weights) t += w;
  return t;
}

RegionKind region_kind_from_string(const std::string& s) {
  if (s == "disk2d") return RegionKind::disk2d;
  if (s == "annulus2d") return RegionKind::annulus2d;
  if (s == "square2d") return RegionKind::square2d;
  if (s == "ball3d") return RegionKind::ball3d;
  if (s == "shell3d") return RegionKind::shell3d;
  if (s == "cube3d") return RegionKind::cube3d;
  throw std::invalid_argument("unknown region kind: " + s);
}

const char* to_string(RegionKind k) {
  switch (k) {
    case RegionKind::disk2d: return "disk2d";
    case RegionKind::annulus2d: return "annulus2d";
    case RegionKind::square2d: return "square2d";
    case RegionKind::ball3d: return "ball3d";
    case RegionKind::shell3d: return "shell3d";
    case RegionKind::cube3d: return "cube3d";
  }
  return "?";
}

int region_dimension(RegionKind kind) {
  switch (kind) {
    case RegionKind::disk2d:
    case RegionKind::annulus2d:
    case RegionKind::square2d:
      return 2;
    default:
      return 3;
  }
}

double region_measure(RegionKind kind, const RegionParams& p) {
  switch (kind) {
    case RegionKind::disk2d:
      return kPi * p.radius * p.radius;
    case RegionKind::annulus2d:
      return kPi * (p.outer_radius * p.outer_radius - p.inner_radius * p.inner_radius);
    case RegionKind::square2d:
      return p.side * p.side;
    case RegionKind::ball3d:
      return 4.0 * kPi / 3.0 * std::pow(p.radius, 3);
    case RegionKind::shell3d:
      return 4.0 * kPi / 3.0 *
             (std::pow(p.outer_radius, 3) - std::pow(p.inner_radius, 3));
    case RegionKind::cube3d:
      return std::pow(p.side, 3);
  }
  return 0;
}

bool region_contains(RegionKind kind, const RegionParams& p, const Point& x) {
  const double dx = x[0] - p.center[0];
  const double dy = x[1] - p.center[1];
  const double dz = x[2] - p.center[2];
  switch (kind) {
    case RegionKind::disk2d:
      return dx * dx + dy * dy <= p.radius * p.radius;
    case RegionKind::annulus2d: {
      const double r2 = dx * dx + dy * dy;
      return r2 >= p.inner_radius * p.inner_radius &&
             r2 <= p.outer_radius * p.outer_radius;
    }
    case RegionKind::square2d:
      return std::abs(dx) <= p.side / 2 && std::abs(dy) <= p.side / 2;
    case RegionKind::ball3d:
      return dx * dx + dy * dy + dz * dz <= p.radius * p.radius;
    case RegionKind::shell3d: {
      const double r2 = dx * dx + dy * dy + dz * dz;
      return r2 >= p.inner_radius * p.inner_radius &&
             r2 <= p.outer_radius * p.outer_radius;
    }
    case RegionKind::cube3d:
      return std::abs(dx) <= p.side / 2 && std::abs(dy) <= p.side / 2 &&
             std::abs(dz) <= p.side / 2;
  }
  return false;
}

namespace {
void validate_params(RegionKind kind, const RegionParams& p, double spacing) {
  if (!(spacing > 0)) throw std::invalid_argument("make_geometry: spacing <= 0");
  switch (kind) {
    case RegionKind::disk2d:
    case RegionKind::ball3d:
      if (!(p.radius > 0)) throw std::invalid_argument("make_geometry: radius <= 0");
      break;
    case RegionKind::annulus2d:
    case RegionKind::shell3d:
      if (!(p.outer_radius > p.inner_radius) || p.inner_radius < 0)
        throw std::invalid_argument("make_geometry: bad annulus radii");
      break;
    case RegionKind::square2d:
    case RegionKind::cube3d:
      if (!(p.side > 0)) throw std::invalid_argument("make_geometry: side <= 0");
      break;
  }
  if (region_measure(kind, p) <= 0)
    throw std::invalid_argument("make_geometry: degenerate region");
}
}  // namespace

DiscretizedDomain make_geometry(RegionKind kind, const RegionParams& p,
                                double spacing, const std::string& label) {
  validate_params(kind, p, spacing);
  const int dim = region_dimension(kind);
  DiscretizedDomain dom;
  dom.dimension = dim;
  dom.label = label.empty() ? to_string(kind) : label;

  double hx = spacing, hy = spacing, hz = spacing;
  double lox, hix, loy, hiy, loz = 0, hiz = 0;
  const bool boxy = (kind == RegionKind::square2d || kind == RegionKind::cube3d);
  if (boxy) {
    // exact tiling of the box
    const int n = std::max(1, static_cast<int>(std::lround(p.side / spacing)));
    hx = hy = hz = p.side / n;
    lox = p.center[0] - p.side / 2;
    hix = p.center[0] + p.side / 2;
    loy = p.center[1] - p.side / 2;
    hiy = p.center[1] + p.side / 2;
    loz = p.center[2] - p.side / 2;
    hiz = p.center[2] + p.side / 2;
  } else {
    const double r = (p.radius > 0) ? p.radius : p.outer_radius;
    lox = p.center[0] - r;
    hix = p.center[0] + r;
    loy = p.center[1] - r;
    hiy = p.center[1] + r;
    loz = p.center[2] - r;
    hiz = p.center[2] + r;
  }
  const double wcell = (dim == 2) ? hx * hy : hx * hy * hz;
  const int nx = std::max(1, static_cast<int>(std::ceil((hix - lox) / hx - 1e-9)));
  const int ny = std::max(1, static_cast<int>(std::ceil((hiy - loy) / hy - 1e-9)));
  const int nz = (dim == 2) ? 1
                            : std::max(1, static_cast<int>(std::ceil((hiz - loz) / hz - 1e-9)));
  // Boundary cells carry the volume of their inside part (subsampled) with
  // the point at the inside centroid; full interior cells keep the plain
  // cell-center rule. Boxes tile exactly and skip the fraction logic.
  constexpr int kSub = 9;
  for (int iz = 0; iz < nz; ++iz) {
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        const Point c{lox + (ix + 0.5) * hx, loy + (iy + 0.5) * hy,
                      (dim == 2) ? 0.0 : loz + (iz + 0.5) * hz};
        if (boxy) {
          dom.points.push_back(c);
          dom.weights.push_back(wcell);
          continue;
        }
        // quick full-cell test: all corners and the center inside
        bool all_in = region_contains(kind, p, c);
        for (int corner = 0; corner < (dim == 2 ? 4 : 8) && all_in; ++corner) {
          const Point q{c[0] + ((corner & 1) ? 0.5 : -0.5) * hx,
                        c[1] + ((corner & 2) ? 0.5 : -0.5) * hy,
                        (dim == 2) ? 0.0
                                   : c[2] + ((corner & 4) ? 0.5 : -0.5) * hz};
          all_in = region_contains(kind, p, q);
        }
        if (all_in) {
          dom.points.push_back(c);
          dom.weights.push_back(wcell);
          continue;
        }
        // partial cell: subsample
        int inside = 0;
        Point centroid{0, 0, 0};
        const int nzsub = (dim == 2) ? 1 : kSub;
        for (int sz = 0; sz < nzsub; ++sz) {
          for (int sy = 0; sy < kSub; ++sy) {
            for (int sx = 0; sx < kSub; ++sx) {
              const Point q{c[0] + ((sx + 0.5) / kSub - 0.5) * hx,
                            c[1] + ((sy + 0.5) / kSub - 0.5) * hy,
                            (dim == 2) ? 0.0
                                       : c[2] + ((sz + 0.5) / kSub - 0.5) * hz};
              if (region_contains(kind, p, q)) {
                ++inside;
                for (int t = 0; t < 3; ++t) centroid[t] += q[t];
              }
            }
          }
        }
        if (inside == 0) continue;
        const int total = kSub * kSub * nzsub;
        for (int t = 0; t < 3; ++t) centroid[t] /= inside;
        dom.points.push_back(centroid);
        dom.weights.push_back(wcell * inside / total);
      }
    }
  }
  if (dom.points.empty())
    throw std::invalid_argument("make_geometry: no grid points fall inside region");
  const double tw = dom.total_weight();
  const double measure = region_measure(kind, p);
  if (std::abs(tw - measure) > 0.01 * measure)
    throw std::runtime_error(
        "make_geometry: total weight deviates from the region measure by "
        "more than 1% at this spacing; refine the grid");
  return dom;
}

DiscretizedDomain subset_domain(const DiscretizedDomain& parent, RegionKind kind,
                                const RegionParams& p, const std::string& label) {
  if (region_dimension(kind) != parent.dimension)
    throw std::invalid_argument("subset_domain: dimension mismatch");
  DiscretizedDomain dom;
  dom.dimension = parent.dimension;
  dom.label = label.empty() ? (parent.label + "_subset") : label;
  for (std::size_t i = 0; i < parent.points.size(); ++i) {
    if (region_contains(kind, p, parent.points[i])) {
      dom.points.push_back(parent.points[i]);
      dom.weights.push_back(parent.weights[i]);
    }
  }
  if (dom.points.empty())
    throw std::invalid_argument("subset_domain: empty subset");
  return dom;
}

}  // namespace wavechan
