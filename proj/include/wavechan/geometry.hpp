#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wavechan {

// Which communication domain sits in the core of the bounding volume.
// Auto picks the smaller radius (the tighter bound when both domains are
// ball-bounded); shell-like domains force an explicit choice because only
// one core-shell construction contains them.
enum class Core { automatic, source, receiver };

inline const char* to_string(Core c) {
  switch (c) {
    case Core::source: return "source";
    case Core::receiver: return "receiver";
    default: return "auto";
  }
}

namespace detail {
inline double pick_core_radius(Core core, double rs, double rr) {
  if (core == Core::source) return rs;
  if (core == Core::receiver) return rr;
  return rs < rr ? rs : rr;
}
}  // namespace detail

struct BoundingGeometry2D {
  double k = 0;    // free-space wavenumber
  double R_s = 0;  // source bounding radius
  double R_r = 0;  // receiver bounding radius
  double d = 0;    // minimum separation
  double S_s = 0;  // source area
  double S_r = 0;  // receiver area
  Core core = Core::automatic;

  double core_radius() const { return detail::pick_core_radius(core, R_s, R_r); }
  double other_radius() const { return R_s + R_r - core_radius(); }
  double R_min() const { return R_s < R_r ? R_s : R_r; }
  double R_inner() const { return d + core_radius(); }
  double R_outer() const { return R_inner() + 2.0 * other_radius(); }
  double d_max() const { return d + 2.0 * R_s + 2.0 * R_r; }

  void validate() const {
    if (!(k > 0) || !(R_s > 0) || !(R_r > 0) || !(d >= 0) || !(S_s > 0) ||
        !(S_r > 0))
      throw std::invalid_argument("BoundingGeometry2D: invalid field");
  }
  // Fill-fraction consistency; violations are reported, not fatal.
  std::vector<std::string> warnings() const;
};

struct BoundingGeometry3D {
  double k = 0;
  double R_s = 0;
  double R_r = 0;
  double d = 0;
  double V_s = 0;
  double V_r = 0;
  Core core = Core::automatic;

  double core_radius() const { return detail::pick_core_radius(core, R_s, R_r); }
  double other_radius() const { return R_s + R_r - core_radius(); }
  double R_min() const { return R_s < R_r ? R_s : R_r; }
  double R_sphere() const { return core_radius(); }
  double R_inner() const { return d + core_radius(); }
  double R_outer() const { return R_inner() + 2.0 * other_radius(); }
  double d_max() const { return d + 2.0 * R_s + 2.0 * R_r; }

  void validate() const {
    if (!(k > 0) || !(R_s > 0) || !(R_r > 0) || !(d >= 0) || !(V_s > 0) ||
        !(V_r > 0))
      throw std::invalid_argument("BoundingGeometry3D: invalid field");
  }
  std::vector<std::string> warnings() const;
};

}  // namespace wavechan
