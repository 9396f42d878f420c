#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wavechan/domain.hpp"
#include "wavechan/geometry.hpp"

namespace wavechan {

struct RegionSpec {
  RegionKind kind = RegionKind::square2d;
  RegionParams params;
};

struct ConfigurationSpec {
  std::string name;
  RegionSpec source;
  RegionSpec receiver;
};

struct MonotonicitySpec {
  std::string name;
  RegionSpec source;
  RegionSpec receiver;
  RegionSpec source_subset;  // clip region defining the smaller source
};

struct RadiusSweep {
  double min = 1.0;
  double max = 10.0;
  int count = 10;
  std::vector<double> radii() const;
};

struct ShellSpec {
  double distance = 10.0;   // minimum separation from the core domain
  double thickness = 1.0;   // radial extent of the receiver shell
};

// Parsed, validated scenario file. Unknown keys are rejected.
struct Scenario {
  int schema = 1;
  std::string name;
  int dimension = 2;
  std::optional<BoundingGeometry2D> geometry2d;
  std::optional<BoundingGeometry3D> geometry3d;
  int max_order = -1;  // q_max / n_max; -1 = module default
  double resolution = 0.025;
  std::uint64_t seed = 1;
  std::vector<double> thresholds;
  std::vector<double> snr_list;
  std::vector<int> n_antenna_list;
  std::vector<std::string> normalizations{"sum"};
  std::vector<ConfigurationSpec> configurations;
  std::vector<MonotonicitySpec> monotonicity;
  std::optional<RadiusSweep> radius_sweep;
  ShellSpec shell;
  double fill = 0.5;
  bool piestun = false;
  bool emit_max_strength = false;
  std::string source_path;
};

Scenario load_scenario(const std::string& path);

// Sweep geometry for the count/capacity experiments: bounding sphere of
// radius R around the core domain, receiver shell `distance` away with the
// given thickness, both at `fill` of their bounding volumes.
BoundingGeometry3D sweep_geometry(const Scenario& scn, double R);

}  // namespace wavechan
