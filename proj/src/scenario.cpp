#include "wavechan/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace wavechan {

namespace {
using nlohmann::json;
constexpr double kPi = 3.14159265358979323846264338;

[[noreturn]] void fail(const std::string& ctx, const std::string& msg) {
  throw std::invalid_argument("scenario: " + ctx + ": " + msg);
}

void require_keys(const json& j, const std::string& ctx,
                  const std::set<std::string>& allowed) {
  if (!j.is_object()) fail(ctx, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) fail(ctx, "unknown key \"" + it.key() + "\"");
}

double num(const json& j, const std::string& ctx, const char* key) {
  if (!j.contains(key)) fail(ctx, std::string("missing \"") + key + "\"");
  if (!j[key].is_number()) fail(ctx, std::string("\"") + key + "\" not a number");
  return j[key].get<double>();
}

double num_or(const json& j, const char* key, double def) {
  return j.contains(key) ? j[key].get<double>() : def;
}

Core parse_core(const json& j, const std::string& ctx) {
  if (!j.contains("core")) return Core::automatic;
  const std::string s = j["core"].get<std::string>();
  if (s == "auto") return Core::automatic;
  if (s == "source") return Core::source;
  if (s == "receiver") return Core::receiver;
  fail(ctx, "core must be auto|source|receiver");
}

RegionSpec parse_region(const json& j, const std::string& ctx) {
  require_keys(j, ctx,
               {"kind", "center", "radius", "inner_radius", "outer_radius", "side"});
  RegionSpec r;
  if (!j.contains("kind")) fail(ctx, "missing \"kind\"");
  r.kind = region_kind_from_string(j["kind"].get<std::string>());
  if (j.contains("center")) {
    const auto& c = j["center"];
    if (!c.is_array() || c.size() < 2 || c.size() > 3)
      fail(ctx, "center must be [x, y] or [x, y, z]");
    r.params.center = {c[0].get<double>(), c[1].get<double>(),
                       c.size() == 3 ? c[2].get<double>() : 0.0};
  }
  r.params.radius = num_or(j, "radius", 0.0);
  r.params.inner_radius = num_or(j, "inner_radius", 0.0);
  r.params.outer_radius = num_or(j, "outer_radius", 0.0);
  r.params.side = num_or(j, "side", 0.0);
  return r;
}
}  // namespace

std::vector<double> RadiusSweep::radii() const {
  std::vector<double> out;
  if (count < 2) {
    out.push_back(min);
    return out;
  }
  for (int i = 0; i < count; ++i)
    out.push_back(min + (max - min) * i / double(count - 1));
  return out;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("scenario: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("scenario: JSON parse error in " + path + ": " +
                                e.what());
  }
  require_keys(j, path,
               {"schema", "name", "dimension", "geometry", "max_order",
                "resolution", "seed", "thresholds", "snr_list",
                "n_antenna_list", "normalizations", "configurations",
                "monotonicity", "radius_sweep", "shell", "fill", "piestun",
                "emit_max_strength"});
  Scenario s;
  s.source_path = path;
  if (!j.contains("schema") || !j["schema"].is_number_integer() ||
      j["schema"].get<int>() != 1)
    fail(path, "requires \"schema\": 1");
  if (j.contains("name")) s.name = j["name"].get<std::string>();
  s.dimension = static_cast<int>(num(j, path, "dimension"));
  if (s.dimension != 2 && s.dimension != 3) fail(path, "dimension must be 2 or 3");

  if (j.contains("geometry")) {
    const auto& g = j["geometry"];
    const std::string ctx = path + ":geometry";
    if (s.dimension == 2) {
      require_keys(g, ctx, {"k", "R_s", "R_r", "d", "S_s", "S_r", "core"});
      BoundingGeometry2D b;
      b.k = num(g, ctx, "k");
      b.R_s = num(g, ctx, "R_s");
      b.R_r = num(g, ctx, "R_r");
      b.d = num(g, ctx, "d");
      b.S_s = num(g, ctx, "S_s");
      b.S_r = num(g, ctx, "S_r");
      b.core = parse_core(g, ctx);
      b.validate();
      s.geometry2d = b;
    } else {
      require_keys(g, ctx, {"k", "R_s", "R_r", "d", "V_s", "V_r", "core"});
      BoundingGeometry3D b;
      b.k = num(g, ctx, "k");
      b.R_s = num(g, ctx, "R_s");
      b.R_r = num(g, ctx, "R_r");
      b.d = num(g, ctx, "d");
      b.V_s = num(g, ctx, "V_s");
      b.V_r = num(g, ctx, "V_r");
      b.core = parse_core(g, ctx);
      b.validate();
      s.geometry3d = b;
    }
  }
  if (j.contains("max_order")) s.max_order = j["max_order"].get<int>();
  if (j.contains("resolution")) s.resolution = j["resolution"].get<double>();
  if (!(s.resolution > 0)) fail(path, "resolution must be positive");
  if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("thresholds"))
    s.thresholds = j["thresholds"].get<std::vector<double>>();
  for (double t : s.thresholds)
    if (!(t > 0 && t <= 1)) fail(path, "thresholds must lie in (0, 1]");
  if (j.contains("snr_list")) s.snr_list = j["snr_list"].get<std::vector<double>>();
  if (j.contains("n_antenna_list"))
    s.n_antenna_list = j["n_antenna_list"].get<std::vector<int>>();
  if (j.contains("normalizations")) {
    s.normalizations = j["normalizations"].get<std::vector<std::string>>();
    for (const auto& n : s.normalizations)
      if (n != "sum" && n != "max") fail(path, "normalizations: sum|max only");
  }
  if (j.contains("configurations")) {
    int idx = 0;
    for (const auto& c : j["configurations"]) {
      const std::string ctx = path + ":configurations[" + std::to_string(idx++) + "]";
      require_keys(c, ctx, {"name", "source", "receiver"});
      ConfigurationSpec spec;
      spec.name = c.contains("name") ? c["name"].get<std::string>()
                                     : "config" + std::to_string(idx);
      if (!c.contains("source") || !c.contains("receiver"))
        fail(ctx, "needs source and receiver regions");
      spec.source = parse_region(c["source"], ctx + ".source");
      spec.receiver = parse_region(c["receiver"], ctx + ".receiver");
      s.configurations.push_back(spec);
    }
  }
  if (j.contains("monotonicity")) {
    int idx = 0;
    for (const auto& c : j["monotonicity"]) {
      const std::string ctx = path + ":monotonicity[" + std::to_string(idx++) + "]";
      require_keys(c, ctx, {"name", "source", "receiver", "source_subset"});
      MonotonicitySpec spec;
      spec.name = c.contains("name") ? c["name"].get<std::string>()
                                     : "pair" + std::to_string(idx);
      spec.source = parse_region(c["source"], ctx + ".source");
      spec.receiver = parse_region(c["receiver"], ctx + ".receiver");
      if (!c.contains("source_subset")) fail(ctx, "needs source_subset");
      spec.source_subset = parse_region(c["source_subset"], ctx + ".source_subset");
      s.monotonicity.push_back(spec);
    }
  }
  if (j.contains("radius_sweep")) {
    const auto& r = j["radius_sweep"];
    const std::string ctx = path + ":radius_sweep";
    require_keys(r, ctx, {"min", "max", "count"});
    RadiusSweep sw;
    sw.min = num(r, ctx, "min");
    sw.max = num(r, ctx, "max");
    sw.count = static_cast<int>(num(r, ctx, "count"));
    if (!(sw.min > 0) || sw.max < sw.min || sw.count < 1)
      fail(ctx, "invalid sweep");
    s.radius_sweep = sw;
  }
  if (j.contains("shell")) {
    const auto& sh = j["shell"];
    const std::string ctx = path + ":shell";
    require_keys(sh, ctx, {"distance", "thickness"});
    s.shell.distance = num(sh, ctx, "distance");
    s.shell.thickness = num(sh, ctx, "thickness");
    if (!(s.shell.thickness > 0) || s.shell.distance < 0) fail(ctx, "invalid shell");
  }
  if (j.contains("fill")) {
    s.fill = j["fill"].get<double>();
    if (!(s.fill > 0 && s.fill <= 1)) fail(path, "fill must lie in (0, 1]");
  }
  if (j.contains("piestun")) s.piestun = j["piestun"].get<bool>();
  if (j.contains("emit_max_strength"))
    s.emit_max_strength = j["emit_max_strength"].get<bool>();
  return s;
}

BoundingGeometry3D sweep_geometry(const Scenario& scn, double R) {
  const double k = scn.geometry3d ? scn.geometry3d->k : 2.0 * kPi;
  BoundingGeometry3D g;
  g.k = k;
  g.R_s = R;
  g.R_r = scn.shell.thickness / 2.0;
  g.d = scn.shell.distance;
  g.core = Core::source;
  g.V_s = scn.fill * 4.0 * kPi / 3.0 * R * R * R;
  g.V_r = scn.fill * 4.0 * kPi / 3.0 *
          (std::pow(g.R_outer(), 3) - std::pow(g.R_inner(), 3));
  return g;
}

}  // namespace wavechan
