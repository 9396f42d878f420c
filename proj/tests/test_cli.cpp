#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wavechan/bounds2d.hpp"
#include "wavechan/channel_metrics.hpp"
#include "wavechan/commands.hpp"
#include "wavechan/csv.hpp"
#include "wavechan/scenario.hpp"

using namespace wavechan;
namespace fs = std::filesystem;

#ifndef WAVECHAN_SCENARIO_DIR
#define WAVECHAN_SCENARIO_DIR "scenarios"
#endif

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846264338;

std::string scenario_path(const std::string& name) {
  return std::string(WAVECHAN_SCENARIO_DIR) + "/" + name + ".json";
}

fs::path fresh_dir(const std::string& tag) {
  auto p = fs::temp_directory_path() / ("wavechan_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(bool(in));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(cells);
  }
  return rows;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
}
}  // namespace

TEST_CASE("shipped scenarios parse and validate") {
  for (const char* name : {"fig2b", "fig2c", "fig3", "fig4", "smfig1", "smfig2"}) {
    auto scn = load_scenario(scenario_path(name));
    CHECK(scn.schema == 1);
    CHECK(scn.name == name);
  }
  auto s = load_scenario(scenario_path("fig2b"));
  CHECK(s.dimension == 2);
  REQUIRE(bool(s.geometry2d));
  CHECK(s.geometry2d->S_s == doctest::Approx(0.5));
  CHECK(s.configurations.size() == 2);
  CHECK(s.configurations[0].name == "square_square");
}

TEST_CASE("scenario parser rejects unknown keys and bad schema") {
  auto dir = fresh_dir("parse");
  write_file(dir / "bad1.json", R"({"schema": 1, "dimension": 2, "typo_key": 3})");
  CHECK_THROWS_WITH_AS(load_scenario((dir / "bad1.json").string()),
                       doctest::Contains("unknown key"), std::invalid_argument);
  write_file(dir / "bad2.json", R"({"schema": 2, "dimension": 2})");
  CHECK_THROWS_AS(load_scenario((dir / "bad2.json").string()),
                  std::invalid_argument);
  write_file(dir / "bad3.json", R"({"schema": 1, "dimension": 4})");
  CHECK_THROWS_AS(load_scenario((dir / "bad3.json").string()),
                  std::invalid_argument);
  write_file(dir / "bad4.json",
             R"({"schema": 1, "dimension": 2,
                 "geometry": {"k": 6.28, "R_s": 0.5, "R_r": 0.5, "d": 1.0,
                              "S_s": 0.5, "S_r": 0.5, "mystery": 1}})");
  CHECK_THROWS_WITH_AS(load_scenario((dir / "bad4.json").string()),
                       doctest::Contains("unknown key"), std::invalid_argument);
}

TEST_CASE("bounds command: passthrough values and round-trip") {
  auto dir = fresh_dir("bounds");
  auto scn = load_scenario(scenario_path("fig2b"));
  scn.configurations.clear();  // keep this test light
  scn.max_order = 20;
  CHECK(cmd_bounds(scn, dir.string()) == 0);
  auto rows = read_csv(dir / "bounds2d.csv");
  REQUIRE(rows.size() == 1 + 41);
  CHECK(rows[0][0] == "rank");
  // the black-line column reproduces relative_bound_2d exactly
  auto spec = bound_spectrum_2d(*scn.geometry2d, 20);
  for (std::size_t r = 0; r < 41; ++r) {
    const double parsed = std::stod(rows[1 + r][3]);
    CHECK(parsed == spec.entries[r].strength);  // bit-exact via %.17g
  }
  CHECK(fs::exists(dir / "metadata.json"));
  CHECK(slurp(dir / "metadata.json").find("d_max = d + 2*R_s + 2*R_r") !=
        std::string::npos);
  // no temp leftovers from atomic writes
  for (const auto& e : fs::directory_iterator(dir))
    CHECK(e.path().string().find(".tmp.") == std::string::npos);
}

TEST_CASE("bounds command is deterministic") {
  auto dir1 = fresh_dir("det1");
  auto dir2 = fresh_dir("det2");
  auto scn = load_scenario(scenario_path("fig2b"));
  scn.configurations.clear();
  scn.max_order = 12;
  cmd_bounds(scn, dir1.string());
  cmd_bounds(scn, dir2.string());
  CHECK(slurp(dir1 / "bounds2d.csv") == slurp(dir2 / "bounds2d.csv"));
}

TEST_CASE("count command: three threshold rows per radius, N_SH column") {
  auto dir = fresh_dir("count");
  auto scn = load_scenario(scenario_path("fig3"));
  RadiusSweep sweep;
  sweep.min = 1.0;
  sweep.max = 3.0;
  sweep.count = 3;
  scn.radius_sweep = sweep;
  CHECK(cmd_count(scn, dir.string()) == 0);
  auto rows = read_csv(dir / "count.csv");
  REQUIRE(rows.size() == 1 + 3 * 3);
  for (int i = 0; i < 3; ++i) {
    const double R = std::stod(rows[1 + 3 * i][0]);
    const double nsh = std::stod(rows[1 + 3 * i][3]);
    CHECK(nsh == doctest::Approx(2.0 * kTwoPi * kTwoPi * R * R).epsilon(1e-12));
  }
  CHECK(fs::exists(dir / "count_fit.json"));
  CHECK(slurp(dir / "count_fit.json").find("fit_exponent") != std::string::npos);
}

TEST_CASE("capacity command: low-SNR asymptote column and nonnegativity") {
  auto dir = fresh_dir("capacity");
  auto scn = load_scenario(scenario_path("fig4"));
  RadiusSweep sweep;
  sweep.min = 2.0;
  sweep.max = 4.0;
  sweep.count = 2;
  scn.radius_sweep = sweep;
  scn.snr_list = {1e-3};
  scn.n_antenna_list = {10};
  CHECK(cmd_capacity(scn, dir.string()) == 0);
  auto rows = read_csv(dir / "capacity.csv");
  REQUIRE(rows.size() == 1 + 2 * 2);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double cap = std::stod(rows[r][3]);
    CHECK(cap >= 0.0);
    if (rows[r][2] == "inf") {
      const double R = std::stod(rows[r][0]);
      const auto g = sweep_geometry(scn, R);
      const double expect = capacity_low_snr(g, 1e-3);
      CHECK(std::stod(rows[r][4]) == doctest::Approx(expect).epsilon(1e-15));
    }
  }
}

TEST_CASE("oracle command: spectra and monotonicity outputs") {
  auto dir = fresh_dir("oracle");
  Scenario scn;
  scn.dimension = 2;
  BoundingGeometry2D g;
  g.k = kTwoPi;
  g.R_s = g.R_r = 0.5;
  g.d = 1.0;
  g.S_s = g.S_r = 0.5;
  scn.geometry2d = g;
  scn.resolution = 1.0 / 14.0;
  ConfigurationSpec cfg;
  cfg.name = "squares";
  cfg.source.kind = RegionKind::square2d;
  cfg.source.params.side = 0.7;
  cfg.receiver.kind = RegionKind::square2d;
  cfg.receiver.params.side = 0.7;
  cfg.receiver.params.center = {2.0, 0, 0};
  scn.configurations.push_back(cfg);
  MonotonicitySpec mono;
  mono.name = "halved";
  mono.source = cfg.source;
  mono.receiver = cfg.receiver;
  mono.source_subset.kind = RegionKind::square2d;
  mono.source_subset.params.side = 2.0;
  mono.source_subset.params.center = {1.0, 0, 0};
  scn.monotonicity.push_back(mono);
  CHECK(cmd_oracle(scn, dir.string()) == 0);
  auto spec_rows = read_csv(dir / "spectrum_squares.csv");
  REQUIRE(spec_rows.size() > 2);
  // sum-normalized column sums to one
  double tot = 0;
  for (std::size_t r = 1; r < spec_rows.size(); ++r)
    tot += std::stod(spec_rows[r][3]);
  CHECK(tot == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::stod(spec_rows[1][4]) == doctest::Approx(1.0));  // max-normalized
  auto mono_rows = read_csv(dir / "monotonicity_halved.csv");
  REQUIRE(mono_rows.size() > 2);
  for (std::size_t r = 1; r < mono_rows.size(); ++r)
    CHECK(std::stod(mono_rows[r][3]) >= -1e-12);
  CHECK(slurp(dir / "metadata.json").find("\"pass\": true") != std::string::npos);
}

TEST_CASE("csv formatting survives a parse round-trip at 17 digits") {
  const double vals[] = {1.0 / 3.0, 2.718281828459045e-15, 6.02214076e23,
                         0.1, 1e-300};
  for (double v : vals) {
    const std::string s = CsvWriter::fmt(v);
    CHECK(std::stod(s) == v);
  }
}
