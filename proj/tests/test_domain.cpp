#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "wavechan/domain.hpp"

using namespace wavechan;

TEST_CASE("region bookkeeping") {
  CHECK(region_kind_from_string("disk2d") == RegionKind::disk2d);
  CHECK(region_kind_from_string("cube3d") == RegionKind::cube3d);
  CHECK_THROWS_AS(region_kind_from_string("pentagon"), std::invalid_argument);
  CHECK(region_dimension(RegionKind::annulus2d) == 2);
  CHECK(region_dimension(RegionKind::shell3d) == 3);

  RegionParams p;
  p.radius = 2.0;
  CHECK(region_measure(RegionKind::disk2d, p) == doctest::Approx(4.0 * M_PI));
  CHECK(region_contains(RegionKind::disk2d, p, {1.9, 0, 0}));
  CHECK(!region_contains(RegionKind::disk2d, p, {2.1, 0, 0}));
}

TEST_CASE("make_geometry rejects degenerate input") {
  RegionParams p;
  p.radius = 1.0;
  CHECK_THROWS_AS(make_geometry(RegionKind::disk2d, p, 0.0), std::invalid_argument);
  RegionParams bad;
  bad.inner_radius = 1.0;
  bad.outer_radius = 0.5;
  CHECK_THROWS_AS(make_geometry(RegionKind::annulus2d, bad, 0.05),
                  std::invalid_argument);
  RegionParams zero;
  zero.side = 0.0;
  CHECK_THROWS_AS(make_geometry(RegionKind::square2d, zero, 0.05),
                  std::invalid_argument);
}

TEST_CASE("offset regions sit where requested") {
  RegionParams p;
  p.side = 0.4;
  p.center = {2.0, -1.0, 0};
  auto dom = make_geometry(RegionKind::square2d, p, 0.05);
  for (const auto& x : dom.points) {
    CHECK(std::abs(x[0] - 2.0) <= 0.2 + 1e-12);
    CHECK(std::abs(x[1] + 1.0) <= 0.2 + 1e-12);
    CHECK(x[2] == 0.0);
  }
  CHECK(dom.total_weight() == doctest::Approx(0.16).epsilon(1e-12));
}

TEST_CASE("weights are positive and sizes consistent") {
  RegionParams p;
  p.inner_radius = 0.5;
  p.outer_radius = 1.0;
  auto dom = make_geometry(RegionKind::shell3d, p, 0.1);
  CHECK(dom.points.size() == dom.weights.size());
  for (double w : dom.weights) CHECK(w > 0.0);
  CHECK(dom.total_weight() ==
        doctest::Approx(region_measure(RegionKind::shell3d, p)).epsilon(0.01));
}

TEST_CASE("subset_domain keeps literal points and weights") {
  RegionParams p;
  p.radius = 1.0;
  auto parent = make_geometry(RegionKind::disk2d, p, 0.07);
  RegionParams half;
  half.side = 2.0;
  half.center = {1.0, 0, 0};  // x > 0 half
  auto sub = subset_domain(parent, RegionKind::square2d, half);
  CHECK(sub.size() > 0);
  CHECK(sub.size() < parent.size());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < parent.size(); ++j) {
      if (parent.points[j] == sub.points[i] &&
          parent.weights[j] == sub.weights[i]) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
  RegionParams off;
  off.side = 0.1;
  off.center = {50.0, 0, 0};
  CHECK_THROWS_AS(subset_domain(parent, RegionKind::square2d, off),
                  std::invalid_argument);
  RegionParams wrongdim;
  wrongdim.radius = 0.5;
  CHECK_THROWS_AS(subset_domain(parent, RegionKind::ball3d, wrongdim),
                  std::invalid_argument);
}
