#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "wavechan/quadrature.hpp"
#include "wavechan/special_functions.hpp"

using namespace wavechan;

namespace {
constexpr double kPi = 3.14159265358979323846264338;

// Independent oracle: Bessel's integral J_n(x) = (1/pi) int_0^pi
// cos(x sin t - n t) dt, evaluated by adaptive quadrature.
double j_integral_oracle(int n, double x) {
  return integrate(
             [n, x](double t) { return std::cos(x * std::sin(t) - n * t); },
             0.0, kPi, 1e-14, 1e-16) /
         kPi;
}

// Bisection on the power series locates the first zero of J_0.
double j0_series(double x) {
  double term = 1.0, sum = 1.0;
  for (int m = 1; m <= 60; ++m) {
    term *= -(x * x / 4.0) / (double(m) * m);
    sum += term;
  }
  return sum;
}
double first_j0_zero_by_bisection() {
  double lo = 2.0, hi = 3.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (j0_series(lo) * j0_series(mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}
}  // namespace

TEST_CASE("bessel_j trivial values") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(bessel_j(7, 0.0) == 0.0);
}

TEST_CASE("bessel_j first zero of J0 (bisection oracle)") {
  const double z = first_j0_zero_by_bisection();
  CHECK(z == doctest::Approx(2.404825557695773).epsilon(1e-12));
  CHECK(std::abs(bessel_j(0, z)) < 1e-10);
}

TEST_CASE("bessel_j against integral representation") {
  for (int n : {0, 1, 2, 5, 13, 40}) {
    for (double x : {0.05, 0.7, 3.0, 9.5, 27.0, 61.0}) {
      const double ref = j_integral_oracle(n, x);
      const double got = bessel_j(n, x);
      if (std::abs(ref) > 1e-12)
        CHECK(got == doctest::Approx(ref).epsilon(5e-12));
      else
        CHECK(std::abs(got - ref) < 1e-13);
    }
  }
}

TEST_CASE("negative integer order reflection") {
  for (int n : {1, 2, 5}) {
    for (double x : {0.3, 4.2, 19.0}) {
      const double sign = (n % 2) ? -1.0 : 1.0;
      CHECK(bessel_j(-n, x) == doctest::Approx(sign * bessel_j(n, x)).epsilon(1e-14));
      CHECK(bessel_y(-n, x) == doctest::Approx(sign * bessel_y(n, x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("hankel magnitude large-argument asymptote") {
  // |H_0(x)| ~ sqrt(2/(pi x)) with relative correction O(x^-2)
  const double x = 100.0;
  const double mag = std::abs(hankel1(0, x));
  CHECK(mag == doctest::Approx(std::sqrt(2.0 / (kPi * x))).epsilon(5e-3));
}

TEST_CASE("hankel2 is the conjugate of hankel1") {
  for (double nu : {0.0, 3.0, 0.5, 2.5}) {
    for (double x : {0.8, 5.0, 42.0}) {
      CHECK(hankel2(nu, x) == std::conj(hankel1(nu, x)));
    }
  }
}

TEST_CASE("cylindrical Wronskian J_{n+1} Y_n - J_n Y_{n+1} = 2/(pi x)") {
  for (double x : {0.2, 1.0, 2.5, 7.0, 12.0, 15.5, 26.0, 80.0, 400.0}) {
    const double w = 2.0 / (kPi * x);
    for (int n = 0; n <= 20; ++n) {
      const double got = bessel_j(n + 1, x) * bessel_y(n, x) -
                         bessel_j(n, x) * bessel_y(n + 1, x);
      CHECK(got == doctest::Approx(w).epsilon(1e-10));
    }
  }
}

TEST_CASE("recurrence f_{n-1} + f_{n+1} = (2n/x) f_n") {
  for (double x : {0.1, 1.0, 10.0, 100.0}) {
    auto J = bessel_j_array(51, x);
    for (int n = 1; n <= 50; ++n) {
      const double lhs = J[n - 1] + J[n + 1];
      const double rhs = 2.0 * n / x * J[n];
      const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-280});
      CHECK(std::abs(lhs - rhs) <= 1e-9 * scale);
    }
    auto j = spherical_j_array(51, x);
    for (int n = 1; n <= 50; ++n) {
      const double lhs = j[n - 1] + j[n + 1];
      const double rhs = (2.0 * n + 1.0) / x * j[n];
      const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-280});
      CHECK(std::abs(lhs - rhs) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("spherical Wronskian j_n y_n' - j_n' y_n = 1/x^2") {
  for (double x : {0.4, 2.0, 9.0, 33.0}) {
    auto j = spherical_j_array(51, x);
    auto y = spherical_y_array(51, x);
    for (int n = 0; n <= 50; ++n) {
      // f' = f_{n-1} - (n+1)/x f_n
      const double jm = (n == 0) ? spherical_j(-1, x) : j[n - 1];
      const double ym = (n == 0) ? spherical_y(-1, x) : y[n - 1];
      const double jp = jm - (n + 1.0) / x * j[n];
      const double yp = ym - (n + 1.0) / x * y[n];
      CHECK(j[n] * yp - jp * y[n] == doctest::Approx(1.0 / (x * x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("spherical trivial values") {
  CHECK(std::abs(spherical_j(0, kPi)) < 1e-12);          // sin(pi)/pi
  CHECK(std::abs(spherical_j(-1, kPi / 2.0)) < 1e-12);   // cos(pi/2)
  CHECK(spherical_j(0, 0.0) == 1.0);
  CHECK(spherical_j(3, 0.0) == 0.0);
}

TEST_CASE("spherical h1 far-field phase h_n ~ e^{ix} i^{-n-1} / x") {
  // First neglected term of the expansion is n(n+1)/(2x), so 1% holds for
  // n <= 2 at x = 500; beyond that assert the bound set by that term and
  // the O(1/x) convergence rate.
  auto relerr = [](int n, double x) {
    const complexd ref =
        std::exp(complexd(0, x)) * std::pow(complexd(0, -1), n + 1) / x;
    return std::abs(spherical_h1(n, x) - ref) / std::abs(ref);
  };
  const double x = 500.0;
  for (int n = 0; n <= 2; ++n) CHECK(relerr(n, x) < 0.01);
  for (int n = 3; n <= 5; ++n) {
    CHECK(relerr(n, x) < 0.75 * n * (n + 1) / x);
    CHECK(relerr(n, x) < relerr(n, x / 2.0) / 1.8);
  }
  // n = -1 closed form is exact: h_{-1}(x) = e^{ix}/x
  const complexd hm1 = spherical_h1(-1, x);
  CHECK(std::abs(hm1 - std::exp(complexd(0, x)) / x) < 1e-14);
}

TEST_CASE("half-integer orders route through spherical closed forms") {
  for (int n : {0, 1, 4, 11, 37}) {
    for (double x : {0.6, 3.1, 8.8, 50.0}) {
      const double lhs = spherical_j(n, x);
      const double rhs = std::sqrt(kPi / (2.0 * x)) * bessel_j(n + 0.5, x);
      const double scale = std::max(std::abs(lhs), 1e-280);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
    }
  }
  // negative half-integer orders (used by the n=0 strength formulas)
  const double x = 2.7;
  CHECK(bessel_j(-0.5, x) ==
        doctest::Approx(std::sqrt(2.0 / (kPi * x)) * std::cos(x)).epsilon(1e-13));
  CHECK(bessel_j(-1.5, x) ==
        doctest::Approx(std::sqrt(2.0 / (kPi * x)) *
                        (-std::cos(x) / x - std::sin(x))).epsilon(1e-13));
}

TEST_CASE("riccati derivatives") {
  CHECK(riccati_derivative_regular(0, 1.0) == doctest::Approx(std::cos(1.0)).epsilon(1e-14));
  CHECK(riccati_derivative_regular(1, 0.0) == 0.0);
  // finite-difference oracle for the outgoing kind
  const int n = 2;
  const double x = 3.7, h = 1e-6;
  const complexd fd =
      ((x + h) * spherical_h1(n, x + h) - (x - h) * spherical_h1(n, x - h)) /
      (2.0 * h);
  const complexd got = riccati_derivative_outgoing(n, x);
  CHECK(std::abs(got - fd) < 1e-6);
  // regular kind at a generic point, same oracle
  const double fdr =
      ((x + h) * spherical_j(n, x + h) - (x - h) * spherical_j(n, x - h)) /
      (2.0 * h);
  CHECK(std::abs(riccati_derivative_regular(n, x) - fdr) < 1e-6);
}

TEST_CASE("domain and order errors") {
  CHECK_THROWS_AS(bessel_j(0.25, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bessel_j(1, -1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_y(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(bessel_y(0, -2.0), std::domain_error);
  CHECK_THROWS_AS(spherical_h1(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(spherical_h1(2, -1.0), std::domain_error);
}

TEST_CASE("high order / large argument spot checks vs std library") {
  // std::cyl_bessel_j is an independent implementation; agreement at loose
  // tolerance guards against gross regressions over the supported range.
  for (double x : {10.0, 150.0, 900.0}) {
    for (int n : {0, 2, 17, 60, 190}) {
      const double ref = std::cyl_bessel_j(double(n), x);
      const double got = bessel_j(n, x);
      const double scale = std::max(std::abs(ref), 1e-250);
      CHECK(std::abs(got - ref) <= 1e-9 * scale);
    }
  }
}
