#include <cmath>
#include <stdexcept>

#include "wavechan/green_oracle.hpp"

namespace wavechan {

namespace {
constexpr double kPi = 3.14159265358979323846264338;

double dist(const Point& a, const Point& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// J0, Y0 tuned for kernel assembly. Ascending series below x = 13 (error
// ~5e-11 there, far below any discretization error), Hankel asymptotic
// expansion beyond. Both branches cost ~100 ns, which matters for the 1e8+
// kernel evaluations of the dense-oracle runs.
void j0y0_fast(double x, double& j0, double& y0) {
  if (x < 13.0) {
    constexpr double euler = 0.57721566490153286060651209;
    const double t = x * x / 4.0;
    double term = 1.0, sj = 1.0, sy = 0.0, harm = 0.0;
    for (int m = 1; m <= 38; ++m) {
      term *= -t / (double(m) * m);
      harm += 1.0 / m;
      sj += term;
      sy -= harm * term;
      if (std::abs(term) < 1e-17) break;
    }
    j0 = sj;
    y0 = (2.0 / kPi) * ((std::log(x / 2.0) + euler) * sj + sy);
    return;
  }
  double ak = 1.0, p = 1.0, q = 0.0;
  for (int k = 1; k <= 30; ++k) {
    ak *= -(2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k) / x;
    if (k % 2 == 1)
      q += ((k % 4 == 1) ? 1.0 : -1.0) * ak;
    else
      p += ((k % 4 == 2) ? -1.0 : 1.0) * ak;
    if (std::abs(ak) < 1e-17) break;
  }
  const double chi = x - 0.25 * kPi;
  const double amp = std::sqrt(2.0 / (kPi * x));
  const double c = std::cos(chi), s = std::sin(chi);
  j0 = amp * (p * c - q * s);
  y0 = amp * (p * s + q * c);
}
}  // namespace

complexd scalar_green_2d(double k, const Point& a, const Point& b) {
  const double r = dist(a, b);
  if (r <= 0.0)
    throw std::domain_error("scalar_green_2d: coincident points");
  double j0, y0;
  j0y0_fast(k * r, j0, y0);
  // (i k^2 / 4) H0^(1)(kr)
  return complexd(0.0, k * k / 4.0) * complexd(j0, y0);
}

double Dyadic3::frobenius_sq() const {
  double t = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t += std::norm(m[i][j]);
  return t;
}

Dyadic3 dyadic_green_3d(double k, const Point& a, const Point& b) {
  const double r = dist(a, b);
  if (r <= 0.0)
    throw std::domain_error("dyadic_green_3d: coincident points");
  const double u = 1.0 / (k * r);
  // (k^2 I + grad grad) e^{ikr}/(4 pi r)
  //   = k^2 g [ t (I - rr) + s rr ],  t = 1 + iu - u^2,  s = 2u^2 - 2iu
  const complexd g = std::exp(complexd(0.0, k * r)) / (4.0 * kPi * r);
  const complexd t = complexd(1.0 - u * u, u);
  const complexd s = complexd(2.0 * u * u, -2.0 * u);
  const double nx = (a[0] - b[0]) / r, ny = (a[1] - b[1]) / r, nz = (a[2] - b[2]) / r;
  const double nhat[3] = {nx, ny, nz};
  Dyadic3 out;
  const complexd pref = k * k * g;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double rr = nhat[i] * nhat[j];
      const double del = (i == j) ? 1.0 : 0.0;
      out.m[i][j] = pref * (t * (del - rr) + s * rr);
    }
  }
  return out;
}

}  // namespace wavechan
