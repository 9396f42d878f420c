#include "wavechan/bounds3d.hpp"

#include <cmath>
#include <stdexcept>

#include "wavechan/special_functions.hpp"

namespace wavechan {

namespace {
constexpr double kPi = 3.14159265358979323846264338;

// (x^3/2)[j_n^2 - j_{n-1} j_{n+1}], antiderivative of x^2 j_n(x)^2.
double a1(int n, double x) {
  if (x == 0.0) return 0.0;
  return (x * x * x / 2.0) *
         (spherical_j(n, x) * spherical_j(n, x) -
          spherical_j(n - 1, x) * spherical_j(n + 1, x));
}

// Same for the outgoing waves: (y^3/2) Re[|h_n|^2 - h_{n+1} conj(h_{n-1})].
double b1(int n, double y) {
  const complexd hn = spherical_h1(n, y);
  const complexd hp = spherical_h1(n + 1, y);
  const complexd hm = spherical_h1(n - 1, y);
  return (y * y * y / 2.0) * (std::norm(hn) - (hp * std::conj(hm)).real());
}

// Antiderivative of n(n+1) j_n^2 + [x j_n]'^2, the weighted two-term form.
double a2(int n, double x) {
  if (x == 0.0) return 0.0;
  const double w1 = (n + 1.0) / (2.0 * n + 1.0);
  const double w2 = n / (2.0 * n + 1.0);
  const double jm1 = spherical_j(n - 1, x);
  const double jp1 = spherical_j(n + 1, x);
  const double jn = spherical_j(n, x);
  const double t1 = jm1 * jm1 - spherical_j(n - 2, x) * jn;
  const double t2 = jp1 * jp1 - jn * spherical_j(n + 2, x);
  return (x * x * x / 2.0) * (w1 * t1 + w2 * t2);
}

double b2(int n, double y) {
  const double w1 = (n + 1.0) / (2.0 * n + 1.0);
  const double w2 = n / (2.0 * n + 1.0);
  const complexd hm1 = spherical_h1(n - 1, y);
  const complexd hp1 = spherical_h1(n + 1, y);
  const complexd hn = spherical_h1(n, y);
  const double t1 = std::norm(hm1) - (hn * std::conj(spherical_h1(n - 2, y))).real();
  const double t2 = std::norm(hp1) - (spherical_h1(n + 2, y) * std::conj(hn)).real();
  return (y * y * y / 2.0) * (w1 * t1 + w2 * t2);
}

void check_channel(int n, int j) {
  if (j != 1 && j != 2)
    throw std::invalid_argument("sphere_shell_strength: j must be 1 or 2");
  if (n < 0 || (n == 0 && j == 1))
    throw std::invalid_argument(
        "sphere_shell_strength: channel (n=0, j=1) does not exist");
}
}  // namespace

std::vector<std::string> BoundingGeometry3D::warnings() const {
  std::vector<std::string> w;
  const double ball = 4.0 * kPi / 3.0 * R_s * R_s * R_s;
  if (V_s > ball * (1.0 + 1e-12))
    w.push_back("V_s exceeds the bounding ball volume (4pi/3)R_s^3");
  const double shell = 4.0 * kPi / 3.0 *
                       (std::pow(R_outer(), 3) - std::pow(R_inner(), 3));
  if (V_r > shell * (1.0 + 1e-12))
    w.push_back("V_r exceeds the bounding shell volume");
  return w;
}

double radial_strength_3d(int n, int j, double k, double rho_lo, double rho_hi,
                          double y_lo, double y_hi) {
  check_channel(n, j);
  if (!(k > 0) || rho_lo < 0 || rho_hi < rho_lo || y_lo <= 0 || y_hi < y_lo)
    throw std::invalid_argument("radial_strength_3d: bad interval");
  double a, b;
  if (j == 1) {
    a = a1(n, k * rho_hi) - a1(n, k * rho_lo);
    b = b1(n, k * y_hi) - b1(n, k * y_lo);
  } else {
    a = a2(n, k * rho_hi) - a2(n, k * rho_lo);
    b = b2(n, k * y_hi) - b2(n, k * y_lo);
  }
  if (!std::isfinite(b) || !std::isfinite(a))
    throw std::overflow_error("radial_strength_3d: overflow at n=" +
                              std::to_string(n));
  const double v = a * b;
  return v > 0.0 ? v : 0.0;
}

double sphere_shell_strength(int n, int j, const BoundingGeometry3D& geom) {
  geom.validate();
  if (geom.R_sphere() == 0.0) return 0.0;
  return radial_strength_3d(n, j, geom.k, 0.0, geom.R_sphere(), geom.R_inner(),
                            geom.R_outer());
}

double frobenius_green_norm_sq(double k, double r) {
  if (!(r > 0)) throw std::domain_error("frobenius_green_norm_sq: r <= 0");
  const double u = 1.0 / (k * r);
  const double u2 = u * u;
  return std::pow(k, 6) / (8.0 * kPi * kPi) * (u2 + u2 * u2 + 3.0 * u2 * u2 * u2);
}

double sum_rule_lower_3d(const BoundingGeometry3D& geom, bool leading_only) {
  geom.validate();
  if (!(geom.d_max() > 0))
    throw std::invalid_argument("sum_rule_lower_3d: d_max = 0");
  if (leading_only)
    return std::pow(geom.k, 4) * geom.V_s * geom.V_r /
           (8.0 * kPi * kPi * geom.d_max() * geom.d_max());
  return geom.V_s * geom.V_r * frobenius_green_norm_sq(geom.k, geom.d_max());
}

double relative_bound_3d_unclamped(int n, int j, const BoundingGeometry3D& geom) {
  return sphere_shell_strength(n, j, geom) / sum_rule_lower_3d(geom);
}

double relative_bound_3d(int n, int j, const BoundingGeometry3D& geom) {
  return std::min(1.0, relative_bound_3d_unclamped(n, j, geom));
}

double asymptotic_bound_3d(double q, const BoundingGeometry3D& geom) {
  geom.validate();
  if (!(q >= 1)) throw std::invalid_argument("asymptotic_bound_3d: q < 1");
  const double R = geom.core_radius();
  const double log_v =
      std::log(2.0 * kPi * kPi) + 2.0 * std::log(geom.d_max()) -
      4.0 * std::log(geom.k) - std::log(geom.V_s) - std::log(geom.V_r) -
      (std::sqrt(2.0 * q) + 1.0) * std::log1p(geom.d / R);
  return std::exp(log_v);
}

double strength_asymptote_3d(int n, int j, const BoundingGeometry3D& geom) {
  check_channel(n, j);
  const double R = geom.R_sphere();
  const double ratio = std::log(R / geom.R_inner());
  double log_v;
  if (j == 1)
    log_v = 4.0 * std::log(geom.k * R / (2.0 * n)) + (2.0 * n - 1.0) * ratio;
  else
    log_v = std::log(0.25) + (2.0 * n + 1.0) * ratio;
  return std::exp(log_v);
}

double max_channel_strength(const BoundingGeometry3D& geom) {
  geom.validate();
  return geom.k * geom.k * geom.other_radius() * geom.core_radius();
}

int default_n_max_3d(const BoundingGeometry3D& geom) {
  return static_cast<int>(std::ceil(3.0 * geom.k * geom.R_sphere())) + 40;
}

namespace {
ChannelSpectrum spectrum_3d_impl(const BoundingGeometry3D& geom, int n_max,
                                 bool relative) {
  geom.validate();
  if (n_max < 1) throw std::invalid_argument("spectrum_3d: n_max < 1");
  const double denom = relative ? sum_rule_lower_3d(geom) : 1.0;
  ChannelSpectrum spec;
  spec.normalization = relative ? Normalization::sum : Normalization::raw;
  spec.metadata["geometry"] = "sphere-shell";
  spec.metadata["core"] = to_string(geom.core);
  for (int n = 0; n <= n_max; ++n) {
    for (int j = 1; j <= 2; ++j) {
      if (n == 0 && j == 1) continue;
      double v;
      bool asym = false;
      try {
        v = sphere_shell_strength(n, j, geom) / denom;
      } catch (const std::overflow_error&) {
        v = strength_asymptote_3d(n, j, geom) / denom;
        asym = true;
      }
      if (relative) v = std::min(1.0, v);
      for (int m = -n; m <= n; ++m) {
        ChannelEntry e;
        e.label = {ChannelLabel::Kind::nj3d, 0, n, m, j};
        e.strength = v;
        e.degeneracy = 2 * n + 1;
        e.asymptotic = asym;
        spec.entries.push_back(e);
      }
    }
  }
  spec.sort_descending();
  return spec;
}
}  // namespace

ChannelSpectrum bound_spectrum_3d(const BoundingGeometry3D& geom, int n_max) {
  return spectrum_3d_impl(geom, n_max, true);
}

ChannelSpectrum strength_spectrum_3d(const BoundingGeometry3D& geom, int n_max) {
  return spectrum_3d_impl(geom, n_max, false);
}

}  // namespace wavechan
