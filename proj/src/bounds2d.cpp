#include "wavechan/bounds2d.hpp"

#include <cmath>
#include <stdexcept>

#include "wavechan/special_functions.hpp"

namespace wavechan {

namespace {
constexpr double kPi = 3.14159265358979323846264338;

// x^2 [J_q(x)^2 - J_{q+1}(x) J_{q-1}(x)], the antiderivative of 2 x J_q(x)^2.
double fj(int q, double x) {
  if (x == 0.0) return 0.0;
  const auto J = bessel_j_array(q + 1, x);
  const double jm = (q == 0) ? -J[1] : J[q - 1];
  return x * x * (J[q] * J[q] - J[q + 1] * jm);
}

// y^2 Re[|H_q|^2 - H^{(1)}_{q+1} H^{(2)}_{q-1}], antiderivative of 2 y |H_q|^2.
double fh(int q, double y) {
  const auto J = bessel_j_array(q + 1, y);
  const auto Y = bessel_y_array(q + 1, y);
  const complexd hq(J[q], Y[q]);
  const complexd hp(J[q + 1], Y[q + 1]);
  const complexd hm = (q == 0) ? complexd(-J[1], -Y[1]) : complexd(J[q - 1], Y[q - 1]);
  return y * y * (std::norm(hq) - (hp * std::conj(hm)).real());
}
}  // namespace

std::vector<std::string> BoundingGeometry2D::warnings() const {
  std::vector<std::string> w;
  if (S_s > kPi * R_s * R_s * (1.0 + 1e-12))
    w.push_back("S_s exceeds the bounding disk area pi*R_s^2");
  const double shell =
      kPi * (R_outer() * R_outer() - R_inner() * R_inner());
  if (S_r > shell * (1.0 + 1e-12))
    w.push_back("S_r exceeds the bounding shell area");
  return w;
}

double radial_strength_2d(int q, double k, double rho_lo, double rho_hi,
                          double y_lo, double y_hi) {
  if (!(k > 0) || rho_lo < 0 || rho_hi < rho_lo || y_lo <= 0 || y_hi < y_lo)
    throw std::invalid_argument("radial_strength_2d: bad interval");
  q = std::abs(q);
  const double a = fj(q, k * rho_hi) - fj(q, k * rho_lo);
  const double b = fh(q, k * y_hi) - fh(q, k * y_lo);
  if (!std::isfinite(b))
    throw std::overflow_error("radial_strength_2d: Hankel overflow at q=" +
                              std::to_string(q));
  const double v = (kPi * kPi / 16.0) * a * b;
  return v > 0.0 ? v : 0.0;
}

double cylinder_shell_strength(int q, const BoundingGeometry2D& geom) {
  geom.validate();
  if (geom.core_radius() == 0.0) return 0.0;
  return radial_strength_2d(q, geom.k, 0.0, geom.core_radius(), geom.R_inner(),
                            geom.R_outer());
}

double sum_rule_lower_2d(const BoundingGeometry2D& geom) {
  geom.validate();
  if (geom.d_max() <= 0.0)
    throw std::invalid_argument("sum_rule_lower_2d: d_max = 0");
  const double h0 = std::norm(hankel1(0, geom.k * geom.d_max()));
  const double k4 = std::pow(geom.k, 4);
  return k4 * geom.S_s * geom.S_r * h0 / 16.0;
}

double relative_bound_2d_unclamped(int q, const BoundingGeometry2D& geom) {
  return cylinder_shell_strength(q, geom) / sum_rule_lower_2d(geom);
}

double relative_bound_2d(int q, const BoundingGeometry2D& geom) {
  // No channel can carry more than the whole sum rule.
  return std::min(1.0, relative_bound_2d_unclamped(q, geom));
}

double asymptotic_bound_2d(int q, const BoundingGeometry2D& geom) {
  geom.validate();
  if (q < 1) throw std::invalid_argument("asymptotic_bound_2d: q < 1");
  const double R = geom.core_radius();
  const double h0 = std::norm(hankel1(0, geom.k * geom.d_max()));
  const double log_v = 4.0 * std::log(R) - 4.0 * std::log(double(q)) -
                       std::log(geom.S_s) - std::log(geom.S_r) - std::log(h0) -
                       2.0 * (q - 1.0) * std::log1p(geom.d / R);
  return std::exp(log_v);
}

int default_q_max_2d(const BoundingGeometry2D& geom) {
  return static_cast<int>(std::ceil(3.0 * geom.k * geom.core_radius())) + 40;
}

ChannelSpectrum bound_spectrum_2d(const BoundingGeometry2D& geom, int q_max) {
  geom.validate();
  if (q_max < 0) throw std::invalid_argument("bound_spectrum_2d: q_max < 0");
  ChannelSpectrum spec;
  spec.normalization = Normalization::sum;  // relative to the sum-rule bound
  spec.metadata["geometry"] = "cylinder-shell";
  spec.metadata["core"] = to_string(geom.core);
  for (int q = -q_max; q <= q_max; ++q) {
    ChannelEntry e;
    e.label = {ChannelLabel::Kind::q2d, q, 0, 0, 0};
    e.degeneracy = (q == 0) ? 1 : 2;
    try {
      e.strength = relative_bound_2d(q, geom);
    } catch (const std::overflow_error&) {
      e.strength = (q == 0) ? 0.0 : std::min(1.0, asymptotic_bound_2d(std::abs(q), geom));
      e.asymptotic = true;
    }
    spec.entries.push_back(e);
  }
  spec.sort_descending();
  return spec;
}

}  // namespace wavechan
