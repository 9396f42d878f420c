#include "wavechan/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wavechan/quadrature.hpp"

namespace wavechan {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209;
constexpr double kPi = 3.14159265358979323846264338;

bool is_integer(double v) { return v == std::floor(v); }

// ---------------------------------------------------------------------------
// Integer-order J by Miller's backward recurrence with sum normalization
// J_0 + 2*sum_{m>=1} J_{2m} = 1. Start order is raised until the target
// values are stable to ~1e-15.
// ---------------------------------------------------------------------------
std::vector<double> miller_j(int nmax, double x) {
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const int base = std::max(nmax, static_cast<int>(std::ceil(x)));
  int start = base + 24 + static_cast<int>(4.0 * std::sqrt(double(base) + 40.0));
  std::vector<double> prev;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<double> f(static_cast<std::size_t>(start) + 2, 0.0);
    f[start + 1] = 0.0;
    f[start] = std::numeric_limits<double>::min() * 1e16;
    double norm = 0.0;
    for (int m = start; m >= 1; --m) {
      f[m - 1] = (2.0 * m / x) * f[m] - f[m + 1];
      if (std::abs(f[m - 1]) > 1e280) {
        const double scale = 1e-280;
        for (int i = m - 1; i <= start + 1; ++i) f[i] *= scale;
      }
    }
    norm = f[0];
    for (int m = 2; m <= start; m += 2) norm += 2.0 * f[m];
    std::vector<double> cur(static_cast<std::size_t>(nmax) + 1);
    for (int m = 0; m <= nmax; ++m)
      cur[m] = (m <= start) ? f[m] / norm : 0.0;
    if (!prev.empty()) {
      bool stable = true;
      for (int m = 0; m <= nmax; ++m) {
        const double ref = std::max(std::abs(cur[m]), 1e-280);
        if (std::abs(cur[m] - prev[m]) > 2e-15 * ref) {
          stable = false;
          break;
        }
      }
      if (stable) return cur;
    }
    prev = std::move(cur);
    start += 20 + start / 4;
  }
  return prev;
}

// ---------------------------------------------------------------------------
// Y_0, Y_1 seeds.
//   x < 2   : log series
//   2..30   : integral representations (DLMF 10.9.8-ish), adaptive GK
//   x >= 30 : Hankel asymptotic expansion
// ---------------------------------------------------------------------------
void y01_series(double x, double& y0, double& y1) {
  const double j0 = miller_j(1, x)[0];
  const double j1 = miller_j(1, x)[1];
  const double t = x * x / 4.0;
  // Y0 = (2/pi)[(ln(x/2)+gamma) J0 + sum_{m>=1} (-1)^{m+1} H_m t^m/(m!)^2]
  double sum0 = 0.0, term = 1.0, harm = 0.0;
  for (int m = 1; m <= 40; ++m) {
    term *= t / (double(m) * m);
    harm += 1.0 / m;
    const double contrib = ((m % 2) ? 1.0 : -1.0) * harm * term;
    sum0 += contrib;
    if (std::abs(contrib) < 1e-18 * std::abs(sum0) && m > 4) break;
  }
  const double lg = std::log(x / 2.0) + kEulerGamma;
  y0 = (2.0 / kPi) * (lg * j0 + sum0);
  // Y1 = (2/pi)[(ln(x/2)+gamma) J1 - 1/x - (x/4) sum_{m>=0} (-1)^m
  //       (H_m + H_{m+1}) t^m / (m!(m+1)!)]
  double sum1 = 0.0;
  term = 1.0;
  harm = 0.0;  // H_0 = 0
  double harm1 = 1.0;
  for (int m = 0; m <= 40; ++m) {
    if (m > 0) {
      term *= t / (double(m) * (m + 1));
      harm += 1.0 / m;
      harm1 += 1.0 / (m + 1.0);
    }
    const double contrib = ((m % 2) ? -1.0 : 1.0) * (harm + harm1) * term;
    sum1 += contrib;
    if (std::abs(contrib) < 1e-18 * std::abs(sum1) && m > 4) break;
  }
  y1 = (2.0 / kPi) * (lg * j1 - 1.0 / x) - (x / (2.0 * kPi)) * sum1;
}

double yn_integral(int n, double x) {
  const double osc = integrate(
      [x, n](double th) { return std::sin(x * std::sin(th) - n * th); }, 0.0,
      kPi, 1e-14, 1e-16);
  const double tmax = std::asinh(42.0 / x);
  const double tail = integrate(
      [x, n](double t) {
        const double damp = std::exp(-x * std::sinh(t));
        const double pol = std::exp(n * t) + ((n % 2) ? -1.0 : 1.0) * std::exp(-n * t);
        return pol * damp;
      },
      0.0, tmax, 1e-14, 1e-16);
  return (osc - tail) / kPi;
}

// Hankel asymptotic expansion for nu = 0, 1; x >= ~17 is already at double
// precision, used from 30 with margin.
void jy_asymptotic(int nu, double x, double& j, double& y) {
  const double mu = 4.0 * nu * nu;
  // a_k / x^k with a_k = prod_{j<=k} (mu - (2j-1)^2) / (8 j)
  double ak = 1.0;
  double p = 1.0, q = 0.0;
  for (int k = 1; k <= 40; ++k) {
    ak *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k) / x;
    const double mag = std::abs(ak);
    if (k % 2 == 1) {
      q += ((k % 4 == 1) ? 1.0 : -1.0) * ak;
    } else {
      p += ((k % 4 == 2) ? -1.0 : 1.0) * ak;
    }
    if (mag < 1e-17) break;
  }
  const double chi = x - (0.5 * nu + 0.25) * kPi;
  const double amp = std::sqrt(2.0 / (kPi * x));
  j = amp * (p * std::cos(chi) - q * std::sin(chi));
  y = amp * (p * std::sin(chi) + q * std::cos(chi));
}

void y01_seed(double x, double& y0, double& y1) {
  if (x < 2.0) {
    y01_series(x, y0, y1);
  } else if (x < 30.0) {
    y0 = yn_integral(0, x);
    y1 = yn_integral(1, x);
  } else {
    double j;
    jy_asymptotic(0, x, j, y0);
    jy_asymptotic(1, x, j, y1);
  }
}

void check_half_integer_order(double nu) {
  if (!is_integer(2.0 * nu))
    throw std::invalid_argument(
        "special_functions: only integer and half-integer orders supported");
}

}  // namespace

// ---------------------------------------------------------------------------
// Spherical functions
// ---------------------------------------------------------------------------

std::vector<double> spherical_j_array(int nmax, double x) {
  if (nmax < 0) throw std::invalid_argument("spherical_j_array: nmax < 0");
  if (x < 0.0) throw std::domain_error("spherical_j_array: x < 0");
  std::vector<double> j(static_cast<std::size_t>(nmax) + 1, 0.0);
  if (x == 0.0) {
    j[0] = 1.0;
    return j;
  }
  j[0] = std::sin(x) / x;
  if (nmax == 0) return j;
  if (x > nmax) {
    // upward recurrence stable while n < x
    double jm1 = std::cos(x) / x;  // j_{-1}
    double j0 = j[0];
    for (int n = 1; n <= nmax; ++n) {
      const double jn = (2.0 * n - 1.0) / x * j0 - jm1;
      j[n] = jn;
      jm1 = j0;
      j0 = jn;
    }
    return j;
  }
  // backward recurrence, normalized at whichever of j_0, j_1 is larger
  const double j0 = j[0];
  const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  const int pivot = (std::abs(j0) >= std::abs(j1)) ? 0 : 1;
  const double pval = (pivot == 0) ? j0 : j1;
  int start = nmax + 16 +
              static_cast<int>(2.0 * std::sqrt(double(nmax) + 30.0)) +
              static_cast<int>(x);
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<double> f(static_cast<std::size_t>(start) + 2, 0.0);
    f[start + 1] = 0.0;
    f[start] = std::numeric_limits<double>::min() * 1e16;
    for (int n = start; n >= 1; --n) {
      f[n - 1] = (2.0 * n + 1.0) / x * f[n] - f[n + 1];
      if (std::abs(f[n - 1]) > 1e280)
        for (int i = n - 1; i <= start + 1; ++i) f[i] *= 1e-280;
    }
    const double scale = pval / f[pivot];
    if (std::isfinite(scale) && f[pivot] != 0.0) {
      j[0] = j0;
      for (int n = 1; n <= nmax; ++n) j[n] = f[n] * scale;
      return j;
    }
    start += 20;
  }
  return j;
}

std::vector<double> spherical_y_array(int nmax, double x) {
  if (nmax < 0) throw std::invalid_argument("spherical_y_array: nmax < 0");
  if (x <= 0.0) throw std::domain_error("spherical_y_array: x <= 0");
  std::vector<double> y(static_cast<std::size_t>(nmax) + 1);
  y[0] = -std::cos(x) / x;
  if (nmax == 0) return y;
  double ym1 = std::sin(x) / x;  // y_{-1} = j_0
  double y0 = y[0];
  for (int n = 1; n <= nmax; ++n) {
    const double yn = (2.0 * n - 1.0) / x * y0 - ym1;
    if (!std::isfinite(yn))
      throw std::overflow_error("spherical_y_array: overflow at n=" +
                                std::to_string(n));
    y[n] = yn;
    ym1 = y0;
    y0 = yn;
  }
  return y;
}

double spherical_j(int n, double x) {
  if (n >= 0) {
    if (x < 0.0) throw std::domain_error("spherical_j: x < 0");
    return spherical_j_array(n, x)[n];
  }
  if (x <= 0.0) throw std::domain_error("spherical_j: x <= 0 for n < 0");
  if (n == -1) return std::cos(x) / x;
  if (n == -2) return -std::cos(x) / (x * x) - std::sin(x) / x;  // = y_1
  // j_{-n} = (-1)^n y_{n-1}
  const int m = -n;
  const double sign = (m % 2) ? -1.0 : 1.0;
  return sign * spherical_y_array(m - 1, x)[m - 1];
}

double spherical_y(int n, double x) {
  if (x <= 0.0) throw std::domain_error("spherical_y: x <= 0");
  if (n >= 0) return spherical_y_array(n, x)[n];
  // y_{-n} = (-1)^{n+1} j_{n-1}
  const int m = -n;
  const double sign = (m % 2) ? 1.0 : -1.0;
  return sign * spherical_j_array(m - 1, x)[m - 1];
}

complexd spherical_h1(int n, double x) {
  if (x <= 0.0) throw std::domain_error("spherical_h1: x <= 0");
  return {spherical_j(n, x), spherical_y(n, x)};
}

double riccati_derivative_regular(int n, double x) {
  if (x == 0.0) return (n == 0) ? 1.0 : 0.0;  // [x j_n]' at 0
  return x * spherical_j(n - 1, x) - n * spherical_j(n, x);
}

complexd riccati_derivative_outgoing(int n, double x) {
  if (x <= 0.0) throw std::domain_error("riccati_derivative_outgoing: x <= 0");
  return x * spherical_h1(n - 1, x) - double(n) * spherical_h1(n, x);
}

complexd riccati_derivative(RadialKind kind, int n, double x) {
  if (kind == RadialKind::regular) return {riccati_derivative_regular(n, x), 0.0};
  return riccati_derivative_outgoing(n, x);
}

// ---------------------------------------------------------------------------
// Cylindrical functions
// ---------------------------------------------------------------------------

std::vector<double> bessel_j_array(int nmax, double x) {
  if (nmax < 0) throw std::invalid_argument("bessel_j_array: nmax < 0");
  if (x < 0.0) throw std::domain_error("bessel_j_array: x < 0");
  return miller_j(nmax, x);
}

std::vector<double> bessel_y_array(int nmax, double x) {
  if (nmax < 0) throw std::invalid_argument("bessel_y_array: nmax < 0");
  if (x <= 0.0) throw std::domain_error("bessel_y_array: x <= 0");
  std::vector<double> y(static_cast<std::size_t>(nmax) + 1);
  double y0, y1;
  y01_seed(x, y0, y1);
  y[0] = y0;
  if (nmax >= 1) y[1] = y1;
  for (int n = 2; n <= nmax; ++n) {
    y[n] = 2.0 * (n - 1.0) / x * y[n - 1] - y[n - 2];
    if (!std::isfinite(y[n]))
      throw std::overflow_error("bessel_y_array: overflow at n=" +
                                std::to_string(n));
  }
  return y;
}

double bessel_j(double nu, double x) {
  check_half_integer_order(nu);
  if (x < 0.0) throw std::domain_error("bessel_j: x < 0");
  if (is_integer(nu)) {
    const int n = static_cast<int>(nu);
    const int a = std::abs(n);
    const double v = miller_j(a, x)[a];
    return (n < 0 && (a % 2)) ? -v : v;
  }
  // half-integer: J_{m+1/2}(x) = sqrt(2x/pi) j_m(x)
  const int m = static_cast<int>(std::floor(nu));
  if (x == 0.0) {
    if (nu > 0.0) return 0.0;
    throw std::domain_error("bessel_j: x = 0 with negative half-integer order");
  }
  return std::sqrt(2.0 * x / kPi) * spherical_j(m, x);
}

double bessel_y(double nu, double x) {
  check_half_integer_order(nu);
  if (x <= 0.0) throw std::domain_error("bessel_y: x <= 0");
  if (is_integer(nu)) {
    const int n = static_cast<int>(nu);
    const int a = std::abs(n);
    const double v = bessel_y_array(a, x)[a];
    return (n < 0 && (a % 2)) ? -v : v;
  }
  const int m = static_cast<int>(std::floor(nu));
  return std::sqrt(2.0 * x / kPi) * spherical_y(m, x);
}

complexd hankel1(double nu, double x) { return {bessel_j(nu, x), bessel_y(nu, x)}; }

complexd hankel2(double nu, double x) { return std::conj(hankel1(nu, x)); }

}  // namespace wavechan
