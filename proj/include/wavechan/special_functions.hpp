#pragma once

#include <complex>
#include <vector>

namespace wavechan {

using complexd = std::complex<double>;

// Cylindrical Bessel functions, integer and half-integer orders only.
// Integer orders: Miller backward recurrence for J, seed-plus-forward
// recurrence for Y. Half-integer orders reduce to spherical closed forms.
// Accuracy target: 1e-12 relative (J) / 1e-11 (Y, H) for x <= 1e3,
// |order| <= ~200, away from zeros of the function itself.
double bessel_j(double nu, double x);
double bessel_y(double nu, double x);
complexd hankel1(double nu, double x);
complexd hankel2(double nu, double x);

// J_0..J_nmax by a single normalized backward recurrence.
std::vector<double> bessel_j_array(int nmax, double x);
// Y_0..Y_nmax by forward recurrence; throws std::overflow_error once the
// values leave the double range.
std::vector<double> bessel_y_array(int nmax, double x);

// Spherical Bessel functions. n >= -2 supported (negative orders via
// j_{-n} = (-1)^n y_{n-1}, y_{-n} = (-1)^{n+1} j_{n-1}).
double spherical_j(int n, double x);
double spherical_y(int n, double x);
complexd spherical_h1(int n, double x);

std::vector<double> spherical_j_array(int nmax, double x);
std::vector<double> spherical_y_array(int nmax, double x);

// d/dx [x f_n(x)] = x f_{n-1}(x) - n f_n(x) for f in {j, h1}.
double riccati_derivative_regular(int n, double x);
complexd riccati_derivative_outgoing(int n, double x);

enum class RadialKind { regular, outgoing };
complexd riccati_derivative(RadialKind kind, int n, double x);

}  // namespace wavechan
