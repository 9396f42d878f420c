#pragma once

#include <complex>
#include <string>
#include <vector>

#include "wavechan/domain.hpp"
#include "wavechan/spectrum.hpp"

namespace wavechan {

using complexd = std::complex<double>;

// Free-space kernels. The 2D Green's function and the 3D dyadic both carry
// the extra k^2 that makes the operator singular values dimensionless.
complexd scalar_green_2d(double k, const Point& a, const Point& b);

struct Dyadic3 {
  complexd m[3][3];
  double frobenius_sq() const;
};
Dyadic3 dyadic_green_3d(double k, const Point& a, const Point& b);

// Column-major dense complex matrix.
struct ComplexMatrix {
  int rows = 0, cols = 0;
  std::vector<complexd> a;
  ComplexMatrix() = default;
  ComplexMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}
  complexd& at(int i, int j) { return a[std::size_t(j) * rows + i]; }
  const complexd& at(int i, int j) const { return a[std::size_t(j) * rows + i]; }
  double frobenius_sq() const;
};

// Nyström-weighted Green matrix: entry = kernel * sqrt(w_row w_col), rows
// indexed by receiver points (x3 components in 3D), columns by source points.
struct GreenMatrix {
  ComplexMatrix entries;
  int dimension = 2;
  double k = 0;
  std::string src_label, rcv_label;
  std::size_t n_src = 0, n_rcv = 0;
};

// Cap on the Gram (smaller) side of the dense SVD. Oversized problems are
// refused with a suggested coarser spacing.
inline constexpr int kDefaultSvdCap = 6000;

GreenMatrix assemble(const DiscretizedDomain& src, const DiscretizedDomain& rcv,
                     double k);

// Singular values, descending. Computed from the eigendecomposition of the
// smaller of G^H G / G G^H; the squares sum to the squared Frobenius norm.
std::vector<double> singular_values(const GreenMatrix& gm);

// SVD of the explicit matrix (bidiagonalization): absolute accuracy
// ~eps * sigma_1 on every singular value, where the Gram route only offers
// ~eps * sigma_1^2 / sigma_q. The monotonicity verifier uses this path.
std::vector<double> singular_values_direct(const GreenMatrix& gm);

// Same result without materializing the full matrix: the Gram matrix of the
// smaller side is accumulated in row blocks. Suitable for the large
// shell-shell runs.
std::vector<double> operator_singular_values(const DiscretizedDomain& src,
                                             const DiscretizedDomain& rcv,
                                             double k, int svd_cap = kDefaultSvdCap);

// Squared Frobenius norm of the (implicit) Green matrix.
double operator_frobenius_sq(const DiscretizedDomain& src,
                             const DiscretizedDomain& rcv, double k);

struct RelativeSpectra {
  ChannelSpectrum sum_normalized;
  ChannelSpectrum max_normalized;
};
RelativeSpectra relative_spectrum(const GreenMatrix& gm);
RelativeSpectra relative_spectrum(std::vector<double> sigmas);

struct MonotonicityReport {
  std::vector<double> sigma_small, sigma_large, differences;
  double tolerance = 0;
  bool pass = false;
};

// sigma_q(larger) >= sigma_q(smaller) for literal point-subset domains.
MonotonicityReport verify_monotonicity(const DiscretizedDomain& small_src,
                                       const DiscretizedDomain& small_rcv,
                                       const DiscretizedDomain& large_src,
                                       const DiscretizedDomain& large_rcv,
                                       double k);

struct PiestunReport {
  double n_bound_analytic = 0;     // cylinder-shell ratio sum (= 10.7)
  double n_shell_shell = 0;        // numeric shell-shell ratio sum (= 16.4)
  double sigma0_sq = 0;            // numeric strength of the q = 0 channel
  std::vector<int> q_labels;       // per sorted rank
  std::vector<double> numeric_ratio;    // sigma_q^2 / sigma_0^2
  std::vector<double> analytic_ratio;   // cylinder-shell counterpart
  std::vector<double> sum_normalized;   // sigma_q^2 / sum
  std::vector<double> bound_sum_normalized;  // relative_bound_2d at |q|
  std::size_t n_src_points = 0, n_rcv_points = 0;
  double spacing = 0;
  double runtime_seconds = 0;
};

// SM geometry: source annulus 0.3..1 lambda, receiver annulus 10..11 lambda;
// bounding cylinder radius 1 lambda. k fixes the length unit (lambda = 2pi/k).
PiestunReport piestun_counterexample(double k, double spacing,
                                     int svd_cap = kDefaultSvdCap);

}  // namespace wavechan
