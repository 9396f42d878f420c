#pragma once

#include "wavechan/geometry.hpp"
#include "wavechan/spectrum.hpp"

namespace wavechan {

// Radial integrals of the spherical vector-wave norms, as antiderivative
// differences. j = 1 is the transverse (V3) polarization, j = 2 the mixed
// (V1/V2) one. Regular kind integrates x^2 j_n^2 (j=1) or
// n(n+1) j_n^2 + [x j_n]'^2 (j=2); outgoing kind has h_n^(1) in place of j_n.
double radial_strength_3d(int n, int j, double k, double rho_lo, double rho_hi,
                          double y_lo, double y_hi);

// |s_{nmj}|^2 for the sphere-shell bounding volume; independent of m.
double sphere_shell_strength(int n, int j, const BoundingGeometry3D& geom);

// (k^6 / 8 pi^2) [ (kr)^-2 + (kr)^-4 + 3 (kr)^-6 ]
double frobenius_green_norm_sq(double k, double r);

// leading_only: k^4 V_s V_r / (8 pi^2 d_max^2); otherwise all three terms.
double sum_rule_lower_3d(const BoundingGeometry3D& geom, bool leading_only = true);

double relative_bound_3d(int n, int j, const BoundingGeometry3D& geom);
double relative_bound_3d_unclamped(int n, int j, const BoundingGeometry3D& geom);

// 2 pi^2 d_max^2 / (k^4 V_s V_r (1+d/R_core)^{sqrt(2q)+1}), log space.
double asymptotic_bound_3d(double q, const BoundingGeometry3D& geom);

// Large-n asymptotes of the sphere-shell strengths (SM forms), log space.
// j=1: (k R / 2n)^4 (R/R_inner)^{2n-1}; j=2: (1/4)(R/R_inner)^{2n+1}.
double strength_asymptote_3d(int n, int j, const BoundingGeometry3D& geom);

// Relative-bound staircase: (n,j) blocks expanded to 2n+1 entries each,
// n >= 1 for both polarizations plus the (0,2) channel, sorted descending.
ChannelSpectrum bound_spectrum_3d(const BoundingGeometry3D& geom, int n_max);

// Raw |s|^2 spectrum of the bounding volume (degeneracy expanded), used by
// capacity bounds and max-strength enumeration.
ChannelSpectrum strength_spectrum_3d(const BoundingGeometry3D& geom, int n_max);

// k^2 R_other R_core, the far-field/large-sphere limit of the max strength.
double max_channel_strength(const BoundingGeometry3D& geom);

int default_n_max_3d(const BoundingGeometry3D& geom);

}  // namespace wavechan
