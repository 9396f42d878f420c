#pragma once

#include "wavechan/geometry.hpp"
#include "wavechan/spectrum.hpp"

namespace wavechan {

// Squared coupling strength of the angular-order-q channel between a radial
// annulus [rho_lo, rho_hi] of regular waves and a shell [y_lo, y_hi] of
// outgoing waves, concentric, in 2D. Evaluated from the Bessel-product
// antiderivatives (pi^2/16) x^2[J_q^2 - J_{q+1}J_{q-1}] *
// y^2 Re[|H_q|^2 - H^{(1)}_{q+1} H^{(2)}_{q-1}].
double radial_strength_2d(int q, double k, double rho_lo, double rho_hi,
                          double y_lo, double y_hi);

// Bounding cylinder-shell strength |s_q|^2: inner integral over [0, R_core].
double cylinder_shell_strength(int q, const BoundingGeometry2D& geom);

// k^4 S_s S_r |H_0(k d_max)|^2 / 16
double sum_rule_lower_2d(const BoundingGeometry2D& geom);

// min(1, 16 |s_q|^2 / (k^4 S_s S_r |H_0(k d_max)|^2))
double relative_bound_2d(int q, const BoundingGeometry2D& geom);
double relative_bound_2d_unclamped(int q, const BoundingGeometry2D& geom);

// Large-q tail: R_core^4 / (q^4 S_s S_r |H_0(k d_max)|^2 (1+d/R_core)^{2(q-1)}),
// evaluated in log space.
double asymptotic_bound_2d(int q, const BoundingGeometry2D& geom);

// Relative-bound staircase over q in [-q_max, q_max], one entry per signed q,
// sorted descending. Entries that overflow the direct evaluation switch to
// the asymptote and are marked.
ChannelSpectrum bound_spectrum_2d(const BoundingGeometry2D& geom, int q_max);

int default_q_max_2d(const BoundingGeometry2D& geom);

}  // namespace wavechan
