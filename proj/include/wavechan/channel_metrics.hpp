#pragma once

#include <vector>

#include "wavechan/bounds3d.hpp"
#include "wavechan/geometry.hpp"
#include "wavechan/spectrum.hpp"

namespace wavechan {

// Count of channels (entries; degeneracy is already expanded) at or above
// the threshold. Requires a sum-normalized spectrum or a relative bound
// spectrum tagged as such.
int count_channels(const ChannelSpectrum& spec, double threshold);

// Distinct symmetry classes (|q| in 2D, (n,j) in 3D) at or above threshold.
int count_channel_classes(const ChannelSpectrum& spec, double threshold);

// N_SH = 2 k^2 R^2
double spherical_heuristic(double k, double R);

enum class CapacityRegime { exact, low_snr, high_snr, antenna_limited };

struct CapacityReport {
  std::vector<double> allocations;       // P_q >= 0, sums to P_total
  double mu = 0;                         // water level
  std::vector<double> per_channel_bits;  // log2(1 + P_q s_q / P_noise)
  double total_bits = 0;
  CapacityRegime regime = CapacityRegime::exact;
};

// Exact water level by the sorted-breakpoint method; no iterative tolerance.
CapacityReport waterfill(const std::vector<double>& strengths, double P_total,
                         double P_noise);

double capacity(const std::vector<double>& strengths,
                const std::vector<double>& allocations, double P_noise);

// Water-filled capacity of the top-N sphere-shell channels at the given SNR
// (P_noise = 1 internally; only the ratio matters).
CapacityReport capacity_bound(const BoundingGeometry3D& geom, int N, double SNR);

// Asymptotic regimes.
double capacity_low_snr(const BoundingGeometry3D& geom, double SNR);
double capacity_high_snr(const BoundingGeometry3D& geom, double SNR);
double capacity_antenna_limited(const BoundingGeometry3D& geom, double SNR,
                                int N_antenna);

// Sum of strengths over the largest one (degeneracy expanded).
double piestun_ratio_sum(const ChannelSpectrum& spec);

}  // namespace wavechan
