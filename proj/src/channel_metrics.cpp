#include "wavechan/channel_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wavechan {

int count_channels(const ChannelSpectrum& spec, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw std::invalid_argument("count_channels: threshold outside (0, 1]");
  if (spec.normalization != Normalization::sum)
    throw std::invalid_argument(
        "count_channels: spectrum must be sum-normalized");
  int c = 0;
  for (const auto& e : spec.entries)
    if (e.strength >= threshold) ++c;
  return c;
}

int count_channel_classes(const ChannelSpectrum& spec, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw std::invalid_argument("count_channel_classes: threshold outside (0, 1]");
  if (spec.normalization != Normalization::sum)
    throw std::invalid_argument(
        "count_channel_classes: spectrum must be sum-normalized");
  std::set<std::tuple<int, int, int>> classes;
  for (const auto& e : spec.entries) {
    if (e.strength < threshold) continue;
    switch (e.label.kind) {
      case ChannelLabel::Kind::q2d:
        classes.insert({std::abs(e.label.q), 0, 0});
        break;
      case ChannelLabel::Kind::nj3d:
        classes.insert({e.label.n, e.label.j, 1});
        break;
      default:
        classes.insert({e.label.q, 0, 2});
    }
  }
  return static_cast<int>(classes.size());
}

double spherical_heuristic(double k, double R) {
  if (!(k > 0) || !(R > 0))
    throw std::invalid_argument("spherical_heuristic: k, R must be positive");
  return 2.0 * k * k * R * R;
}

CapacityReport waterfill(const std::vector<double>& strengths, double P_total,
                         double P_noise) {
  if (!(P_total > 0) || !(P_noise > 0))
    throw std::invalid_argument("waterfill: powers must be positive");
  const std::size_t n = strengths.size();
  bool any = false;
  for (double s : strengths) {
    if (s < 0) throw std::invalid_argument("waterfill: negative strength");
    if (s > 0) any = true;
  }
  if (!any) throw std::invalid_argument("waterfill: all strengths zero");

  // sort by descending strength (ascending inverse)
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return strengths[a] > strengths[b];
  });

  // active set = first m sorted channels; mu(m) = (P + sum inv)/m is valid
  // when P_m >= 0 and channel m+1 stays dry.
  double inv_sum = 0;
  double mu = 0;
  std::size_t active = 0;
  for (std::size_t m = 1; m <= n; ++m) {
    const double s = strengths[order[m - 1]];
    if (s <= 0) break;
    const double inv = P_noise / s;
    inv_sum += inv;
    const double cand = (P_total + inv_sum) / double(m);
    const bool next_dry =
        (m == n) || strengths[order[m]] <= 0 ||
        cand <= P_noise / strengths[order[m]] * (1.0 + 1e-15);
    if (cand >= inv * (1.0 - 1e-15) && next_dry) {
      mu = cand;
      active = m;
      break;
    }
  }
  if (active == 0)
    throw std::runtime_error("waterfill: breakpoint search failed");

  CapacityReport rep;
  rep.mu = mu;
  rep.allocations.assign(n, 0.0);
  rep.per_channel_bits.assign(n, 0.0);
  for (std::size_t m = 0; m < active; ++m) {
    const std::size_t i = order[m];
    const double p = std::max(0.0, mu - P_noise / strengths[i]);
    rep.allocations[i] = p;
    rep.per_channel_bits[i] = std::log2(1.0 + p * strengths[i] / P_noise);
    rep.total_bits += rep.per_channel_bits[i];
  }
  return rep;
}

double capacity(const std::vector<double>& strengths,
                const std::vector<double>& allocations, double P_noise) {
  if (strengths.size() != allocations.size())
    throw std::invalid_argument("capacity: length mismatch");
  if (!(P_noise > 0)) throw std::domain_error("capacity: P_noise <= 0");
  double c = 0;
  for (std::size_t i = 0; i < strengths.size(); ++i) {
    if (strengths[i] < 0 || allocations[i] < 0)
      throw std::domain_error("capacity: negative input");
    c += std::log2(1.0 + allocations[i] * strengths[i] / P_noise);
  }
  return c;
}

CapacityReport capacity_bound(const BoundingGeometry3D& geom, int N, double SNR) {
  if (N < 1) throw std::invalid_argument("capacity_bound: N < 1");
  if (!(SNR > 0)) throw std::invalid_argument("capacity_bound: SNR <= 0");
  auto spec = strength_spectrum_3d(geom, default_n_max_3d(geom));
  std::vector<double> s;
  s.reserve(std::min<std::size_t>(N, spec.entries.size()));
  for (const auto& e : spec.entries) {
    if (static_cast<int>(s.size()) >= N) break;
    s.push_back(e.strength);
  }
  auto rep = waterfill(s, SNR, 1.0);
  rep.regime = CapacityRegime::exact;
  return rep;
}

double capacity_low_snr(const BoundingGeometry3D& geom, double SNR) {
  return SNR * std::log2(std::exp(1.0)) * max_channel_strength(geom);
}

double capacity_high_snr(const BoundingGeometry3D& geom, double SNR) {
  const double R = geom.core_radius();
  return 2.0 * std::log2(SNR) * geom.k * geom.k * R * R;
}

double capacity_antenna_limited(const BoundingGeometry3D& geom, double SNR,
                                int N_antenna) {
  if (N_antenna < 1)
    throw std::invalid_argument("capacity_antenna_limited: N_antenna < 1");
  return N_antenna *
         std::log2(SNR * max_channel_strength(geom) / double(N_antenna));
}

double piestun_ratio_sum(const ChannelSpectrum& spec) {
  if (spec.entries.empty())
    throw std::invalid_argument("piestun_ratio_sum: empty spectrum");
  if (spec.normalization == Normalization::sum)
    throw std::invalid_argument(
        "piestun_ratio_sum: needs a raw or max-normalized spectrum");
  const double mx = spec.max_strength();
  if (!(mx > 0))
    throw std::invalid_argument("piestun_ratio_sum: zero leading strength");
  double sum = 0;
  for (const auto& e : spec.entries) sum += e.strength / mx;
  return sum;
}

}  // namespace wavechan
