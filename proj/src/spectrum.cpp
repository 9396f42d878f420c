#include "wavechan/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavechan {

std::string ChannelLabel::text() const {
  switch (kind) {
    case Kind::q2d:
      return std::to_string(q);
    case Kind::nj3d:  // n/m/j
      return std::to_string(n) + "/" + std::to_string(m) + "/" +
             std::to_string(j);
    default:
      return std::to_string(q);
  }
}

void ChannelSpectrum::sort_descending() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const ChannelEntry& a, const ChannelEntry& b) {
                     return a.strength > b.strength;
                   });
}

double ChannelSpectrum::total() const {
  double t = 0;
  for (const auto& e : entries) t += e.strength;
  return t;
}

double ChannelSpectrum::max_strength() const {
  double m = 0;
  for (const auto& e : entries) m = std::max(m, e.strength);
  return m;
}

ChannelSpectrum ChannelSpectrum::normalized(Normalization how) const {
  if (how == Normalization::raw) return *this;
  const double denom = (how == Normalization::sum) ? total() : max_strength();
  if (!(denom > 0))
    throw std::invalid_argument("ChannelSpectrum: cannot normalize zero spectrum");
  ChannelSpectrum out = *this;
  for (auto& e : out.entries) e.strength /= denom;
  out.normalization = how;
  return out;
}

}  // namespace wavechan
