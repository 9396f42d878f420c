#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wavechan {

// One channel per entry; degenerate channels appear as repeated entries so
// that ranks match the staircase plots directly. `degeneracy` records the
// size of the symmetry class the entry belongs to (2 for +-q pairs in 2D,
// 2n+1 for the azimuthal m-multiplet in 3D, 1 for plain ranks).
struct ChannelLabel {
  enum class Kind : std::uint8_t { rank, q2d, nj3d };
  Kind kind = Kind::rank;
  int q = 0;  // rank index or signed 2D order
  int n = 0;
  int m = 0;
  int j = 0;
  std::string text() const;
};

struct ChannelEntry {
  ChannelLabel label;
  double strength = 0;
  int degeneracy = 1;
  bool asymptotic = false;  // value from the large-order asymptote
};

enum class Normalization { raw, sum, max };

struct ChannelSpectrum {
  std::vector<ChannelEntry> entries;  // sorted non-increasing by strength
  Normalization normalization = Normalization::raw;
  std::map<std::string, std::string> metadata;

  void sort_descending();
  double total() const;  // plain sum over entries (degeneracy is expanded)
  double max_strength() const;
  // Rescale strengths; `raw` spectra become `sum` or `max` normalized.
  ChannelSpectrum normalized(Normalization how) const;
};

}  // namespace wavechan
