#pragma once

#include "sigkit/core.hpp"
#include "sigkit/spectral.hpp"

#include <vector>

namespace sigkit {

struct SiftConfig {
  int max_imfs = 12;
  int max_sift_iters = 100;
  // Cauchy-type criterion: sum (h_prev - h)^2 / sum h_prev^2 < sd_threshold.
  double sd_threshold = 0.2;
  // Stop once the residual carries less than this fraction of the input energy.
  double residual_energy_ratio = 1e-8;
  // Keep sifting until |#extrema - #zero crossings| <= 1 as well as the SD criterion.
  bool enforce_extrema_count = true;
  // And until the envelope mean is small: interior RMS of (upper+lower)/2 at most this fraction of h's.
  bool enforce_mean_envelope = true;
  double mean_envelope_ratio = 0.05;
};

struct Extrema {
  std::vector<Index> maxima;
  std::vector<Index> minima;
};

// Sum of imfs plus residual reproduces the input up to the subtraction chain's rounding.
struct ImfSet {
  std::vector<Signal> imfs;
  Signal residual;
  std::vector<int> sift_counts;

  Vector reconstruct() const;
};

struct SiftResult {
  Vector imf;
  int iterations = 0;
};

// Interior strict extrema by three-point comparison; a plateau counts once, at its midpoint.
Extrema find_extrema(const Vector& x);
Index count_zero_crossings(const Vector& x);

// Natural cubic spline through (knot_x, knot_y), evaluated at 0, 1, ..., n-1.
Vector natural_cubic_spline(const std::vector<double>& knot_x, const std::vector<double>& knot_y, Index n);

// Spline through x at the given indices. With mirror_ends the two knots nearest each end are
// reflected across that end before fitting.
Vector spline_envelope(const Vector& x, const std::vector<Index>& knots, bool mirror_ends = true);

// RMS of the envelope mean over RMS of h, both over the interior (2% trimmed from each end).
double mean_envelope_ratio(const Vector& h, const Vector& mean);

// Throws InsufficientExtrema when x has fewer than two maxima or two minima.
SiftResult sift(const Vector& x, const SiftConfig& config = {});

ImfSet emd(const Signal& x, const SiftConfig& config = {});

struct HilbertSpectrum {
  TimeFrequencyMap map;
  ImfSet decomposition;
  // Samples whose instantaneous frequency fell outside [0, fs/2) and were clipped to an edge row.
  Index clipped = 0;
};

// Per-IMF instantaneous energy A^2 accumulated on a linear time x frequency grid over [0, fs/2).
HilbertSpectrum hht(const Signal& x, const SiftConfig& config = {}, Index freq_bins = 256,
                    Index time_bins = 128);

}  // namespace sigkit
