#pragma once

#include "sigkit/core.hpp"

#include <string>
#include <string_view>

namespace sigkit {

// All filters are length-preserving. MA, SG and median shrink their window symmetrically
// near the ends instead of padding.

enum class FilterKind { moving_average, savitzky_golay, median, bandpass, wavelet_threshold };
enum class ThresholdMode { hard, soft };

FilterKind parse_filter_kind(std::string_view name);
std::string to_string(FilterKind kind);
ThresholdMode parse_threshold_mode(std::string_view name);
std::string to_string(ThresholdMode mode);

struct FilterSpec {
  FilterKind kind = FilterKind::moving_average;
  Index window = 5;
  int poly_order = 2;
  double low = 0.5;
  double high = 30.0;
  std::string wavelet = "db4";
  int level = 4;
  ThresholdMode mode = ThresholdMode::soft;
};

Signal moving_average(const Signal& x, Index window);
Signal savitzky_golay(const Signal& x, Index window, int poly_order);
Signal median_filter(const Signal& x, Index window);

// Least-squares smoothing weights for a centered window of 2*half+1 samples.
Vector savitzky_golay_coefficients(Index half, int poly_order);

// Linear-phase windowed-sinc (Hamming) band-pass with unit gain at the band center.
Vector bandpass_taps(double low, double high, double fs, Index n_taps);
Index bandpass_tap_count(double low, double fs, Index signal_len);
// Output aligned with the input (group delay removed).
Signal bandpass(const Signal& x, double low, double high);

// Universal threshold: sigma * sqrt(2 ln N) with sigma = median(|cD1|) / 0.6745.
double universal_threshold(const Signal& x, std::string_view wavelet);
Signal wavelet_threshold(const Signal& x, std::string_view wavelet, int level, ThresholdMode mode,
                         double threshold);
Signal wavelet_denoise(const Signal& x, std::string_view wavelet, int level,
                       ThresholdMode mode = ThresholdMode::soft);

Signal apply_filter(const Signal& x, const FilterSpec& spec);

}  // namespace sigkit
