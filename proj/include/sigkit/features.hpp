#pragma once

#include "sigkit/core.hpp"
#include "sigkit/spectral.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sigkit {

struct FeatureVector {
  std::vector<std::string> names;
  Vector values;
  std::optional<std::string> label;
};

// Rows share the column names; written as CSV `name1,...,nameK,label`.
struct FeatureTable {
  std::vector<std::string> names;
  std::vector<FeatureVector> rows;
};

// The PSD is treated as a distribution over its frequency bins. All-zero PSDs throw DegenerateInput.
double spectral_centroid(const PsdEstimate& psd);
double spectral_spread(const PsdEstimate& psd);
// Base-2 Shannon entropy of the power normalized to unit sum.
double spectral_entropy(const PsdEstimate& psd);

struct PeakPower {
  double power = 0.0;
  double frequency = 0.0;
};

// Ties resolve to the lowest frequency.
PeakPower peak_power_frequency(const PsdEstimate& psd);

// [SC, SS, SE, PP, PF] of the Welch PSD of one segment.
FeatureVector psd_features(const Signal& segment, const WelchParams& params);
const std::vector<std::string>& psd_feature_names();

// Energies of the 2^level reconstructed WPT modes, natural leaf order, named mode_0 ...
FeatureVector wpt_energy_features(const Signal& segment, std::string_view wavelet, int level);
std::vector<std::string> wpt_feature_names(int level);

}  // namespace sigkit
