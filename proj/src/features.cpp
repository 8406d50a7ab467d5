#include "sigkit/features.hpp"

#include "sigkit/errors.hpp"
#include "sigkit/wavelet.hpp"

#include <algorithm>
#include <cmath>

namespace sigkit {

namespace {

double total_power(const PsdEstimate& psd) {
  if (psd.density.size() == 0 || psd.density.size() != psd.freqs.size())
    throw InvalidArgument("PSD frequency and density lengths differ");
  if ((psd.density.array() < 0.0).any()) throw InvalidArgument("PSD has negative density");
  const double total = psd.density.sum();
  if (!(total > 0.0)) throw DegenerateInput("PSD carries no power");
  return total;
}

}  // namespace

double spectral_centroid(const PsdEstimate& psd) {
  const double total = total_power(psd);
  const double sc = psd.freqs.dot(psd.density) / total;
  return std::clamp(sc, psd.freqs.minCoeff(), psd.freqs.maxCoeff());
}

double spectral_spread(const PsdEstimate& psd) {
  const double total = total_power(psd);
  const double sc = spectral_centroid(psd);
  const double var = ((psd.freqs.array() - sc).square() * psd.density.array()).sum() / total;
  return std::sqrt(std::max(0.0, var));
}

double spectral_entropy(const PsdEstimate& psd) {
  total_power(psd);
  // Normalizing by the peak first keeps flat spectra exact: r = 1 everywhere gives log2(K).
  // H = log2(R) - (1/R) sum r log2 r, with r = P / max(P) and R = sum r.
  const Vector r = psd.density / psd.density.maxCoeff();
  const double big_r = r.sum();
  double acc = 0.0;
  for (double v : r)
    if (v > 0.0) acc += v * std::log2(v);
  const double h = std::log2(big_r) - acc / big_r;
  return std::clamp(h, 0.0, std::log2(static_cast<double>(r.size())));
}

PeakPower peak_power_frequency(const PsdEstimate& psd) {
  total_power(psd);
  Index best = 0;
  for (Index k = 1; k < psd.density.size(); ++k)
    if (psd.density[k] > psd.density[best]) best = k;
  return {psd.density[best], psd.freqs[best]};
}

const std::vector<std::string>& psd_feature_names() {
  static const std::vector<std::string> names = {"SC", "SS", "SE", "PP", "PF"};
  return names;
}

FeatureVector psd_features(const Signal& segment, const WelchParams& params) {
  const PsdEstimate psd = welch(segment, params);
  const PeakPower peak = peak_power_frequency(psd);
  FeatureVector f;
  f.names = psd_feature_names();
  f.values.resize(5);
  f.values << spectral_centroid(psd), spectral_spread(psd), spectral_entropy(psd), peak.power,
      peak.frequency;
  return f;
}

std::vector<std::string> wpt_feature_names(int level) {
  std::vector<std::string> names;
  for (int i = 0; i < (1 << level); ++i) names.push_back("mode_" + std::to_string(i));
  return names;
}

FeatureVector wpt_energy_features(const Signal& segment, std::string_view wavelet, int level) {
  FeatureVector f;
  f.names = wpt_feature_names(level);
  f.values = mode_energy(wpt_modes(segment, wavelet, level));
  return f;
}

}  // namespace sigkit
