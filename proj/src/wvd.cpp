#include "sigkit/wvd.hpp"

#include "sigkit/errors.hpp"
#include "sigkit/fft.hpp"
#include "sigkit/hilbert.hpp"

namespace sigkit {

LagWindow default_lag_window(Index n) {
  Index len = std::max<Index>(3, n / 4);
  if (len % 2 == 0) ++len;
  return {WindowKind::hamming, len};
}

namespace {

TimeFrequencyMap compute(const Signal& x, const WvdConfig& config) {
  const Index n = x.size();
  const ComplexVector z = config.analytic_first ? analytic_signal(x).values
                                                : ComplexVector(x.samples().cast<std::complex<double>>());

  Vector lag_weights;
  Index lag_limit = n;
  if (config.smoothing_window) {
    const LagWindow& lw = *config.smoothing_window;
    if (lw.length < 1 || lw.length % 2 == 0) throw InvalidArgument("lag window length must be odd");
    lag_weights = make_window(lw.kind, lw.length, false);
    lag_limit = lw.length / 2;
  }

  const double df = x.fs() / (2.0 * static_cast<double>(n));
  TimeFrequencyMap map;
  map.kind = TfKind::wvd;
  map.times.resize(n);
  map.freqs.resize(n);
  for (Index i = 0; i < n; ++i) {
    map.times[i] = static_cast<double>(i) / x.fs();
    map.freqs[i] = static_cast<double>(i) * df;
  }
  map.values.resize(n, n);

  ComplexVector kernel(n);
  for (Index t = 0; t < n; ++t) {
    kernel.setZero();
    const Index max_lag = std::min({t, n - 1 - t, lag_limit, (n - 1) / 2});
    for (Index m = -max_lag; m <= max_lag; ++m) {
      std::complex<double> v = z[t + m] * std::conj(z[t - m]);
      if (lag_weights.size() > 0) v *= lag_weights[m + lag_weights.size() / 2];
      kernel[m >= 0 ? m : n + m] = v;
    }
    const ComplexVector spec = dft<double>(kernel);
    map.values.col(t) = spec.real() / (static_cast<double>(n) * df);
  }
  return map;
}

}  // namespace

TimeFrequencyMap wvd(const Signal& x, const WvdConfig& config) { return compute(x, config); }

TimeFrequencyMap pwvd(const Signal& x, const WvdConfig& config) {
  if (!config.smoothing_window) throw InvalidArgument("pwvd: smoothing window required");
  return compute(x, config);
}

}  // namespace sigkit
