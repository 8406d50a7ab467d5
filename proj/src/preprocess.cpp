#include "sigkit/preprocess.hpp"

#include "sigkit/errors.hpp"
#include "sigkit/stats.hpp"
#include "sigkit/wavelet.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

namespace sigkit {

FilterKind parse_filter_kind(std::string_view name) {
  if (name == "moving_average") return FilterKind::moving_average;
  if (name == "savitzky_golay") return FilterKind::savitzky_golay;
  if (name == "median") return FilterKind::median;
  if (name == "bandpass") return FilterKind::bandpass;
  if (name == "wavelet_threshold") return FilterKind::wavelet_threshold;
  throw InvalidArgument("unknown filter kind '" + std::string(name) + "'");
}

std::string to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::moving_average: return "moving_average";
    case FilterKind::savitzky_golay: return "savitzky_golay";
    case FilterKind::median: return "median";
    case FilterKind::bandpass: return "bandpass";
    case FilterKind::wavelet_threshold: return "wavelet_threshold";
  }
  return "moving_average";
}

ThresholdMode parse_threshold_mode(std::string_view name) {
  if (name == "hard") return ThresholdMode::hard;
  if (name == "soft") return ThresholdMode::soft;
  throw InvalidArgument("unknown threshold mode '" + std::string(name) + "'");
}

std::string to_string(ThresholdMode mode) { return mode == ThresholdMode::hard ? "hard" : "soft"; }

namespace {

void check_window(Index window, Index n) {
  if (window < 3) throw InvalidArgument("filter window must be at least 3");
  if (window % 2 == 0) throw InvalidArgument("filter window must be odd");
  if (window > n) throw InvalidArgument("filter window exceeds signal length");
}

Index local_half(Index i, Index half, Index n) { return std::min({half, i, n - 1 - i}); }

}  // namespace

Signal moving_average(const Signal& x, Index window) {
  const Index n = x.size();
  check_window(window, n);
  const Index half = window / 2;
  const auto& s = x.samples();
  Vector out(n);
  for (Index i = 0; i < n; ++i) {
    const Index h = local_half(i, half, n);
    out[i] = s.segment(i - h, 2 * h + 1).sum() / static_cast<double>(2 * h + 1);
  }
  return Signal(std::move(out), x.fs());
}

Vector savitzky_golay_coefficients(Index half, int poly_order) {
  const Index len = 2 * half + 1;
  if (poly_order < 0 || poly_order >= len)
    throw InvalidArgument("polynomial order must be smaller than the window");
  // Abscissae scaled to [-1, 1] keep the Vandermonde matrix well conditioned.
  Matrix design(len, poly_order + 1);
  for (Index i = 0; i < len; ++i) {
    const double t = half == 0 ? 0.0 : static_cast<double>(i - half) / static_cast<double>(half);
    double p = 1.0;
    for (int j = 0; j <= poly_order; ++j) {
      design(i, j) = p;
      p *= t;
    }
  }
  const Matrix pinv = design.completeOrthogonalDecomposition().pseudoInverse();
  return pinv.row(0).transpose();
}

Signal savitzky_golay(const Signal& x, Index window, int poly_order) {
  const Index n = x.size();
  check_window(window, n);
  if (poly_order < 0 || poly_order >= window)
    throw InvalidArgument("polynomial order must be smaller than the window");
  // A degree-0 least-squares fit is the window mean.
  if (poly_order == 0) return moving_average(x, window);

  const Index half = window / 2;
  std::map<Index, Vector> coeffs;
  const auto& s = x.samples();
  Vector out(n);
  for (Index i = 0; i < n; ++i) {
    const Index h = local_half(i, half, n);
    auto it = coeffs.find(h);
    if (it == coeffs.end())
      it = coeffs.emplace(h, savitzky_golay_coefficients(h, std::min<int>(poly_order, 2 * h))).first;
    out[i] = it->second.dot(s.segment(i - h, 2 * h + 1));
  }
  return Signal(std::move(out), x.fs());
}

Signal median_filter(const Signal& x, Index window) {
  const Index n = x.size();
  check_window(window, n);
  const Index half = window / 2;
  const auto& s = x.samples();
  std::vector<double> buf;
  buf.reserve(static_cast<std::size_t>(window));
  Vector out(n);
  for (Index i = 0; i < n; ++i) {
    const Index h = local_half(i, half, n);
    buf.assign(s.data() + (i - h), s.data() + (i + h + 1));
    auto mid = buf.begin() + h;
    std::nth_element(buf.begin(), mid, buf.end());
    out[i] = *mid;
  }
  return Signal(std::move(out), x.fs());
}

Index bandpass_tap_count(double low, double fs, Index signal_len) {
  auto taps = static_cast<Index>(std::ceil(4.0 * fs / low));
  if (taps % 2 == 0) ++taps;
  Index bound = signal_len / 2;
  if (bound % 2 == 0) --bound;
  return std::max<Index>(3, std::min(taps, bound));
}

Vector bandpass_taps(double low, double high, double fs, Index n_taps) {
  if (n_taps < 3 || n_taps % 2 == 0) throw InvalidArgument("band-pass tap count must be odd and >= 3");
  const Index mid = n_taps / 2;
  const double f1 = low / fs;
  const double f2 = high / fs;
  const Vector w = make_window(WindowKind::hamming, n_taps, false);
  auto lowpass = [](double fc, double m) {
    return m == 0.0 ? 2.0 * fc : std::sin(2.0 * kPi * fc * m) / (kPi * m);
  };
  Vector h(n_taps);
  for (Index i = 0; i < n_taps; ++i) {
    const double m = static_cast<double>(i - mid);
    h[i] = w[i] * (lowpass(f2, m) - lowpass(f1, m));
  }
  // Unit magnitude at the band center.
  const double fc = 0.5 * (f1 + f2);
  std::complex<double> gain = 0.0;
  for (Index i = 0; i < n_taps; ++i)
    gain += h[i] * std::polar(1.0, -2.0 * kPi * fc * static_cast<double>(i));
  return h / std::abs(gain);
}

Signal bandpass(const Signal& x, double low, double high) {
  if (!(low > 0.0 && low < high && high < x.fs() / 2.0))
    throw InvalidArgument("band-pass edges must satisfy 0 < low < high < fs/2");
  const Index n_taps = bandpass_tap_count(low, x.fs(), x.size());
  const Vector h = bandpass_taps(low, high, x.fs(), n_taps);
  const Vector full = convolve<double>(x.samples(), h);
  return Signal(full.segment(n_taps / 2, x.size()), x.fs());
}

namespace {

double median_of(std::vector<double> v) {
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(v.begin(), mid);
  return 0.5 * (lower + upper);
}

double apply_threshold(double c, double t, ThresholdMode mode) {
  const double a = std::abs(c);
  if (mode == ThresholdMode::hard) return a < t ? 0.0 : c;
  return a <= t ? 0.0 : std::copysign(a - t, c);
}

}  // namespace

double universal_threshold(const Signal& x, std::string_view wavelet) {
  const WaveletBank& bank = wavelet_bank(wavelet);
  Vector a;
  Vector d;
  dwt_step(x.samples(), bank, a, d);
  std::vector<double> mags(static_cast<std::size_t>(d.size()));
  for (Index i = 0; i < d.size(); ++i) mags[i] = std::abs(d[i]);
  const double sigma = median_of(std::move(mags)) / 0.6745;
  return sigma * std::sqrt(2.0 * std::log(static_cast<double>(x.size())));
}

Signal wavelet_threshold(const Signal& x, std::string_view wavelet, int level, ThresholdMode mode,
                         double threshold) {
  if (!(threshold >= 0.0)) throw InvalidArgument("threshold must be non-negative");
  DwtTree tree = dwt(x, wavelet, level);
  if (threshold > 0.0)
    for (auto& d : tree.details) d = d.unaryExpr([&](double c) { return apply_threshold(c, threshold, mode); });
  return idwt(tree);
}

Signal wavelet_denoise(const Signal& x, std::string_view wavelet, int level, ThresholdMode mode) {
  return wavelet_threshold(x, wavelet, level, mode, universal_threshold(x, wavelet));
}

Signal apply_filter(const Signal& x, const FilterSpec& spec) {
  switch (spec.kind) {
    case FilterKind::moving_average: return moving_average(x, spec.window);
    case FilterKind::savitzky_golay: return savitzky_golay(x, spec.window, spec.poly_order);
    case FilterKind::median: return median_filter(x, spec.window);
    case FilterKind::bandpass: return bandpass(x, spec.low, spec.high);
    case FilterKind::wavelet_threshold: return wavelet_denoise(x, spec.wavelet, spec.level, spec.mode);
  }
  throw InvalidArgument("unhandled filter kind");
}

}  // namespace sigkit
