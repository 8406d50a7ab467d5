#include "sigkit/spectral.hpp"

#include "sigkit/errors.hpp"
#include "sigkit/fft.hpp"

#include <cmath>

namespace sigkit {

WindowKind parse_window(std::string_view name) {
  if (name == "rect" || name == "boxcar" || name == "rectangular") return WindowKind::rect;
  if (name == "hann" || name == "hanning") return WindowKind::hann;
  if (name == "hamming") return WindowKind::hamming;
  throw InvalidArgument("unknown window '" + std::string(name) + "'");
}

std::string to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::rect: return "rect";
    case WindowKind::hann: return "hann";
    case WindowKind::hamming: return "hamming";
  }
  return "rect";
}

Vector make_window(WindowKind kind, Index n, bool periodic) {
  if (n < 1) throw InvalidArgument("window length must be at least 1");
  if (kind == WindowKind::rect || n == 1) return Vector::Ones(n);
  const double denom = static_cast<double>(periodic ? n : n - 1);
  const double a0 = kind == WindowKind::hann ? 0.5 : 0.54;
  Vector w(n);
  for (Index i = 0; i < n; ++i)
    w[i] = a0 - (1.0 - a0) * std::cos(2.0 * kPi * static_cast<double>(i) / denom);
  return w;
}

WelchParams WelchParams::from_fraction(WindowKind window, Index seg_len, double overlap, Index nfft) {
  if (!(overlap >= 0.0 && overlap < 1.0)) throw InvalidArgument("overlap must lie in [0, 1)");
  return {window, seg_len, seg_len - segment_hop(seg_len, overlap), nfft};
}

ComplexSpectrum fft(const Vector& x, Index nfft, double fs) {
  return {rdft<double>(x, nfft), nfft, fs};
}

ComplexSpectrum fft(const Signal& x, Index nfft) { return fft(x.samples(), nfft, x.fs()); }

ComplexVector ifft(const ComplexSpectrum& spectrum) { return idft<double>(spectrum.values); }

Vector frequency_bins(Index nfft, double fs) {
  if (nfft < 1) throw InvalidArgument("nfft must be at least 1");
  const Index bins = nfft / 2 + 1;
  Vector f(bins);
  for (Index k = 0; k < bins; ++k) f[k] = static_cast<double>(k) * fs / static_cast<double>(nfft);
  return f;
}

namespace {

// Interior bins (0 < k < nfft/2, and k = nfft/2 when nfft is odd) carry their negative mirror.
bool has_mirror(Index k, Index nfft) { return k > 0 && 2 * k != nfft; }

Vector one_sided_power(const ComplexVector& spec, Index nfft) {
  const Index bins = nfft / 2 + 1;
  Vector p(bins);
  for (Index k = 0; k < bins; ++k) {
    p[k] = std::norm(spec[k]);
    if (has_mirror(k, nfft)) p[k] *= 2.0;
  }
  return p;
}

PsdEstimate averaged_periodogram(const Vector& x, double fs, const WelchParams& params,
                                 PsdMethod method) {
  const Index n = x.size();
  if (params.seg_len < 1 || params.seg_len > n)
    throw InvalidArgument("segment length must lie in [1, N]");
  if (params.noverlap < 0 || params.noverlap >= params.seg_len)
    throw InvalidArgument("overlap must be smaller than the segment length");
  if (params.nfft < params.seg_len) throw InvalidArgument("nfft must be >= segment length");

  const Vector w = make_window(params.window, params.seg_len, true);
  const double scale = 1.0 / (fs * w.squaredNorm());
  const Index hop = params.seg_len - params.noverlap;

  PsdEstimate est;
  est.freqs = frequency_bins(params.nfft, fs);
  est.density = Vector::Zero(est.freqs.size());
  est.method = method;
  est.params = params;
  est.fs = fs;
  est.segments = 0;
  for (Index start = 0; start + params.seg_len <= n; start += hop) {
    const Vector seg = x.segment(start, params.seg_len).cwiseProduct(w);
    est.density += one_sided_power(rdft<double>(seg, params.nfft), params.nfft);
    ++est.segments;
  }
  est.density *= scale / static_cast<double>(est.segments);
  return est;
}

}  // namespace

AmplitudeSpectrum amplitude_spectrum(const Signal& x, Index nfft) {
  const ComplexSpectrum spec = fft(x, nfft);
  const double n = static_cast<double>(std::min<Index>(x.size(), nfft));
  AmplitudeSpectrum out;
  out.freqs = frequency_bins(nfft, x.fs());
  out.amplitudes.resize(out.freqs.size());
  for (Index k = 0; k < out.freqs.size(); ++k)
    out.amplitudes[k] = std::abs(spec.values[k]) / n * (has_mirror(k, nfft) ? 2.0 : 1.0);
  out.nfft = nfft;
  out.fs = x.fs();
  return out;
}

TimeFrequencyMap stft(const Signal& x, WindowKind window, Index seg_len, double overlap, Index nfft) {
  if (seg_len < 1 || seg_len > x.size()) throw InvalidArgument("stft: segment length must lie in [1, N]");
  if (nfft < seg_len) throw InvalidArgument("stft: nfft must be >= segment length");
  if (!(overlap >= 0.0 && overlap < 1.0)) throw InvalidArgument("stft: overlap must lie in [0, 1)");

  const Vector w = make_window(window, seg_len, true);
  const Index hop = segment_hop(seg_len, overlap);
  const Index columns = (x.size() - seg_len) / hop + 1;

  TimeFrequencyMap map;
  map.kind = TfKind::spectrogram;
  map.freqs = frequency_bins(nfft, x.fs());
  map.times.resize(columns);
  map.values.resize(map.freqs.size(), columns);
  for (Index c = 0; c < columns; ++c) {
    const Index start = c * hop;
    const Vector seg = x.samples().segment(start, seg_len).cwiseProduct(w);
    const ComplexVector spec = rdft<double>(seg, nfft);
    map.values.col(c) = spec.head(map.freqs.size()).cwiseAbs();
    map.times[c] = (static_cast<double>(start) + static_cast<double>(seg_len) / 2.0) / x.fs();
  }
  return map;
}

PsdEstimate periodogram(const Signal& x, Index nfft) {
  if (nfft < 1) throw InvalidArgument("nfft must be at least 1");
  const Index used = std::min<Index>(x.size(), nfft);
  return averaged_periodogram(x.samples().head(used), x.fs(), {WindowKind::rect, used, 0, nfft},
                              PsdMethod::periodogram);
}

PsdEstimate welch(const Signal& x, const WelchParams& params) {
  return averaged_periodogram(x.samples(), x.fs(), params, PsdMethod::welch);
}

PsdEstimate welch(const Signal& x, WindowKind window, Index seg_len, double overlap, Index nfft) {
  return welch(x, WelchParams::from_fraction(window, seg_len, overlap, nfft));
}

}  // namespace sigkit
