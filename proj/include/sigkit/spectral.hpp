#pragma once

#include "sigkit/core.hpp"

#include <string>
#include <string_view>

namespace sigkit {

enum class WindowKind { rect, hann, hamming };

WindowKind parse_window(std::string_view name);
std::string to_string(WindowKind kind);

// periodic = true gives the DFT-even variant used for spectral estimation;
// periodic = false gives the symmetric variant (peak of exactly 1 at the center for odd n).
Vector make_window(WindowKind kind, Index n, bool periodic = true);

struct ComplexSpectrum {
  ComplexVector values;
  Index nfft = 0;
  double fs = 1.0;
};

// One-sided amplitude spectrum in signal units. Interior bins are doubled; DC and Nyquist are not.
struct AmplitudeSpectrum {
  Vector freqs;
  Vector amplitudes;
  Index nfft = 0;
  double fs = 1.0;
};

enum class PsdMethod { periodogram, welch };

struct WelchParams {
  WindowKind window = WindowKind::hann;
  Index seg_len = 512;
  Index noverlap = 256;  // samples shared by consecutive segments
  Index nfft = 1024;

  // noverlap derived from a fraction with the same hop rule as segment().
  static WelchParams from_fraction(WindowKind window, Index seg_len, double overlap, Index nfft);
};

// One-sided density in units^2/Hz over nfft/2 + 1 bins.
struct PsdEstimate {
  Vector freqs;
  Vector density;
  PsdMethod method = PsdMethod::periodogram;
  WelchParams params;
  double fs = 1.0;
  Index segments = 1;

  double delta_f() const { return fs / static_cast<double>(params.nfft); }
};

enum class TfKind { spectrogram, scalogram, wvd, hilbert_spectrum };

// values is freqs.size() x times.size(). For scalograms `scales` holds the row scales and
// `freqs` their center frequencies.
struct TimeFrequencyMap {
  Vector times;
  Vector freqs;
  Vector scales;
  Matrix values;
  TfKind kind = TfKind::spectrogram;
};

ComplexSpectrum fft(const Signal& x, Index nfft);
ComplexSpectrum fft(const Vector& x, Index nfft, double fs = 1.0);
ComplexVector ifft(const ComplexSpectrum& spectrum);

Vector frequency_bins(Index nfft, double fs);
AmplitudeSpectrum amplitude_spectrum(const Signal& x, Index nfft);

// Column j holds |FFT| of the j-th windowed segment; times are segment centers.
TimeFrequencyMap stft(const Signal& x, WindowKind window, Index seg_len, double overlap, Index nfft);

PsdEstimate periodogram(const Signal& x, Index nfft);
PsdEstimate welch(const Signal& x, const WelchParams& params);
PsdEstimate welch(const Signal& x, WindowKind window, Index seg_len, double overlap, Index nfft);

}  // namespace sigkit
