#pragma once

#include "sigkit/core.hpp"
#include "sigkit/spectral.hpp"

#include <optional>

namespace sigkit {

// Lag-domain smoothing window h(tau), symmetric with h(0) = 1. Length must be odd.
struct LagWindow {
  WindowKind kind = WindowKind::hamming;
  Index length = 0;
};

struct WvdConfig {
  bool analytic_first = true;
  std::optional<LagWindow> smoothing_window;
};

// Hamming window of length about N/4, rounded to odd.
LagWindow default_lag_window(Index n);

// Discrete Wigner-Ville distribution. Column n is the lag FFT of z[n+m] conj(z[n-m]) over the
// largest symmetric lag range at n. The frequency axis has N bins over [0, fs/2) and values are
// scaled so that sum_k W[k, n] * df equals |z[n]|^2. A smoothing window, if set, is applied.
TimeFrequencyMap wvd(const Signal& x, const WvdConfig& config = {});

// Pseudo-WVD; throws InvalidArgument when no smoothing window is configured.
TimeFrequencyMap pwvd(const Signal& x, const WvdConfig& config);

}  // namespace sigkit
