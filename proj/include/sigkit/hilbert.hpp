#pragma once

#include "sigkit/core.hpp"

namespace sigkit {

// x + j*H{x}. The real part reproduces the input.
struct AnalyticSignal {
  ComplexVector values;
  double fs = 1.0;
};

// FFT construction: negative frequencies zeroed, positive doubled, DC and Nyquist kept.
AnalyticSignal analytic_signal(const Signal& x);
AnalyticSignal analytic_signal(const Vector& x, double fs);

Vector envelope(const AnalyticSignal& a);

// Unwrapped: successive differences never exceed pi in magnitude.
Vector instantaneous_phase(const AnalyticSignal& a);

// (fs / 2pi) * d(theta)/dn by central differences, one-sided at the ends.
Vector instantaneous_frequency(const AnalyticSignal& a);

Vector unwrap(const Vector& phase);

}  // namespace sigkit
