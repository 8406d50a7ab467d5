#include "sigkit/hilbert.hpp"

#include "sigkit/errors.hpp"
#include "sigkit/fft.hpp"

#include <cmath>

namespace sigkit {

AnalyticSignal analytic_signal(const Vector& x, double fs) {
  const Index n = x.size();
  if (n == 0) throw InvalidArgument("analytic_signal: empty input");
  ComplexVector spec = rdft<double>(x, n);
  // Bins 1..ceil(n/2)-1 are doubled; bin n/2 (even n) and DC stay; the rest are zeroed.
  const Index positive_end = (n + 1) / 2;
  for (Index k = 1; k < positive_end; ++k) spec[k] *= 2.0;
  const Index negative_start = n / 2 + 1;
  for (Index k = negative_start; k < n; ++k) spec[k] = 0.0;

  AnalyticSignal a;
  a.values = idft<double>(spec);
  a.values.real() = x;
  a.fs = fs;
  return a;
}

AnalyticSignal analytic_signal(const Signal& x) { return analytic_signal(x.samples(), x.fs()); }

Vector envelope(const AnalyticSignal& a) { return a.values.cwiseAbs(); }

Vector unwrap(const Vector& phase) {
  Vector out = phase;
  double offset = 0.0;
  for (Index i = 1; i < phase.size(); ++i) {
    const double d = phase[i] - phase[i - 1];
    // Map the raw step into (-pi, pi].
    double wrapped = d - 2.0 * kPi * std::floor((d + kPi) / (2.0 * kPi));
    if (wrapped == -kPi && d > 0.0) wrapped = kPi;
    offset += wrapped - d;
    out[i] = phase[i] + offset;
  }
  return out;
}

Vector instantaneous_phase(const AnalyticSignal& a) {
  Vector raw(a.values.size());
  for (Index i = 0; i < raw.size(); ++i) raw[i] = std::arg(a.values[i]);
  return unwrap(raw);
}

Vector instantaneous_frequency(const AnalyticSignal& a) {
  const Vector theta = instantaneous_phase(a);
  const Index n = theta.size();
  Vector f = Vector::Zero(n);
  if (n < 2) return f;
  const double k = a.fs / (2.0 * kPi);
  f[0] = (theta[1] - theta[0]) * k;
  f[n - 1] = (theta[n - 1] - theta[n - 2]) * k;
  for (Index i = 1; i + 1 < n; ++i) f[i] = 0.5 * (theta[i + 1] - theta[i - 1]) * k;
  return f;
}

}  // namespace sigkit
