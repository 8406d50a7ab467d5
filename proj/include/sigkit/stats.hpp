#pragma once

#include "sigkit/core.hpp"
#include "sigkit/errors.hpp"

#include <vector>

namespace sigkit {

// Population statistics; rms^2 = variance + mean^2 and energy = average_power * N.
struct DescriptiveStats {
  double mean = 0.0;
  double variance = 0.0;
  double rms = 0.0;
  double energy = 0.0;
  double average_power = 0.0;
};

// R[k] for k = -K..K, lags strictly increasing.
struct CorrelationResult {
  std::vector<Index> lags;
  Vector values;

  double at(Index lag) const { return values[lag - lags.front()]; }
};

DescriptiveStats descriptive_stats(const Signal& x);
Vector instantaneous_power(const Signal& x);

// Finite sums over the overlapping samples only: R[k] = sum_n x[n] x[n-k].
CorrelationResult autocorrelation(const Signal& x, Index max_lag);
// R_xy[k] = sum_n x[n] y[n-k]. Peaks at +d when x is y delayed by d samples.
CorrelationResult cross_correlation(const Signal& x, const Signal& y, Index max_lag);

// Zero-lag Pearson coefficient. Throws DegenerateInput when either input is constant.
double correlation_coefficient(const Signal& x, const Signal& y);

// Full linear convolution, length x.size() + h.size() - 1.
template <typename Scalar>
VectorX<Scalar> convolve(const VectorX<Scalar>& x, const VectorX<Scalar>& h) {
  if (x.size() == 0 || h.size() == 0) throw InvalidArgument("convolve: empty operand");
  VectorX<Scalar> out = VectorX<Scalar>::Zero(x.size() + h.size() - 1);
  for (Index i = 0; i < x.size(); ++i)
    out.segment(i, h.size()) += x[i] * h;
  return out;
}

// Base-2 entropy of a probability vector (sum must be 1 within 1e-9); 0*log(0) is 0.
double shannon_entropy(const Vector& p);

// Histogram estimator: n_bins equal-width bins over [min, max].
double segment_entropy(const Signal& x, int n_bins = 16);

}  // namespace sigkit
