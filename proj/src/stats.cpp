#include "sigkit/stats.hpp"

#include <algorithm>
#include <cmath>

namespace sigkit {

DescriptiveStats descriptive_stats(const Signal& x) {
  const auto& s = x.samples();
  const double n = static_cast<double>(s.size());
  DescriptiveStats st;
  st.mean = s.sum() / n;
  st.variance = (s.array() - st.mean).square().sum() / n;
  st.energy = s.squaredNorm();
  st.average_power = st.energy / n;
  st.rms = std::sqrt(st.average_power);
  return st;
}

Vector instantaneous_power(const Signal& x) { return x.samples().array().square(); }

namespace {

// sum over n in [0, nx) with 0 <= n - k < ny of x[n] * y[n - k]
double lagged_product(const Vector& x, const Vector& y, Index k) {
  const Index lo = std::max<Index>(0, k);
  const Index hi = std::min<Index>(x.size(), y.size() + k);
  if (hi <= lo) return 0.0;
  return x.segment(lo, hi - lo).dot(y.segment(lo - k, hi - lo));
}

CorrelationResult correlate(const Vector& x, const Vector& y, Index max_lag) {
  CorrelationResult r;
  r.lags.reserve(2 * max_lag + 1);
  r.values.resize(2 * max_lag + 1);
  for (Index k = -max_lag; k <= max_lag; ++k) {
    r.lags.push_back(k);
    r.values[k + max_lag] = lagged_product(x, y, k);
  }
  return r;
}

}  // namespace

CorrelationResult autocorrelation(const Signal& x, Index max_lag) {
  if (max_lag < 0 || max_lag >= x.size())
    throw InvalidArgument("autocorrelation: max_lag must lie in [0, N)");
  CorrelationResult r = correlate(x.samples(), x.samples(), max_lag);
  // Enforce exact symmetry; both halves are the same sum in a different order.
  for (Index k = 1; k <= max_lag; ++k) r.values[max_lag - k] = r.values[max_lag + k];
  return r;
}

CorrelationResult cross_correlation(const Signal& x, const Signal& y, Index max_lag) {
  if (x.fs() != y.fs()) throw InvalidArgument("cross_correlation: sampling rates differ");
  if (max_lag < 0 || max_lag >= std::max(x.size(), y.size()))
    throw InvalidArgument("cross_correlation: max_lag out of range");
  return correlate(x.samples(), y.samples(), max_lag);
}

double correlation_coefficient(const Signal& x, const Signal& y) {
  if (x.size() != y.size()) throw InvalidArgument("correlation_coefficient: lengths differ");
  const Vector dx = x.samples().array() - x.samples().mean();
  const Vector dy = y.samples().array() - y.samples().mean();
  const double denom = std::sqrt(dx.squaredNorm() * dy.squaredNorm());
  if (denom == 0.0) throw DegenerateInput("correlation_coefficient: constant input");
  return std::clamp(dx.dot(dy) / denom, -1.0, 1.0);
}

double shannon_entropy(const Vector& p) {
  if (p.size() == 0) throw InvalidArgument("shannon_entropy: empty distribution");
  if ((p.array() < 0.0).any() || !p.allFinite())
    throw InvalidArgument("shannon_entropy: probabilities must be finite and non-negative");
  if (std::abs(p.sum() - 1.0) > 1e-9)
    throw InvalidArgument("shannon_entropy: probabilities must sum to 1");
  double h = 0.0;
  for (double pi : p)
    if (pi > 0.0) h -= pi * std::log2(pi);
  return std::clamp(h, 0.0, std::log2(static_cast<double>(p.size())));
}

double segment_entropy(const Signal& x, int n_bins) {
  if (n_bins < 2) throw InvalidArgument("segment_entropy: need at least 2 bins");
  const auto& s = x.samples();
  const double lo = s.minCoeff();
  const double hi = s.maxCoeff();
  if (hi == lo) return 0.0;

  Vector counts = Vector::Zero(n_bins);
  const double width = (hi - lo) / n_bins;
  for (double v : s) {
    auto bin = static_cast<Index>((v - lo) / width);
    counts[std::clamp<Index>(bin, 0, n_bins - 1)] += 1.0;
  }
  return shannon_entropy(counts / static_cast<double>(s.size()));
}

}  // namespace sigkit
