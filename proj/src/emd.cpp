#include "sigkit/emd.hpp"

#include "sigkit/errors.hpp"
#include "sigkit/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sigkit {

Extrema find_extrema(const Vector& x) {
  Extrema e;
  const Index n = x.size();
  if (n < 3) return e;
  Index i = 1;
  while (i < n && x[i] == x[0]) ++i;
  while (i < n - 1) {
    const bool rising = x[i] > x[i - 1];
    Index j = i;
    while (j + 1 < n && x[j + 1] == x[i]) ++j;
    if (j + 1 >= n) break;
    const bool falling = x[j + 1] < x[j];
    if (rising && falling) e.maxima.push_back((i + j) / 2);
    else if (!rising && !falling) e.minima.push_back((i + j) / 2);
    i = j + 1;
  }
  return e;
}

Index count_zero_crossings(const Vector& x) {
  Index count = 0;
  int prev = 0;
  for (double v : x) {
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

Vector natural_cubic_spline(const std::vector<double>& knot_x, const std::vector<double>& knot_y, Index n) {
  const std::size_t m = knot_x.size();
  if (m < 2 || knot_y.size() != m) throw InsufficientExtrema("spline needs at least two knots");

  // Second derivatives from the tridiagonal system with zero end moments.
  std::vector<double> h(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    h[i] = knot_x[i + 1] - knot_x[i];
    if (!(h[i] > 0.0)) throw InvalidArgument("spline knots must be strictly increasing");
  }
  std::vector<double> moments(m, 0.0);
  if (m > 2) {
    const std::size_t k = m - 2;
    std::vector<double> diag(k), upper(k), rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
      diag[i] = 2.0 * (h[i] + h[i + 1]);
      upper[i] = h[i + 1];
      rhs[i] = 6.0 * ((knot_y[i + 2] - knot_y[i + 1]) / h[i + 1] - (knot_y[i + 1] - knot_y[i]) / h[i]);
    }
    for (std::size_t i = 1; i < k; ++i) {
      const double w = h[i] / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    moments[k] = rhs[k - 1] / diag[k - 1];
    for (std::size_t i = k - 1; i-- > 0;) moments[i + 1] = (rhs[i] - upper[i] * moments[i + 2]) / diag[i];
  }

  Vector out(n);
  std::size_t seg = 0;
  for (Index p = 0; p < n; ++p) {
    const double t = static_cast<double>(p);
    while (seg + 2 < m && t > knot_x[seg + 1]) ++seg;
    const double x0 = knot_x[seg];
    const double x1 = knot_x[seg + 1];
    const double hs = x1 - x0;
    const double a = (x1 - t) / hs;
    const double b = (t - x0) / hs;
    out[p] = a * knot_y[seg] + b * knot_y[seg + 1] +
             ((a * a * a - a) * moments[seg] + (b * b * b - b) * moments[seg + 1]) * hs * hs / 6.0;
  }
  return out;
}

Vector spline_envelope(const Vector& x, const std::vector<Index>& knots, bool mirror_ends) {
  if (knots.size() < 2) throw InsufficientExtrema("envelope needs at least two knots");
  const Index n = x.size();
  std::vector<double> kx;
  std::vector<double> ky;
  kx.reserve(knots.size() + 4);
  ky.reserve(knots.size() + 4);

  auto push = [&](double pos, double value) {
    if (!kx.empty() && pos <= kx.back()) return;
    kx.push_back(pos);
    ky.push_back(value);
  };

  if (mirror_ends) {
    for (int i = 1; i >= 0; --i) {
      const Index k = knots[static_cast<std::size_t>(i)];
      push(-static_cast<double>(k), x[k]);
    }
  }
  for (Index k : knots) push(static_cast<double>(k), x[k]);
  if (mirror_ends) {
    const double end = static_cast<double>(n - 1);
    for (std::size_t i = knots.size(); i-- > knots.size() - 2;) {
      const Index k = knots[i];
      push(2.0 * end - static_cast<double>(k), x[k]);
    }
  }
  return natural_cubic_spline(kx, ky, n);
}

namespace {

bool is_imf_candidate(const Vector& h) {
  const Extrema e = find_extrema(h);
  const auto extrema = static_cast<Index>(e.maxima.size() + e.minima.size());
  return std::abs(extrema - count_zero_crossings(h)) <= 1;
}

}  // namespace

double mean_envelope_ratio(const Vector& h, const Vector& mean) {
  if (h.size() != mean.size()) throw InvalidArgument("mean_envelope_ratio: length mismatch");
  const Index margin = h.size() / 50, len = h.size() - 2 * margin;
  const double denom = h.segment(margin, len).norm();
  return denom > 0.0 ? mean.segment(margin, len).norm() / denom : 0.0;
}

SiftResult sift(const Vector& x, const SiftConfig& config) {
  SiftResult result;
  Vector h = x;
  double last_sd = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= config.max_sift_iters + 1; ++it) {
    const Extrema e = find_extrema(h);
    if (e.maxima.size() < 2 || e.minima.size() < 2) {
      if (it == 1) throw InsufficientExtrema("sift: fewer than two maxima or minima");
      break;
    }
    const Vector mean = 0.5 * (spline_envelope(h, e.maxima) + spline_envelope(h, e.minima));
    // Stop tests look at the current candidate h together with its own envelope mean.
    if (it > 1 && last_sd < config.sd_threshold && (!config.enforce_extrema_count || is_imf_candidate(h)) &&
        (!config.enforce_mean_envelope || mean_envelope_ratio(h, mean) <= config.mean_envelope_ratio))
      break;
    if (it > config.max_sift_iters) break;
    const double prev_energy = h.squaredNorm();
    h -= mean;
    result.iterations = it;
    last_sd = prev_energy > 0.0 ? mean.squaredNorm() / prev_energy : 0.0;
  }
  result.imf = std::move(h);
  return result;
}

Vector ImfSet::reconstruct() const {
  Vector total = residual.samples();
  for (const auto& imf : imfs) total += imf.samples();
  return total;
}

ImfSet emd(const Signal& x, const SiftConfig& config) {
  if (x.size() < 8) throw InvalidArgument("emd: need at least 8 samples");
  const double total_energy = x.samples().squaredNorm();
  std::vector<Signal> imfs;
  std::vector<int> counts;
  Vector residual = x.samples();

  while (static_cast<int>(imfs.size()) < config.max_imfs) {
    const Extrema e = find_extrema(residual);
    if (e.maxima.size() < 2 || e.minima.size() < 2) break;
    if (residual.squaredNorm() < config.residual_energy_ratio * total_energy) break;
    SiftResult s;
    try {
      s = sift(residual, config);
    } catch (const InsufficientExtrema&) {
      break;
    }
    residual -= s.imf;
    imfs.emplace_back(std::move(s.imf), x.fs());
    counts.push_back(s.iterations);
  }
  return ImfSet{std::move(imfs), Signal(std::move(residual), x.fs()), std::move(counts)};
}

HilbertSpectrum hht(const Signal& x, const SiftConfig& config, Index freq_bins, Index time_bins) {
  if (freq_bins < 1 || time_bins < 1) throw InvalidArgument("hht: grid must have at least one bin");
  const Index n = x.size();
  const double nyquist = x.fs() / 2.0;

  HilbertSpectrum out{TimeFrequencyMap{}, emd(x, config), 0};
  auto& map = out.map;
  map.kind = TfKind::hilbert_spectrum;
  map.values = Matrix::Zero(freq_bins, time_bins);
  map.times.resize(time_bins);
  map.freqs.resize(freq_bins);
  for (Index c = 0; c < time_bins; ++c)
    map.times[c] = (static_cast<double>(c) + 0.5) * x.duration() / static_cast<double>(time_bins);
  for (Index r = 0; r < freq_bins; ++r)
    map.freqs[r] = (static_cast<double>(r) + 0.5) * nyquist / static_cast<double>(freq_bins);

  for (const auto& imf : out.decomposition.imfs) {
    const AnalyticSignal a = analytic_signal(imf);
    const Vector amp = envelope(a);
    const Vector freq = instantaneous_frequency(a);
    for (Index i = 0; i < n; ++i) {
      const Index col = std::min(time_bins - 1, i * time_bins / n);
      auto row = static_cast<Index>(std::floor(freq[i] / nyquist * static_cast<double>(freq_bins)));
      if (row < 0 || row >= freq_bins) {
        ++out.clipped;
        row = std::clamp<Index>(row, 0, freq_bins - 1);
      }
      map.values(row, col) += amp[i] * amp[i];
    }
  }
  return out;
}

}  // namespace sigkit
