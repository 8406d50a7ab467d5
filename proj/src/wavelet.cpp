#include "sigkit/wavelet.hpp"

#include "sigkit/errors.hpp"
#include "sigkit/fft.hpp"

#include <cmath>
#include <string>

namespace sigkit {

namespace {

// Half-sample symmetric extension, repeated as often as needed: ... x1 x0 | x0 x1 ... xM-1 | xM-1 ...
Index reflect(Index n, Index m) {
  const Index period = 2 * m;
  Index r = n % period;
  if (r < 0) r += period;
  return r < m ? r : period - 1 - r;
}

Index wrap(Index n, Index m) {
  Index r = n % m;
  return r < 0 ? r + m : r;
}

void check_levels(Index n, int levels) {
  if (levels < 1) throw InvalidArgument("decomposition level must be at least 1");
  if (levels > max_level(n))
    throw InvalidArgument("decomposition level " + std::to_string(levels) + " exceeds maximum " +
                          std::to_string(max_level(n)) + " for " + std::to_string(n) + " samples");
}

// Synthesis of one WPT node from its children along the path of a single leaf.
Vector synthesize_one(const Vector& child, bool is_low, const WaveletBank& bank, Index output_len) {
  const Vector zero = Vector::Zero(child.size());
  return is_low ? idwt_step(child, zero, bank, output_len) : idwt_step(zero, child, bank, output_len);
}

}  // namespace

int max_level(Index n) {
  if (n < 1) return 0;
  int level = 0;
  while ((Index{1} << (level + 1)) <= n) ++level;
  return level;
}

Index dwt_coeff_length(Index input_len, Index filter_len) { return (input_len + filter_len - 1) / 2; }

Vector DecompositionSet::sum() const {
  Vector total;
  if (!modes.empty()) total = Vector::Zero(modes.front().size());
  else if (residual) total = Vector::Zero(residual->size());
  for (const auto& m : modes) total += m.samples();
  if (residual) total += residual->samples();
  return total;
}

void dwt_step(const Vector& x, const WaveletBank& bank, Vector& approx, Vector& detail) {
  const Index m = x.size();
  const Index len = bank.length();
  const Index out = dwt_coeff_length(m, len);
  approx.resize(out);
  detail.resize(out);
  for (Index k = 0; k < out; ++k) {
    double a = 0.0;
    double d = 0.0;
    for (Index j = 0; j < len; ++j) {
      const double v = x[reflect(2 * k + 1 - j, m)];
      a += bank.dec_lo[j] * v;
      d += bank.dec_hi[j] * v;
    }
    approx[k] = a;
    detail[k] = d;
  }
}

Vector idwt_step(const Vector& approx, const Vector& detail, const WaveletBank& bank, Index output_len) {
  if (approx.size() != detail.size()) throw InvalidArgument("idwt: coefficient lengths differ");
  const Index len = bank.length();
  const Index count = approx.size();
  Vector x = Vector::Zero(output_len);
  // Adjoint of the analysis step: x[n] = sum_k cA[k] h[2k+1-n] + cD[k] g[2k+1-n].
  for (Index n = 0; n < output_len; ++n) {
    const Index k_lo = std::max<Index>(0, n / 2);
    const Index k_hi = std::min<Index>(count - 1, (n + len - 2) / 2);
    double acc = 0.0;
    for (Index k = k_lo; k <= k_hi; ++k) {
      const Index j = 2 * k + 1 - n;
      if (j < 0 || j >= len) continue;
      acc += approx[k] * bank.dec_lo[j] + detail[k] * bank.dec_hi[j];
    }
    x[n] = acc;
  }
  return x;
}

DwtTree dwt(const Vector& x, std::string_view wavelet, int levels, double fs) {
  const WaveletBank& bank = wavelet_bank(wavelet);
  check_levels(x.size(), levels);
  DwtTree tree;
  tree.wavelet = bank.name;
  tree.levels = levels;
  tree.original_len = x.size();
  tree.fs = fs;
  Vector current = x;
  for (int j = 0; j < levels; ++j) {
    Vector a;
    Vector d;
    dwt_step(current, bank, a, d);
    tree.details.push_back(std::move(d));
    current = std::move(a);
  }
  tree.approx = std::move(current);
  return tree;
}

DwtTree dwt(const Signal& x, std::string_view wavelet, int levels) {
  return dwt(x.samples(), wavelet, levels, x.fs());
}

namespace {

Vector idwt_vector(const DwtTree& tree) {
  const WaveletBank& bank = wavelet_bank(tree.wavelet);
  Vector current = tree.approx;
  for (int j = tree.levels - 1; j >= 0; --j) {
    const Index out_len = j == 0 ? tree.original_len : tree.details[j - 1].size();
    current = idwt_step(current, tree.details[j], bank, out_len);
  }
  return current;
}

}  // namespace

Signal idwt(const DwtTree& tree) { return Signal(idwt_vector(tree), tree.fs); }

DecompositionSet dwt_modes(const Signal& x, std::string_view wavelet, int levels) {
  const DwtTree tree = dwt(x, wavelet, levels);
  DwtTree zeroed = tree;
  for (auto& d : zeroed.details) d.setZero();
  zeroed.approx.setZero();

  DecompositionSet set;
  set.kind = DecompositionKind::dwt_modes;
  for (int j = 0; j < levels; ++j) {
    DwtTree single = zeroed;
    single.details[j] = tree.details[j];
    set.modes.emplace_back(idwt_vector(single), x.fs());
  }
  DwtTree single = zeroed;
  single.approx = tree.approx;
  set.modes.emplace_back(idwt_vector(single), x.fs());
  return set;
}

WptTree wpt(const Signal& x, std::string_view wavelet, int levels) {
  const WaveletBank& bank = wavelet_bank(wavelet);
  check_levels(x.size(), levels);
  WptTree tree;
  tree.wavelet = bank.name;
  tree.levels = levels;
  tree.original_len = x.size();
  tree.fs = x.fs();
  tree.level_lengths.push_back(x.size());

  std::vector<Vector> nodes{x.samples()};
  for (int l = 0; l < levels; ++l) {
    std::vector<Vector> next;
    next.reserve(nodes.size() * 2);
    for (const auto& node : nodes) {
      Vector a;
      Vector d;
      dwt_step(node, bank, a, d);
      next.push_back(std::move(a));
      next.push_back(std::move(d));
    }
    tree.level_lengths.push_back(next.front().size());
    nodes = std::move(next);
  }
  tree.leaves = std::move(nodes);
  return tree;
}

Signal iwpt(const WptTree& tree) {
  const WaveletBank& bank = wavelet_bank(tree.wavelet);
  std::vector<Vector> nodes = tree.leaves;
  for (int l = tree.levels; l > 0; --l) {
    std::vector<Vector> parents;
    parents.reserve(nodes.size() / 2);
    for (std::size_t i = 0; i < nodes.size(); i += 2)
      parents.push_back(idwt_step(nodes[i], nodes[i + 1], bank, tree.level_lengths[l - 1]));
    nodes = std::move(parents);
  }
  return Signal(nodes.front(), tree.fs);
}

DecompositionSet wpt_modes(const Signal& x, std::string_view wavelet, int levels) {
  const WptTree tree = wpt(x, wavelet, levels);
  const WaveletBank& bank = wavelet_bank(tree.wavelet);
  DecompositionSet set;
  set.kind = DecompositionKind::wpt_modes;
  for (std::size_t leaf = 0; leaf < tree.leaves.size(); ++leaf) {
    Vector current = tree.leaves[leaf];
    std::size_t index = leaf;
    for (int l = levels; l > 0; --l) {
      current = synthesize_one(current, index % 2 == 0, bank, tree.level_lengths[l - 1]);
      index /= 2;
    }
    set.modes.emplace_back(std::move(current), x.fs());
  }
  return set;
}

SwtCoefficients swt(const Signal& x, std::string_view wavelet, int levels) {
  const WaveletBank& bank = wavelet_bank(wavelet);
  check_levels(x.size(), levels);
  const Index n = x.size();
  if (n % (Index{1} << levels) != 0)
    throw InvalidArgument("swt: signal length must be divisible by 2^levels");

  SwtCoefficients out;
  out.wavelet = bank.name;
  out.levels = levels;
  out.fs = x.fs();
  Vector current = x.samples();
  for (int j = 0; j < levels; ++j) {
    const Index stride = Index{1} << j;
    Vector a(n);
    Vector d(n);
    for (Index i = 0; i < n; ++i) {
      double sa = 0.0;
      double sd = 0.0;
      for (Index k = 0; k < bank.length(); ++k) {
        const double v = current[wrap(i - stride * k, n)];
        sa += bank.dec_lo[k] * v;
        sd += bank.dec_hi[k] * v;
      }
      a[i] = sa;
      d[i] = sd;
    }
    out.details.push_back(std::move(d));
    current = std::move(a);
  }
  out.approx = std::move(current);
  return out;
}

namespace {

Vector iswt_vector(const SwtCoefficients& c) {
  const WaveletBank& bank = wavelet_bank(c.wavelet);
  Vector current = c.approx;
  const Index n = current.size();
  for (int j = c.levels - 1; j >= 0; --j) {
    const Index stride = Index{1} << j;
    const Vector& d = c.details[j];
    Vector prev(n);
    // |H|^2 + |G|^2 = 2 for an orthonormal pair, so the adjoint halved inverts one stage.
    for (Index i = 0; i < n; ++i) {
      double acc = 0.0;
      for (Index k = 0; k < bank.length(); ++k) {
        const Index idx = wrap(i + stride * k, n);
        acc += bank.dec_lo[k] * current[idx] + bank.dec_hi[k] * d[idx];
      }
      prev[i] = 0.5 * acc;
    }
    current = std::move(prev);
  }
  return current;
}

}  // namespace

Signal iswt(const SwtCoefficients& coeffs) { return Signal(iswt_vector(coeffs), coeffs.fs); }

DecompositionSet swt_modes(const Signal& x, std::string_view wavelet, int levels) {
  const SwtCoefficients c = swt(x, wavelet, levels);
  SwtCoefficients zeroed = c;
  for (auto& d : zeroed.details) d.setZero();
  zeroed.approx.setZero();

  DecompositionSet set;
  set.kind = DecompositionKind::swt_modes;
  for (int j = 0; j < levels; ++j) {
    SwtCoefficients single = zeroed;
    single.details[j] = c.details[j];
    set.modes.emplace_back(iswt_vector(single), x.fs());
  }
  SwtCoefficients single = zeroed;
  single.approx = c.approx;
  set.modes.emplace_back(iswt_vector(single), x.fs());
  return set;
}

Vector mode_energy(const DecompositionSet& d) {
  Vector e(static_cast<Index>(d.modes.size()));
  for (std::size_t i = 0; i < d.modes.size(); ++i) e[static_cast<Index>(i)] = d.modes[i].samples().squaredNorm();
  return e;
}

CwtMother parse_cwt_mother(std::string_view name) {
  if (name == "morlet" || name == "morl") return CwtMother::morlet;
  if (name == "ricker" || name == "mexh" || name == "mexican_hat") return CwtMother::ricker;
  throw InvalidArgument("unknown CWT mother wavelet '" + std::string(name) + "'");
}

namespace {

constexpr double kMorletOmega0 = 6.0;
constexpr double kCwtSupport = 6.0;  // kernel truncated at |t| <= 6 scaled units

std::complex<double> mother_value(CwtMother mother, double t) {
  const double gauss = std::exp(-0.5 * t * t);
  if (mother == CwtMother::morlet) {
    const double norm = std::pow(kPi, -0.25);
    return norm * gauss * std::complex<double>(std::cos(kMorletOmega0 * t), std::sin(kMorletOmega0 * t));
  }
  const double norm = 2.0 / (std::sqrt(3.0) * std::pow(kPi, 0.25));
  return {norm * (1.0 - t * t) * gauss, 0.0};
}

}  // namespace

double cwt_center_frequency(CwtMother mother, double scale, double fs) {
  const double omega = mother == CwtMother::morlet ? kMorletOmega0 : std::sqrt(2.0);
  return omega * fs / (2.0 * kPi * scale);
}

TimeFrequencyMap cwt(const Signal& x, CwtMother mother, std::span<const double> scales) {
  if (scales.empty()) throw InvalidArgument("cwt: at least one scale required");
  const Index n = x.size();
  TimeFrequencyMap map;
  map.kind = TfKind::scalogram;
  map.times.resize(n);
  for (Index i = 0; i < n; ++i) map.times[i] = static_cast<double>(i) / x.fs();
  map.scales.resize(static_cast<Index>(scales.size()));
  map.freqs.resize(static_cast<Index>(scales.size()));
  map.values.resize(static_cast<Index>(scales.size()), n);

  const ComplexVector xc = x.samples().cast<std::complex<double>>();
  for (std::size_t r = 0; r < scales.size(); ++r) {
    const double a = scales[r];
    if (!(a > 0.0)) throw InvalidArgument("cwt: scales must be positive");
    const auto half = static_cast<Index>(std::ceil(kCwtSupport * a));
    // Reversed kernel so that convolution evaluates sum_m x[b+m] conj(psi(m/a)) / sqrt(a).
    ComplexVector kernel(2 * half + 1);
    for (Index i = 0; i <= 2 * half; ++i) {
      const double m = static_cast<double>(half - i);
      kernel[i] = std::conj(mother_value(mother, m / a)) / std::sqrt(a);
    }
    const ComplexVector full = fft_convolve<double>(xc, kernel);
    const auto row = static_cast<Index>(r);
    map.values.row(row) = full.segment(half, n).cwiseAbs().transpose();
    map.scales[row] = a;
    map.freqs[row] = cwt_center_frequency(mother, a, x.fs());
  }
  return map;
}

}  // namespace sigkit
