#pragma once

#include "sigkit/core.hpp"
#include "sigkit/spectral.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigkit {

// Orthonormal two-channel filter bank. dec_lo sums to sqrt(2) and has unit energy;
// rec_lo is dec_lo reversed, rec_hi[k] = (-1)^k dec_lo[k], dec_hi is rec_hi reversed.
struct WaveletBank {
  std::string name;
  Vector dec_lo;
  Vector dec_hi;
  Vector rec_lo;
  Vector rec_hi;

  Index length() const { return dec_lo.size(); }
};

// haar, db1 (alias of haar), db2 .. db8. Throws UnknownWavelet otherwise.
const WaveletBank& wavelet_bank(std::string_view name);
std::span<const std::string> wavelet_names();

// Deepest decomposition allowed for a signal of n samples: floor(log2(n)).
int max_level(Index n);

// Coefficient count after one analysis step with symmetric extension.
Index dwt_coeff_length(Index input_len, Index filter_len);

// details[0] is cD1 (finest), details[levels-1] is cDj; approx is cAj.
struct DwtTree {
  std::vector<Vector> details;
  Vector approx;
  std::string wavelet;
  int levels = 0;
  Index original_len = 0;
  double fs = 1.0;
};

// Leaves in natural filter-bank order: node i at one level splits into 2i (low) and 2i+1 (high).
struct WptTree {
  std::vector<Vector> leaves;
  std::vector<Index> level_lengths;  // level_lengths[0] == original_len
  std::string wavelet;
  int levels = 0;
  Index original_len = 0;
  double fs = 1.0;
};

// Undecimated coefficients; every sequence has the input length.
struct SwtCoefficients {
  std::vector<Vector> details;
  Vector approx;
  std::string wavelet;
  int levels = 0;
  double fs = 1.0;
};

enum class DecompositionKind { dwt_modes, wpt_modes, swt_modes, imf };

// Full-length elementary modes. For additive kinds sum(modes) + residual == source.
struct DecompositionSet {
  std::vector<Signal> modes;
  std::optional<Signal> residual;
  DecompositionKind kind = DecompositionKind::dwt_modes;

  Vector sum() const;
};

// Single analysis / synthesis steps on the half-sample symmetric extension of the input.
void dwt_step(const Vector& x, const WaveletBank& bank, Vector& approx, Vector& detail);
Vector idwt_step(const Vector& approx, const Vector& detail, const WaveletBank& bank, Index output_len);

DwtTree dwt(const Vector& x, std::string_view wavelet, int levels, double fs = 1.0);
DwtTree dwt(const Signal& x, std::string_view wavelet, int levels);
Signal idwt(const DwtTree& tree);

// Modes ordered cD1..cDj, cAj.
DecompositionSet dwt_modes(const Signal& x, std::string_view wavelet, int levels);

WptTree wpt(const Signal& x, std::string_view wavelet, int levels);
Signal iwpt(const WptTree& tree);
DecompositionSet wpt_modes(const Signal& x, std::string_view wavelet, int levels);

// Periodic a-trous transform. Requires size divisible by 2^levels.
SwtCoefficients swt(const Signal& x, std::string_view wavelet, int levels);
Signal iswt(const SwtCoefficients& coeffs);
// Modes ordered cD1..cDj, cAj.
DecompositionSet swt_modes(const Signal& x, std::string_view wavelet, int levels);

// E_i = sum_l M_i[l]^2 for every mode (the residual is not included).
Vector mode_energy(const DecompositionSet& d);

enum class CwtMother { morlet, ricker };

CwtMother parse_cwt_mother(std::string_view name);

// Morlet uses a center angular frequency of 6 rad per unit scale.
double cwt_center_frequency(CwtMother mother, double scale, double fs);

// |CWT| with 1/sqrt(a) normalization. Rows follow the order of `scales`.
TimeFrequencyMap cwt(const Signal& x, CwtMother mother, std::span<const double> scales);

}  // namespace sigkit
