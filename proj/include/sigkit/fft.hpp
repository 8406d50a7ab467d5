#pragma once

// Discrete Fourier transform of arbitrary length.
// Power-of-two sizes use an iterative radix-2 kernel; every other size goes
// through Bluestein's chirp-z reformulation on a padded power-of-two grid.

#include "sigkit/core.hpp"
#include "sigkit/errors.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace sigkit {

template <typename Scalar>
using ComplexVectorX = VectorX<std::complex<Scalar>>;

namespace detail {

inline bool is_power_of_two(Index n) { return n > 0 && (n & (n - 1)) == 0; }

inline Index next_power_of_two(Index n) {
  Index p = 1;
  while (p < n) p <<= 1;
  return p;
}

template <typename Scalar>
void radix2_inplace(std::complex<Scalar>* a, Index n, bool inverse) {
  for (Index i = 1, j = 0; i < n; ++i) {
    Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // Twiddles from direct cos/sin evaluation; recurrences drift at large n.
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<std::complex<Scalar>> tw(static_cast<std::size_t>(n / 2));
  for (Index k = 0; k < n / 2; ++k) {
    const double ang = sign * 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    tw[k] = {static_cast<Scalar>(std::cos(ang)), static_cast<Scalar>(std::sin(ang))};
  }
  for (Index len = 2; len <= n; len <<= 1) {
    const Index half = len / 2;
    const Index step = n / len;
    for (Index i = 0; i < n; i += len) {
      for (Index j = 0; j < half; ++j) {
        const std::complex<Scalar> u = a[i + j];
        const std::complex<Scalar> v = a[i + j + half] * tw[j * step];
        a[i + j] = u + v;
        a[i + j + half] = u - v;
      }
    }
  }
}

template <typename Scalar>
void bluestein(const std::complex<Scalar>* in, std::complex<Scalar>* out, Index n, bool inverse) {
  const Index m = next_power_of_two(2 * n - 1);
  const double sign = inverse ? 1.0 : -1.0;

  // chirp[k] = exp(sign * j*pi*k^2/n); k^2 is reduced mod 2n in integers to keep the angle small.
  std::vector<std::complex<Scalar>> chirp(static_cast<std::size_t>(n));
  const auto two_n = static_cast<unsigned long long>(2 * n);
  for (Index k = 0; k < n; ++k) {
    const auto kk = static_cast<unsigned long long>(k);
    const unsigned long long r = (kk * kk) % two_n;
    const double ang = sign * kPi * static_cast<double>(r) / static_cast<double>(n);
    chirp[k] = {static_cast<Scalar>(std::cos(ang)), static_cast<Scalar>(std::sin(ang))};
  }

  std::vector<std::complex<Scalar>> a(static_cast<std::size_t>(m));
  std::vector<std::complex<Scalar>> b(static_cast<std::size_t>(m));
  for (Index k = 0; k < n; ++k) a[k] = in[k] * chirp[k];
  b[0] = std::conj(chirp[0]);
  for (Index k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);

  radix2_inplace(a.data(), m, false);
  radix2_inplace(b.data(), m, false);
  for (Index k = 0; k < m; ++k) a[k] *= b[k];
  radix2_inplace(a.data(), m, true);

  const Scalar inv_m = Scalar(1) / static_cast<Scalar>(m);
  for (Index k = 0; k < n; ++k) out[k] = chirp[k] * a[k] * inv_m;
}

}  // namespace detail

// Unnormalized forward transform: X[k] = sum_n x[n] exp(-j 2 pi k n / N).
template <typename Scalar>
ComplexVectorX<Scalar> dft(const ComplexVectorX<Scalar>& x) {
  const Index n = x.size();
  ComplexVectorX<Scalar> out(n);
  if (n == 0) return out;
  if (detail::is_power_of_two(n)) {
    out = x;
    detail::radix2_inplace(out.data(), n, false);
  } else {
    detail::bluestein(x.data(), out.data(), n, false);
  }
  return out;
}

// Inverse transform including the 1/N factor.
template <typename Scalar>
ComplexVectorX<Scalar> idft(const ComplexVectorX<Scalar>& spectrum) {
  const Index n = spectrum.size();
  ComplexVectorX<Scalar> out(n);
  if (n == 0) return out;
  if (detail::is_power_of_two(n)) {
    out = spectrum;
    detail::radix2_inplace(out.data(), n, true);
  } else {
    detail::bluestein(spectrum.data(), out.data(), n, true);
  }
  out /= static_cast<Scalar>(n);
  return out;
}

// Forward transform of a real sequence, zero-padded or truncated to nfft points.
template <typename Scalar>
ComplexVectorX<Scalar> rdft(const VectorX<Scalar>& x, Index nfft) {
  if (nfft < 1) throw InvalidArgument("nfft must be at least 1");
  ComplexVectorX<Scalar> buf = ComplexVectorX<Scalar>::Zero(nfft);
  const Index used = std::min<Index>(nfft, x.size());
  buf.head(used) = x.head(used).template cast<std::complex<Scalar>>();
  return dft<Scalar>(buf);
}

// Linear convolution through zero-padded transforms. Same result as the direct sum.
template <typename Scalar>
ComplexVectorX<Scalar> fft_convolve(const ComplexVectorX<Scalar>& a, const ComplexVectorX<Scalar>& b) {
  if (a.size() == 0 || b.size() == 0) throw InvalidArgument("fft_convolve: empty operand");
  const Index out_len = a.size() + b.size() - 1;
  const Index m = detail::next_power_of_two(out_len);
  ComplexVectorX<Scalar> fa = ComplexVectorX<Scalar>::Zero(m);
  ComplexVectorX<Scalar> fb = ComplexVectorX<Scalar>::Zero(m);
  fa.head(a.size()) = a;
  fb.head(b.size()) = b;
  fa = dft<Scalar>(fa);
  fb = dft<Scalar>(fb);
  ComplexVectorX<Scalar> prod = fa.cwiseProduct(fb);
  return idft<Scalar>(prod).head(out_len);
}

}  // namespace sigkit
