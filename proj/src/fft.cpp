#include "afes/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace afes {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("fft_pow2: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::complex<double>> tw(n / 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    // exact twiddles; a multiplicative recurrence would add noise near the
    // spectral nulls probed at the -250 dB level
    for (std::size_t k = 0; k < len / 2; ++k) tw[k] = std::polar(1.0, ang * static_cast<double>(k));
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * tw[k];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double s = 1.0 / static_cast<double>(n);
    for (auto& v : a) v *= s;
  }
}

std::vector<std::complex<double>> fft_any(const std::vector<std::complex<double>>& x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  if (is_power_of_two(n)) {
    auto a = x;
    fft_pow2(a, false);
    return a;
  }
  // Bluestein: X_k = b*_k sum_j (a_j b_j) conj-chirp convolution.
  const std::size_t m = next_power_of_two(2 * n - 1);
  std::vector<std::complex<double>> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    // angle = pi k^2 / n, with k^2 reduced mod 2n to keep the argument small
    const std::size_t k2 = (k * k) % (2 * n);
    const double ang = std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
    chirp[k] = std::complex<double>(std::cos(ang), -std::sin(ang));
  }
  std::vector<std::complex<double>> a(m, 0.0), b(m, 0.0);
  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
  b[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);
  fft_pow2(a, false);
  fft_pow2(b, false);
  for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
  fft_pow2(a, true);
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
  return out;
}

std::vector<double> power_spectrum(const std::vector<double>& x) {
  std::vector<std::complex<double>> cx(x.begin(), x.end());
  auto X = fft_any(cx);
  std::vector<double> p(x.size() / 2 + 1);
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::norm(X[k]);
  return p;
}

}  // namespace afes
