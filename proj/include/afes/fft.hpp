#ifndef AFES_FFT_HPP
#define AFES_FFT_HPP

#include <complex>
#include <vector>

namespace afes {

// In-place radix-2 transform; size must be a power of two.
// The inverse transform includes the 1/N factor.
void fft_pow2(std::vector<std::complex<double>>& data, bool inverse);

// Transform of arbitrary length (Bluestein's algorithm for non powers
// of two). Forward only; returns a new vector.
std::vector<std::complex<double>> fft_any(const std::vector<std::complex<double>>& x);

// Power spectrum |X_k|^2 of a real signal, bins 0..N/2.
std::vector<double> power_spectrum(const std::vector<double>& x);

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

}  // namespace afes

#endif
