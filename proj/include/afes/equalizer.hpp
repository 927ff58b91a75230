#ifndef AFES_EQUALIZER_HPP
#define AFES_EQUALIZER_HPP

#include <complex>
#include <span>
#include <vector>

#include "afes/cosine_series.hpp"

namespace afes {

// Discrete-time equalizer compensating the antialiasing kernel's
// high-frequency droop: a 161-tap zero-phase FIR target sampled from the
// analytic kernel spectrum, fitted by a 6-pole all-pole IIR.
struct EqualizerDesign {
  double fs = 0.0;
  std::vector<double> fir_taps;         // 161, centered (zero phase)
  double iir_gain = 1.0;
  std::vector<double> iir_denominator;  // leading 1, order 6
  double max_attenuation_db = 0.0;
};

// Zero-phase FIR approximating min(1/|H(f)|, clip) where H is the kernel
// spectrum normalized to unit DC and clip = 10^(max_attenuation_db / 20).
// Sampled on a 32768-point grid, inverse transformed, truncated to 161 taps
// and shaped with the -93.32 dB Nuttall truncation window.
std::vector<double> design_fir_target(const CosineSeries& series, double fs,
                                      double max_attenuation_db);

// All-pole fit: autocorrelation of the taps at lags 0..order, then the
// Levinson-Durbin recursion; gain matches the FIR response at DC. Throws
// std::runtime_error on a non-positive-definite autocorrelation.
std::pair<double, std::vector<double>> fit_iir_from_fir(std::span<const double> fir_taps,
                                                        int order = 6);

// Convenience: FIR target plus IIR fit for the given kernel. The clip level
// is chosen by the caller (68 dB for the six-term kernel, 58 dB for the
// five-term one).
EqualizerDesign design_equalizer(const CosineSeries& series, double fs,
                                 double max_attenuation_db);

// Causal all-pole recursion with zero initial state.
std::vector<double> apply_iir(const EqualizerDesign& design, std::span<const double> x);

// Magnitude responses at frequency f (Hz).
double fir_magnitude(const EqualizerDesign& design, double f);
double iir_magnitude(const EqualizerDesign& design, double f);

// Roots of a real polynomial c[0] + c[1] x + ... (Durand-Kerner iteration).
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coefficients);

// Pole locations of the fitted denominator (z-plane).
std::vector<std::complex<double>> equalizer_poles(const EqualizerDesign& design);

}  // namespace afes

#endif
