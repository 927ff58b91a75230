#ifndef AFES_COSINE_SERIES_HPP
#define AFES_COSINE_SERIES_HPP

#include <vector>

namespace afes {

// Finite cosine series on (-half_width, half_width]:
//   h(t) = sum_k coefficients[k] * cos(k*pi*t / half_width),
// identically zero outside. Used both as an antialiasing kernel (with
// half_width in seconds or in pulse-normalized time) and as an analysis
// window shape.
struct CosineSeries {
  std::vector<double> coefficients;
  double half_width = 1.0;

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  double dc_gain() const;  // integral over the support: 2 * half_width * h0

  // Time-domain value; exactly 0 for t <= -half_width and t > half_width.
  double value(double t) const;
};

// Signed amplitude of the continuous-time Fourier transform at frequency f
// (cycles per unit of half_width):
//   H(f) = sum_k h_k * t_w * [sinc(2 f t_w - k) + sinc(2 f t_w + k)],
// with sinc(x) = sin(pi x)/(pi x). H(0) = 2 t_w h0. The transform is real
// because the series is even. Evaluation switches between a direct sinc
// sum, a factored rational form, and a moment expansion so that levels far
// below the mainlobe (-300 dB and lower) remain accurate.
double continuous_spectrum(const CosineSeries& series, double f);

// Same quantity as a function of x = 2 f t_w with t_w fixed at 1 (spectral
// shapes of the series are a pure dilation in t_w). Zeros sit at integer
// x >= order+1 for series meeting the endpoint constraints.
double spectrum_shape(const std::vector<double>& h, double x);

// Tabulated window coefficient sets.

// Five- and six-term antialiasing functions (endpoint-derivative
// constrained, free coefficient tuned for minimum peak sidelobe;
// -99.23 dB / 42 dB/oct and -114.24 dB / 54 dB/oct).
CosineSeries five_term_window();
CosineSeries six_term_window();

// Nuttall's 4-term windows: the -82.60 dB / 30 dB/oct set used as a
// comparison antialiasing function, and the -93.32 dB / 18 dB/oct set used
// for FIR truncation and (self-convolved) spectrum analysis.
CosineSeries nuttall11_window();
CosineSeries nuttall_truncation_window();

}  // namespace afes

#endif
