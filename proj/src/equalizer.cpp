#include "afes/equalizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "afes/fft.hpp"
#include "afes/window_design.hpp"

namespace afes {

namespace {

constexpr int kFftLength = 32768;
constexpr int kFirLength = 161;

}  // namespace

std::vector<double> design_fir_target(const CosineSeries& series, double fs,
                                      double max_attenuation_db) {
  const double tw = half_width_for_fs(series, fs);
  const double dc = 2.0 * tw * series.coefficients[0];
  const double clip = std::pow(10.0, max_attenuation_db / 20.0);

  // Even-symmetric magnitude target on the full grid -> real, zero-phase
  // impulse response.
  std::vector<std::complex<double>> grid(kFftLength);
  for (int i = 0; i <= kFftLength / 2; ++i) {
    const double f = static_cast<double>(i) * fs / kFftLength;
    CosineSeries scaled = series;
    scaled.half_width = tw;
    const double mag = std::abs(continuous_spectrum(scaled, f)) / dc;
    const double t = std::min(1.0 / std::max(mag, 1e-30), clip);
    grid[i] = t;
    if (i > 0 && i < kFftLength / 2) grid[kFftLength - i] = t;
  }
  fft_pow2(grid, true);

  // Centre the response and truncate.
  std::vector<double> taps(kFirLength);
  const int half = (kFirLength - 1) / 2;
  for (int j = 0; j < kFirLength; ++j) {
    const int idx = ((j - half) % kFftLength + kFftLength) % kFftLength;
    taps[j] = grid[idx].real();
  }
  const CosineSeries trunc = nuttall_truncation_window();
  for (int j = 0; j < kFirLength; ++j) {
    const double x = static_cast<double>(j - half) / (kFirLength - 1);  // [-1/2, 1/2]
    double w = 0.0;
    for (std::size_t k = 0; k < trunc.coefficients.size(); ++k)
      w += trunc.coefficients[k] * std::cos(2.0 * std::numbers::pi * k * x);
    taps[j] *= w;
  }
  return taps;
}

std::pair<double, std::vector<double>> fit_iir_from_fir(std::span<const double> fir_taps,
                                                        int order) {
  if (order < 1 || order > 12) throw std::invalid_argument("fit_iir_from_fir: order out of range");
  const int n = static_cast<int>(fir_taps.size());
  std::vector<double> r(order + 1, 0.0);
  for (int lag = 0; lag <= order; ++lag)
    for (int i = 0; i + lag < n; ++i) r[lag] += fir_taps[i] * fir_taps[i + lag];

  // Levinson-Durbin recursion.
  std::vector<double> a(order + 1, 0.0);
  a[0] = 1.0;
  double err = r[0];
  if (err <= 0.0) throw std::runtime_error("fit_iir_from_fir: zero-power tap sequence");
  for (int i = 1; i <= order; ++i) {
    double acc = r[i];
    for (int j = 1; j < i; ++j) acc += a[j] * r[i - j];
    const double k = -acc / err;
    std::vector<double> next(a);
    for (int j = 1; j < i; ++j) next[j] = a[j] + k * a[i - j];
    next[i] = k;
    a = std::move(next);
    err *= (1.0 - k * k);
    if (err <= 0.0)
      throw std::runtime_error("fit_iir_from_fir: autocorrelation not positive definite");
  }

  double fir_dc = 0.0;
  for (double t : fir_taps) fir_dc += t;
  double a_sum = 0.0;
  for (double c : a) a_sum += c;
  return {fir_dc * a_sum, a};
}

EqualizerDesign design_equalizer(const CosineSeries& series, double fs,
                                 double max_attenuation_db) {
  EqualizerDesign d;
  d.fs = fs;
  d.max_attenuation_db = max_attenuation_db;
  d.fir_taps = design_fir_target(series, fs, max_attenuation_db);
  auto [gain, denom] = fit_iir_from_fir(d.fir_taps, 6);
  d.iir_gain = gain;
  d.iir_denominator = std::move(denom);
  return d;
}

std::vector<double> apply_iir(const EqualizerDesign& design, std::span<const double> x) {
  const auto& a = design.iir_denominator;
  const int order = static_cast<int>(a.size()) - 1;
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double acc = design.iir_gain * x[i];
    for (int k = 1; k <= order; ++k)
      if (i >= static_cast<std::size_t>(k)) acc -= a[k] * y[i - k];
    y[i] = acc;
  }
  return y;
}

double fir_magnitude(const EqualizerDesign& design, double f) {
  const double w = 2.0 * std::numbers::pi * f / design.fs;
  const int half = (static_cast<int>(design.fir_taps.size()) - 1) / 2;
  // zero-phase: cosine sum about the centre tap
  double acc = design.fir_taps[half];
  for (int j = 1; j <= half; ++j)
    acc += (design.fir_taps[half + j] + design.fir_taps[half - j]) * std::cos(w * j);
  return std::abs(acc);
}

double iir_magnitude(const EqualizerDesign& design, double f) {
  const double w = 2.0 * std::numbers::pi * f / design.fs;
  std::complex<double> den(0.0, 0.0);
  for (std::size_t k = 0; k < design.iir_denominator.size(); ++k)
    den += design.iir_denominator[k] *
           std::exp(std::complex<double>(0.0, -w * static_cast<double>(k)));
  return std::abs(design.iir_gain / den);
}

std::vector<std::complex<double>> polynomial_roots(std::span<const double> coefficients) {
  int deg = static_cast<int>(coefficients.size()) - 1;
  while (deg > 0 && coefficients[deg] == 0.0) --deg;
  if (deg < 1) return {};
  std::vector<std::complex<double>> c(coefficients.begin(), coefficients.begin() + deg + 1);
  for (auto& v : c) v /= c[deg];

  std::vector<std::complex<double>> roots(deg);
  for (int i = 0; i < deg; ++i)
    roots[i] = std::pow(std::complex<double>(0.4, 0.9), i);  // standard seeds
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0.0;
    for (int i = 0; i < deg; ++i) {
      std::complex<double> num = 0.0;
      for (int k = deg; k >= 0; --k) num = num * roots[i] + c[k];
      std::complex<double> den = 1.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= roots[i] - roots[j];
      const std::complex<double> delta = num / den;
      roots[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14) break;
  }
  return roots;
}

std::vector<std::complex<double>> equalizer_poles(const EqualizerDesign& design) {
  // Denominator in z^-1; poles are roots of z^order * A(z^-1).
  const auto& a = design.iir_denominator;
  const int order = static_cast<int>(a.size()) - 1;
  std::vector<double> p(order + 1);
  for (int k = 0; k <= order; ++k) p[k] = a[order - k];
  return polynomial_roots(p);
}

}  // namespace afes
