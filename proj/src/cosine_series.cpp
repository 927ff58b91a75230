#include "afes/cosine_series.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace afes {

namespace {

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

double sinc_pair_sum(const std::vector<double>& h, double x) {
  double s = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k)
    s += h[k] * (sinc(x - static_cast<double>(k)) + sinc(x + static_cast<double>(k)));
  return s;
}

// sum_j M_{2j} / x^{2j+2} with M_{2j} = sum_k (-1)^k k^{2j} h_k; valid for
// |x| well above the series order, free of the cancellation that kills the
// rational form at large x.
double moment_expansion(const std::vector<double>& h, double x) {
  const double inv_x2 = 1.0 / (x * x);
  std::vector<double> kpow(h.size(), 1.0);
  double sum = 0.0;
  double scale = inv_x2;
  for (int j = 0; j < 80; ++j) {
    double m2j = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
      const double sgn = (k & 1) ? -1.0 : 1.0;
      m2j += sgn * kpow[k] * h[k];
    }
    const double term = m2j * scale;
    sum += term;
    if (std::abs(term) < 1e-30 * std::abs(sum) && j > 2) break;
    for (std::size_t k = 0; k < h.size(); ++k)
      kpow[k] *= static_cast<double>(k) * static_cast<double>(k);
    scale *= inv_x2;
  }
  return sum;
}

}  // namespace

double CosineSeries::dc_gain() const {
  return coefficients.empty() ? 0.0 : 2.0 * half_width * coefficients[0];
}

double CosineSeries::value(double t) const {
  if (t <= -half_width || t > half_width) return 0.0;
  double s = 0.0;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    s += coefficients[k] * std::cos(static_cast<double>(k) * std::numbers::pi * t / half_width);
  return s;
}

double spectrum_shape(const std::vector<double>& h, double x) {
  const double ax = std::abs(x);
  const int m = static_cast<int>(h.size()) - 1;
  // Near a pole of the rational form (integer |x| <= m) the plain sinc sum
  // is well conditioned; this also covers the mainlobe.
  const double nearest = std::round(ax);
  if (nearest <= static_cast<double>(m) && std::abs(ax - nearest) < 0.25)
    return sinc_pair_sum(h, x);
  const double rational_limit = 4.0 * static_cast<double>(m + 1);
  double s;
  if (ax < rational_limit) {
    s = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
      const double sgn = (k & 1) ? -1.0 : 1.0;
      s += sgn * h[k] / (x * x - static_cast<double>(k * k));
    }
  } else {
    s = moment_expansion(h, x);
  }
  return std::sin(std::numbers::pi * x) * (2.0 * x / std::numbers::pi) * s;
}

double continuous_spectrum(const CosineSeries& series, double f) {
  return series.half_width * spectrum_shape(series.coefficients, 2.0 * f * series.half_width);
}

CosineSeries five_term_window() {
  return {{0.2940462892, 0.4539870314, 0.2022629686, 0.0460129686, 0.0036907422}, 1.0};
}

CosineSeries six_term_window() {
  return {{0.2624710164, 0.4265335164, 0.2250165621, 0.0726831633, 0.0125124215,
           0.0007833203}, 1.0};
}

CosineSeries nuttall11_window() {
  return {{0.338946, 0.481973, 0.161054, 0.018027}, 1.0};
}

CosineSeries nuttall_truncation_window() {
  return {{0.355768, 0.487396, 0.144232, 0.012604}, 1.0};
}

}  // namespace afes
