#include "afes/exp_antialias.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace afes {

namespace {

constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;

// exp(z) - 1 without cancellation for small |z|.
cd expm1c(cd z) {
  if (std::abs(z) > 0.5) return std::exp(z) - 1.0;
  cd term = z, sum = z;
  for (int k = 2; k < 32; ++k) {
    term *= z / static_cast<double>(k);
    sum += term;
    if (std::abs(term) < 1e-20 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

std::complex<double> element_function(int k, cd beta, double t, double half_width) {
  if (k < 1) throw std::invalid_argument("element_function: harmonic index must be >= 1");
  if (half_width <= 0.0) throw std::invalid_argument("element_function: half width must be positive");
  const double tw = half_width;
  const double a = kPi / tw;
  const double ka = k * a;
  const cd denom = ka * ka + beta * beta;
  if (std::abs(denom) <= 1e-12 * (ka * ka + std::norm(beta)))
    throw std::domain_error("element_function: resonant harmonic (k^2 a^2 + beta^2 = 0)");

  cd v = 0.0;
  const double sgn = (k & 1) ? -1.0 : 1.0;
  if (t > -tw && t <= tw) {
    v += (ka * std::sin(ka * t) - beta * std::cos(ka * t) +
          sgn * beta * std::exp(beta * (tw + t))) / denom;
  }
  if (t > tw && t < 1.0 + tw) {
    v += sgn * beta * std::exp(beta * t) *
         (std::exp(beta * tw) - std::exp(-beta * tw)) / denom;
  }
  if (t >= 1.0 - tw && t < 1.0 + tw) {
    // Release component: negative of the onset-shaped term anchored at the
    // pulse end; the sign makes the overlapped sum match the convolution.
    v -= (ka * std::exp(beta) * std::sin(ka * (t - 1.0)) -
          beta * std::exp(beta) * std::cos(ka * (t - 1.0)) +
          sgn * beta * std::exp(beta * (tw + t))) / denom;
  }
  return v;
}

std::complex<double> eval_antialiased_exp(const CosineSeries& series, cd beta, double t,
                                          double half_width) {
  const auto& h = series.coefficients;
  if (h.empty()) throw std::invalid_argument("eval_antialiased_exp: empty series");
  const double tw = half_width;

  // k = 0: constant kernel term; the convolution integrates e^{beta tau}
  // over the overlap [max(t - t_w, 0), min(t + t_w, 1)].
  cd acc = 0.0;
  const double lo = std::max(t - tw, 0.0);
  const double hi = std::min(t + tw, 1.0);
  if (hi > lo) {
    // (e^{beta hi} - e^{beta lo}) / beta, with the limit (hi - lo) at beta = 0.
    const cd seg = (beta == 0.0) ? cd(hi - lo)
                                 : std::exp(beta * lo) * expm1c(beta * (hi - lo)) / beta;
    acc += h[0] * seg;
  }
  for (int k = 1; k <= series.order(); ++k)
    acc += h[k] * element_function(k, beta, t, tw);
  return acc / (2.0 * tw * h[0]);
}

}  // namespace afes
