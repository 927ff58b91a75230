#include "afes/lf_model.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "afes/exp_antialias.hpp"
#include "afes/root_finding.hpp"

namespace afes {

namespace {

constexpr double kPi = std::numbers::pi;

// Integral of e^{alpha t} sin(wg t) over [0, te], divided by nothing;
// closed form keeps the zero-flow root function smooth.
double opening_flow_integral(double alpha, double wg, double te) {
  const double d = alpha * alpha + wg * wg;
  return (std::exp(alpha * te) * (alpha * std::sin(wg * te) - wg * std::cos(wg * te)) + wg) / d;
}

}  // namespace

void LFParams::validate() const {
  const auto fail = [](const std::string& msg) { throw ModelParameterError("LF params: " + msg); };
  if (!(0.0 < tp && tp < te)) fail("need 0 < tp < te");
  if (!(te <= tc && tc <= 1.0)) fail("need te <= tc <= 1");
  if (!(ta > 0.0)) fail("ta must be positive");
  if (!(ta < tc - te)) fail("need ta < tc - te for a positive return-phase rate");
  if (!(ee > 0.0)) fail("Ee must be positive");
}

LFDerived solve_lf_coefficients(const LFParams& p) {
  p.validate();
  LFDerived d;
  d.omega_g = kPi / p.tp;
  const double dur = p.tc - p.te;

  // Return-phase rate: amplitude continuity at te gives
  // beta ta = 1 - e^{-beta dur}; the nontrivial root is positive.
  const auto beta_eq = [&](double b) { return b * p.ta - 1.0 + std::exp(-b * dur); };
  try {
    d.beta = find_zero(beta_eq, 1e-9, 10.0 / p.ta, 1e-12);
  } catch (const BracketError&) {
    throw ModelParameterError("LF solve: no positive root for the return-phase rate equation");
  }

  // Growth rate: zero net flow over the period. The return-phase flow does
  // not depend on alpha.
  const double sin_te = std::sin(d.omega_g * p.te);
  const double return_flow =
      -(1.0 / (d.beta * p.ta)) *
      ((1.0 - std::exp(-d.beta * dur)) / d.beta - dur * std::exp(-d.beta * dur));
  const auto flow_eq = [&](double alpha) {
    const double e0 = -1.0 / (std::exp(alpha * p.te) * sin_te);
    return e0 * opening_flow_integral(alpha, d.omega_g, p.te) + return_flow;
  };
  try {
    d.alpha = find_zero_expand(flow_eq, -500.0, 500.0, "zero net flow", 1e-12);
  } catch (const BracketError& e) {
    throw ModelParameterError(std::string("LF solve: ") + e.what());
  }

  d.e0_over_ee = -1.0 / (std::exp(d.alpha * p.te) * sin_te);
  return d;
}

double lf_waveform_continuous(const LFParams& p, const LFDerived& d, double t) {
  if (t < p.te) {
    return p.ee * d.e0_over_ee * std::exp(d.alpha * t) * std::sin(d.omega_g * t);
  }
  if (t < p.tc) {
    return -p.ee / (d.beta * p.ta) *
           (std::exp(-d.beta * (t - p.te)) - std::exp(-d.beta * (p.tc - p.te)));
  }
  return 0.0;
}

std::vector<double> lf_antialiased_cycle(const LFParams& p, const LFDerived& d,
                                         const CosineSeries& series,
                                         double half_width_s, double period_s,
                                         std::span<const double> eval_times_s,
                                         TableCache* cache) {
  std::vector<double> out(eval_times_s.size(), 0.0);
  const double dur = p.tc - p.te;

  // Opening: Im[E0 e^{(alpha + i wg) t}] on [0, te], rescaled to unit span.
  const double tw_open = half_width_s / (p.te * period_s);
  const std::complex<double> beta_open(d.alpha * p.te, d.omega_g * p.te);
  // Return: -(Ee / (beta ta)) e^{-beta (t - te)} + (Ee e^{-beta dur} / (beta ta)).
  const double tw_ret = half_width_s / (dur * period_s);
  const double ret_scale = -p.ee / (d.beta * p.ta);
  const double const_level = p.ee * std::exp(-d.beta * dur) / (d.beta * p.ta);
  const PolynomialPulse unit{{1.0}};
  std::shared_ptr<const AntialiasTables> cached;
  AntialiasTables local;
  const AntialiasTables* tab;
  if (cache) {
    cached = cache->get(0, tw_ret);
    tab = cached.get();
  } else {
    local = build_tables(series, 0, tw_ret);
    tab = &local;
  }

  const double e0 = p.ee * d.e0_over_ee;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double tn = eval_times_s[i] / period_s;
    double v = 0.0;
    v += e0 * eval_antialiased_exp(series, beta_open, tn / p.te, tw_open).imag();
    const double tr = (tn - p.te) / dur;
    v += ret_scale * eval_antialiased_exp(series, -d.beta * dur, tr, tw_ret).real();
    v += const_level * eval_antialiased_poly(*tab, unit, tr);
    out[i] = v;
  }
  return out;
}

}  // namespace afes
