#include "afes/fl_model.hpp"

#include <cmath>
#include <string>

namespace afes {

void FLParams::validate() const {
  const auto fail = [](const std::string& msg) { throw ModelParameterError("FL params: " + msg); };
  if (!(r > 0.0)) fail("R must be positive");
  if (!(f > 0.0)) fail("F must be positive");
  if (!(d > 0.0)) fail("D must be positive");
  if (!(w() + d <= t)) fail("R + F + D must not exceed the period");
  if (f * f == 2.0 * r * r) fail("F^2 = 2 R^2 makes the slope constant undefined");
  if (d == 3.0 * (t - w())) fail("D = 3 (T - W) makes the closed-phase level undefined");
}

FLDerived fl_derived(const FLParams& p) {
  p.validate();
  const double denom_alpha = p.f * p.f - 2.0 * p.r * p.r;
  const double denom_beta = p.d - 3.0 * (p.t - p.w());
  FLDerived out;
  out.alpha = (4.0 * p.a * p.r - 6.0 * p.f * p.b) / denom_alpha;
  out.beta = p.c * p.d / denom_beta;
  return out;
}

double fl_waveform_continuous(const FLParams& p, const FLDerived& d, double t) {
  const double w = p.w();
  if (t <= p.r) {
    return p.a - (2.0 * p.a + p.r * d.alpha) / p.r * t +
           (p.a + p.r * d.alpha) / (p.r * p.r) * t * t;
  }
  if (t <= w) {
    const double x = t - p.r;
    return d.alpha * x + (3.0 * p.b - 2.0 * p.f * d.alpha) / (p.f * p.f) * x * x -
           (2.0 * p.b - p.f * d.alpha) / (p.f * p.f * p.f) * x * x * x;
  }
  if (t <= w + p.d) {
    const double x = t - w;
    return p.c - 2.0 * (p.c - d.beta) / p.d * x + (p.c - d.beta) / (p.d * p.d) * x * x;
  }
  return d.beta;
}

std::vector<PulseSegment> fl_segments(const FLParams& p, const FLDerived& d) {
  // Substituting t = offset + duration * tau scales the coefficient of
  // tau^j by duration^j, cancelling the 1/duration^j factors.
  std::vector<PulseSegment> segs(4);
  segs[0] = {0.0, p.r,
             {{p.a, -(2.0 * p.a + p.r * d.alpha), p.a + p.r * d.alpha}}};
  segs[1] = {p.r, p.f,
             {{0.0, d.alpha * p.f, 3.0 * p.b - 2.0 * p.f * d.alpha,
               -(2.0 * p.b - p.f * d.alpha)}}};
  segs[2] = {p.w(), p.d,
             {{p.c, -2.0 * (p.c - d.beta), p.c - d.beta}}};
  segs[3] = {p.w() + p.d, p.t - p.w() - p.d, {{d.beta}}};
  return segs;
}

std::vector<double> fl_antialiased_cycle(const FLParams& p, const FLDerived& d,
                                         const CosineSeries& series,
                                         double half_width_s, double period_s,
                                         std::span<const double> eval_times_s,
                                         TableCache* cache) {
  const auto segs = fl_segments(p, d);
  std::vector<double> out(eval_times_s.size(), 0.0);
  for (const auto& seg : segs) {
    if (seg.duration <= 0.0) continue;
    const double seg_s = seg.duration * period_s;
    const double tw_norm = half_width_s / seg_s;
    std::shared_ptr<const AntialiasTables> cached;
    AntialiasTables local;
    const AntialiasTables* tab;
    if (cache) {
      cached = cache->get(seg.pulse.degree(), tw_norm);
      tab = cached.get();
    } else {
      local = build_tables(series, seg.pulse.degree(), tw_norm);
      tab = &local;
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      const double tn = (eval_times_s[i] / period_s - seg.offset) / seg.duration;
      out[i] += eval_antialiased_poly(*tab, seg.pulse, tn);
    }
  }
  return out;
}

}  // namespace afes
