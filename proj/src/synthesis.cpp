#include "afes/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "afes/window_design.hpp"

namespace afes {

void F0Trajectory::validate() const {
  if (fs <= 0.0) throw std::invalid_argument("f0 trajectory: fs must be positive");
  for (double v : values)
    if (!(v > 0.0) || v >= fs / 2.0)
      throw std::invalid_argument("f0 trajectory: values must lie in (0, fs/2)");
}

F0Trajectory vibrato_f0(double f_base, double depth_cents, double rate_hz,
                        double duration_s, double fs) {
  if (f_base <= 0.0) throw std::invalid_argument("vibrato_f0: base frequency must be positive");
  F0Trajectory traj;
  traj.fs = fs;
  const std::size_t n = static_cast<std::size_t>(std::llround(duration_s * fs));
  traj.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / fs;
    traj.values[i] =
        f_base * std::pow(2.0, depth_cents / 1200.0 *
                                   std::sin(2.0 * std::numbers::pi * rate_hz * t));
  }
  return traj;
}

std::vector<double> cycle_times(const F0Trajectory& traj) {
  traj.validate();
  std::vector<double> onsets;
  if (traj.values.empty()) return onsets;
  double phase = 0.0;
  double next = 0.0;  // next integer crossing
  onsets.push_back(0.0);
  next = 1.0;
  for (std::size_t i = 0; i + 1 < traj.values.size(); ++i) {
    const double inc = 0.5 * (traj.values[i] + traj.values[i + 1]) / traj.fs;
    const double new_phase = phase + inc;
    while (next <= new_phase) {
      const double frac = (next - phase) / inc;
      onsets.push_back((static_cast<double>(i) + frac) / traj.fs);
      next += 1.0;
    }
    phase = new_phase;
  }
  return onsets;
}

double ParamTrajectory::at(const std::string& name, double t) const {
  auto it = tracks_.find(name);
  if (it == tracks_.end() || it->second.empty())
    throw std::invalid_argument("parameter trajectory: missing track " + name);
  const auto& bp = it->second;
  if (t <= bp.front().first) return bp.front().second;
  if (t >= bp.back().first) return bp.back().second;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    if (t <= bp[i + 1].first) {
      const double span = bp[i + 1].first - bp[i].first;
      const double w = span > 0.0 ? (t - bp[i].first) / span : 1.0;
      return bp[i].second + w * (bp[i + 1].second - bp[i].second);
    }
  }
  return bp.back().second;
}

FLParams fl_params_at(const ParamTrajectory& params, double t) {
  FLParams p;
  p.a = params.at("A", t);
  p.b = params.at("B", t);
  p.c = params.at("C", t);
  p.r = params.at("R", t);
  p.f = params.at("F", t);
  p.d = params.at("D", t);
  return p;
}

LFParams lf_params_at(const ParamTrajectory& params, double t) {
  LFParams p;
  p.tp = params.at("tp", t);
  p.te = params.at("te", t);
  p.ta = params.at("ta", t);
  p.tc = params.at("tc", t);
  p.ee = params.has("Ee") ? params.at("Ee", t) : 1.0;
  return p;
}

namespace {

// Positive part of the per-cycle flow integral of the continuous model,
// trapezoid rule at 64 points, in seconds.
template <typename WaveFn>
double positive_flow(const WaveFn& wave, double period_s) {
  constexpr int kPoints = 64;
  double acc = 0.0;
  double prev = std::max(wave(0.0), 0.0);
  for (int i = 1; i <= kPoints; ++i) {
    const double tn = static_cast<double>(i) / kPoints;
    const double cur = std::max(wave(tn), 0.0);
    acc += 0.5 * (prev + cur);
    prev = cur;
  }
  return acc * period_s / kPoints;
}

}  // namespace

SignalBuffer synthesize(SourceModel model, const ParamTrajectory& params,
                        const F0Trajectory& traj, const CosineSeries& series,
                        const SynthesisOptions& options,
                        const EqualizerDesign* equalizer) {
  SignalBuffer buf;
  buf.fs = traj.fs;
  buf.model = model == SourceModel::kFL ? "fl" : "lf";
  buf.samples.assign(traj.values.size(), 0.0);
  if (traj.values.empty()) return buf;

  const double fs = traj.fs;
  const double tw_abs = half_width_for_fs(series, fs);
  const auto onsets = cycle_times(traj);
  const double duration = static_cast<double>(traj.values.size()) / fs;
  TableCache cache(series);

  double first_flow = 0.0;
  for (std::size_t ci = 0; ci < onsets.size(); ++ci) {
    const double onset = onsets[ci];
    const double period =
        (ci + 1 < onsets.size())
            ? onsets[ci + 1] - onset
            : 1.0 / traj.values[std::min(traj.values.size() - 1,
                                         static_cast<std::size_t>(onset * fs))];

    FLParams flp;
    FLDerived fld;
    LFParams lfp;
    LFDerived lfd;
    try {
      if (model == SourceModel::kFL) {
        flp = fl_params_at(params, onset);
        fld = fl_derived(flp);
      } else {
        lfp = lf_params_at(params, onset);
        lfd = solve_lf_coefficients(lfp);
      }
    } catch (const ModelParameterError& e) {
      throw ModelParameterError("cycle " + std::to_string(ci) + ": " + e.what());
    }
    const auto wave = [&](double tn) {
      return model == SourceModel::kFL ? fl_waveform_continuous(flp, fld, tn)
                                       : lf_waveform_continuous(lfp, lfd, tn);
    };

    double gain = 1.0;
    if (options.constant_flow) {
      const double flow = positive_flow(wave, period);
      if (ci == 0) first_flow = flow;
      else if (flow > 0.0) gain = first_flow / flow;
    }

    if (options.direct) {
      const long i0 = std::max<long>(0, static_cast<long>(std::ceil(onset * fs)));
      const long i1 = std::min<long>(static_cast<long>(buf.samples.size()) - 1,
                                     static_cast<long>(std::ceil((onset + period) * fs)) - 1);
      for (long i = i0; i <= i1; ++i) {
        const double tn = (static_cast<double>(i) / fs - onset) / period;
        buf.samples[i] += gain * wave(std::min(tn, 1.0));
      }
      continue;
    }

    const double lo_t = onset - tw_abs;
    const double hi_t = std::min(onset + period + tw_abs, duration);
    const long i0 = std::max<long>(0, static_cast<long>(std::ceil(lo_t * fs)));
    const long i1 = std::min<long>(static_cast<long>(buf.samples.size()) - 1,
                                   static_cast<long>(std::floor(hi_t * fs)));
    if (i1 < i0) continue;
    std::vector<double> rel(i1 - i0 + 1);
    for (long i = i0; i <= i1; ++i) rel[i - i0] = static_cast<double>(i) / fs - onset;
    const auto vals =
        model == SourceModel::kFL
            ? fl_antialiased_cycle(flp, fld, series, tw_abs, period, rel, &cache)
            : lf_antialiased_cycle(lfp, lfd, series, tw_abs, period, rel, &cache);
    for (long i = i0; i <= i1; ++i) buf.samples[i] += gain * vals[i - i0];
  }

  if (options.equalize) {
    if (equalizer == nullptr)
      throw std::invalid_argument("synthesize: equalize requested without a design");
    buf.samples = apply_iir(*equalizer, buf.samples);
  }
  return buf;
}

}  // namespace afes
