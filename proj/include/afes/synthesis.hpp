#ifndef AFES_SYNTHESIS_HPP
#define AFES_SYNTHESIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "afes/equalizer.hpp"
#include "afes/fl_model.hpp"
#include "afes/lf_model.hpp"

namespace afes {

// Per-sample instantaneous fundamental frequency.
struct F0Trajectory {
  double fs = 0.0;
  std::vector<double> values;  // Hz, one per sample

  void validate() const;  // all values in (0, fs/2)
};

// f0(t) = f_base * 2^((depth_cents / 1200) sin(2 pi rate_hz t)).
F0Trajectory vibrato_f0(double f_base, double depth_cents, double rate_hz,
                        double duration_s, double fs);

// Cycle onset times from trapezoid-rule phase accumulation; onsets at
// integer phase crossings with linear sub-sample interpolation. The first
// onset is t = 0.
std::vector<double> cycle_times(const F0Trajectory& traj);

// Piecewise-linear breakpoint functions for time-varying model parameters;
// values clamp to the end breakpoints outside their span.
class ParamTrajectory {
 public:
  ParamTrajectory() = default;
  // name -> list of (time_s, value); a single breakpoint means constant
  explicit ParamTrajectory(std::map<std::string, std::vector<std::pair<double, double>>> tracks)
      : tracks_(std::move(tracks)) {}

  bool has(const std::string& name) const { return tracks_.count(name) > 0; }
  double at(const std::string& name, double t) const;

 private:
  std::map<std::string, std::vector<std::pair<double, double>>> tracks_;
};

struct SignalBuffer {
  double fs = 0.0;
  std::vector<double> samples;
  std::string model;
};

struct SynthesisOptions {
  bool equalize = false;
  bool direct = false;        // sample the continuous model, no antialiasing
  bool constant_flow = false; // rescale cycles to the first cycle's positive flow
};

enum class SourceModel { kFL, kLF };

// End-to-end excitation synthesis: parameters are sampled once per cycle at
// its onset, each cycle's closed-form antialiased waveform (support
// extended t_w beyond both edges) is overlap-added at the sample instants,
// and the result is optionally passed through the IIR equalizer designed
// for (series, fs). Parameter-set violations name the offending cycle.
SignalBuffer synthesize(SourceModel model, const ParamTrajectory& params,
                        const F0Trajectory& traj, const CosineSeries& series,
                        const SynthesisOptions& options,
                        const EqualizerDesign* equalizer = nullptr);

// FL/LF parameter lookups used by synthesize (single source of truth for
// the parameter field names).
FLParams fl_params_at(const ParamTrajectory& params, double t);
LFParams lf_params_at(const ParamTrajectory& params, double t);

}  // namespace afes

#endif
