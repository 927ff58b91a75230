#ifndef AFES_FL_MODEL_HPP
#define AFES_FL_MODEL_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "afes/poly_antialias.hpp"

namespace afes {

struct ModelParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Fujisaki-Ljungqvist excitation parameters. Durations R, F, D are
// fractions of the period T (normally 1); A, B, C are waveform amplitudes.
// The excitation E(t) is piecewise polynomial: a quadratic opening on
// [0, R], a cubic on [R, W] with W = R + F, a quadratic return on
// [W, W + D], and a constant closed phase.
struct FLParams {
  double a = 0.2;
  double b = -1.0;
  double c = -0.6;
  double r = 0.48;
  double f = 0.15;
  double d = 0.12;
  double t = 1.0;

  double w() const { return r + f; }
  void validate() const;  // throws ModelParameterError
};

struct FLDerived {
  double alpha = 0.0;  // opening slope constant
  double beta = 0.0;   // closed-phase level
};

// Slope and closed-phase constants. Throws ModelParameterError when either
// denominator (f^2 - 2 r^2 or d - 3 (t - w)) vanishes.
FLDerived fl_derived(const FLParams& p);

// Continuous waveform at time t in [0, T]. t = 0 takes the opening-piece
// limit value A.
double fl_waveform_continuous(const FLParams& p, const FLDerived& d, double t);

struct PulseSegment {
  double offset = 0.0;    // start, in period-normalized time
  double duration = 0.0;  // length, in period-normalized time
  PolynomialPulse pulse;  // coefficients in segment-local tau in [0, 1]
};

// The four pieces re-expressed in segment-local normalized time.
// Evaluating the concatenation reproduces fl_waveform_continuous.
std::vector<PulseSegment> fl_segments(const FLParams& p, const FLDerived& d);

// Antialiased values of one cycle at the given times (seconds, relative to
// cycle start; support extends half_width_s beyond both cycle edges). Each
// segment is filtered with the kernel rescaled to its own normalized time;
// unit-DC normalization makes that rescaling exact. An optional cache reuses
// tables across cycles.
std::vector<double> fl_antialiased_cycle(const FLParams& p, const FLDerived& d,
                                         const CosineSeries& series,
                                         double half_width_s, double period_s,
                                         std::span<const double> eval_times_s,
                                         TableCache* cache = nullptr);

}  // namespace afes

#endif
