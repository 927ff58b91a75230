#ifndef AFES_LF_MODEL_HPP
#define AFES_LF_MODEL_HPP

#include <span>
#include <vector>

#include "afes/fl_model.hpp"  // ModelParameterError
#include "afes/poly_antialias.hpp"

namespace afes {

// Liljencrants-Fant timing parameters, as fractions of the period. The
// waveform is E0 e^{alpha t} sin(omega_g t) up to t_e, an exponential
// return from -Ee toward zero on [t_e, t_c], and zero afterwards.
struct LFParams {
  double tp = 0.4134;
  double te = 0.5530;
  double ta = 0.0041;
  double tc = 0.5817;
  double ee = 1.0;

  void validate() const;  // throws ModelParameterError
};

struct LFDerived {
  double e0_over_ee = 0.0;
  double alpha = 0.0;
  double omega_g = 0.0;
  double beta = 0.0;
};

// Solves the model constants: omega_g = pi / tp (flow peak at tp); beta
// from the amplitude match at t_e (beta ta = 1 - e^{-beta (tc - te)},
// positive root); alpha from the zero-net-flow condition with the flow
// integral in closed form; E0 from E(t_e) = -Ee. Root finding is bracketed
// to 1e-12; a missing sign change raises ModelParameterError naming the
// equation.
LFDerived solve_lf_coefficients(const LFParams& p);

// Continuous waveform at t in [0, 1].
double lf_waveform_continuous(const LFParams& p, const LFDerived& d, double t);

// Antialiased cycle at the given times (seconds relative to cycle start).
// The opening phase is the imaginary part of a complex-exponential pulse on
// [0, te]; the return phase is a real exponential plus a constant on
// [te, tc]; the closed phase contributes nothing.
std::vector<double> lf_antialiased_cycle(const LFParams& p, const LFDerived& d,
                                         const CosineSeries& series,
                                         double half_width_s, double period_s,
                                         std::span<const double> eval_times_s,
                                         TableCache* cache = nullptr);

}  // namespace afes

#endif
