#ifndef AFES_WINDOW_DESIGN_HPP
#define AFES_WINDOW_DESIGN_HPP

#include <stdexcept>

#include "afes/cosine_series.hpp"

namespace afes {

struct DesignError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Design request for a cosine-series antialiasing function. P even
// derivative orders are forced to zero at the endpoints (on top of unit
// height at the origin and zero endpoint level), and the first coefficient
// is pinned to q0, giving a square (P+3)-term system.
struct WindowDesignSpec {
  int enforced_orders = 3;  // P
  double q0 = 0.0;

  int term_count() const { return enforced_orders + 3; }
};

// Solves the constraint system for the coefficients. Throws DesignError if
// the system is singular. The result has half_width = 1.
CosineSeries solve_coefficients(const WindowDesignSpec& spec);

// Sidelobe character of the analytic spectrum.
struct SidelobeReport {
  double max_sidelobe_db = 0.0;   // peak level beyond the first zero, re DC
  double decay_db_per_oct = 0.0;  // envelope slope over the last measurable two octaves
  double first_zero_x = 0.0;      // abscissa of the first spectral zero in x = 2 f t_w
};

// Scans lobe peaks of |spectrum| beyond the first zero (64 samples per
// lobe). The peak search covers 50x the first-zero frequency; the decay fit
// uses lobes above a -250 dB floor, the region where double precision still
// tracks the true envelope.
SidelobeReport measure_sidelobe_analytic(const CosineSeries& series);

// Minimizes the peak sidelobe over q0 in [0.1, 0.5] by golden-section
// search (tolerance 1e-10). Throws DesignError when the minimum sits on the
// bracket edge, reporting the best value found.
WindowDesignSpec optimize_q0(int enforced_orders);

// Abscissa (x = 2 f t_w units) of the first zero of the spectrum, located
// by scan plus bisection.
double first_zero_abscissa(const CosineSeries& series);

// Half-width placing the first spectral zero at fs/2.
double half_width_for_fs(const CosineSeries& series, double fs);

}  // namespace afes

#endif
