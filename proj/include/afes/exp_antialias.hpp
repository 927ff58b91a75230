#ifndef AFES_EXP_ANTIALIAS_HPP
#define AFES_EXP_ANTIALIAS_HPP

#include <complex>

#include "afes/cosine_series.hpp"

namespace afes {

// Closed-form convolution pieces of one cosine harmonic
// cos(k pi s / t_w) on (-t_w, t_w] with the exponential pulse e^{beta tau}
// on tau in (0, 1]. The three terms cover the onset transition, the settled
// interior, and the release; the release interval overlaps the interior one
// and enters with a negative sign so that the overlapped sum equals the
// exact convolution for every half-width, including t_w > 1/2 and t_w > 1.
// Throws std::domain_error at the resonance k^2 a^2 + beta^2 = 0
// (a = pi / t_w).
std::complex<double> element_function(int k, std::complex<double> beta, double t,
                                      double half_width);

// Antialiased exponential pulse: sum of the kernel's harmonics (the k = 0
// term integrates the exponential over the sliding overlap window),
// normalized to unit kernel DC gain. Supported on (-t_w, 1 + t_w).
std::complex<double> eval_antialiased_exp(const CosineSeries& series,
                                          std::complex<double> beta, double t,
                                          double half_width);

}  // namespace afes

#endif
