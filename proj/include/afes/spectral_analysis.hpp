#ifndef AFES_SPECTRAL_ANALYSIS_HPP
#define AFES_SPECTRAL_ANALYSIS_HPP

#include <span>
#include <vector>

#include "afes/cosine_series.hpp"
#include "afes/window_design.hpp"

namespace afes {

enum class AnalysisWindowKind {
  kRectangular,
  kNuttall11,
  kSelfConvolvedNuttall,  // discrete self-convolution of the -93.32 dB window
};

// Sampled analysis window of the given length, normalized to unit DC sum.
// The self-convolved variant reaches a -186 dB sidelobe ceiling, low enough
// to expose spurious floors near -180 dB.
std::vector<double> make_analysis_window(AnalysisWindowKind kind, int length);

// Sampled cosine-series window (series half-width mapped to length/2).
std::vector<double> sample_cosine_window(const CosineSeries& series, int length);

// Sidelobe character of a sampled window via a zero-padded transform.
// Frequencies are in cycles/sample; the decay fit uses the lobe-peak
// envelope over the last two octaves that stay above the numeric floor and
// below the fold-over region.
SidelobeReport measure_sidelobe(std::span<const double> window);

// Analytic overload for cosine-series windows.
SidelobeReport measure_sidelobe(const CosineSeries& series);

struct Spectrogram {
  double fs = 0.0;
  std::vector<double> times;        // frame centres, seconds
  std::vector<double> frequencies;  // Hz
  std::vector<std::vector<double>> power_db;  // [frame][bin], re global max
};

// Magnitude STFT in dB re the global maximum; window and shift in
// milliseconds; deterministic.
Spectrogram spectrogram(std::span<const double> signal, double fs,
                        double window_ms = 40.0, double shift_ms = 2.0,
                        AnalysisWindowKind kind = AnalysisWindowKind::kSelfConvolvedNuttall);

struct SpuriousFloor {
  double floor_db = 0.0;  // median of the top decile of inter-harmonic bins
  double peak_db = 0.0;   // strongest harmonic level (same reference)
  double relative_db() const { return floor_db - peak_db; }
};

// One long-window power spectrum of the whole signal (self-convolved
// Nuttall analysis window, transform length = signal length so harmonics of
// an exact f0 stay bin-aligned). Harmonic neighbourhoods are +-3 bins; the
// inter-harmonic statistic excludes +-6 bins and covers 1 Hz .. 0.9 fs/2.
// Throws std::invalid_argument when no harmonic peak is found within 5% of
// the nominal f0.
SpuriousFloor measure_spurious_floor(std::span<const double> signal, double fs,
                                     double f0_nominal);

}  // namespace afes

#endif
