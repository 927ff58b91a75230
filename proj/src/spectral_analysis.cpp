#include "afes/spectral_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "afes/fft.hpp"

namespace afes {

namespace {

std::vector<double> cosine_window_samples(const CosineSeries& series, int length) {
  std::vector<double> w(length);
  for (int i = 0; i < length; ++i) {
    const double x = (static_cast<double>(i) - 0.5 * (length - 1)) / (length - 1);
    double v = 0.0;
    for (std::size_t k = 0; k < series.coefficients.size(); ++k)
      v += series.coefficients[k] * std::cos(2.0 * std::numbers::pi * k * x);
    w[i] = v;
  }
  return w;
}

void normalize_dc(std::vector<double>& w) {
  double s = 0.0;
  for (double v : w) s += v;
  if (s != 0.0)
    for (double& v : w) v /= s;
}

}  // namespace

std::vector<double> sample_cosine_window(const CosineSeries& series, int length) {
  return cosine_window_samples(series, length);
}

std::vector<double> make_analysis_window(AnalysisWindowKind kind, int length) {
  if (length < 2) throw std::invalid_argument("make_analysis_window: length too small");
  std::vector<double> w;
  switch (kind) {
    case AnalysisWindowKind::kRectangular:
      w.assign(length, 1.0);
      break;
    case AnalysisWindowKind::kNuttall11:
      w = cosine_window_samples(nuttall11_window(), length);
      break;
    case AnalysisWindowKind::kSelfConvolvedNuttall: {
      const int base_len = (length + 2) / 2;
      const auto base = cosine_window_samples(nuttall_truncation_window(), base_len);
      std::vector<double> conv(2 * base_len - 1, 0.0);
      for (int i = 0; i < base_len; ++i)
        for (int j = 0; j < base_len; ++j) conv[i + j] += base[i] * base[j];
      conv.resize(length, 0.0);
      w = std::move(conv);
      break;
    }
  }
  normalize_dc(w);
  return w;
}

SidelobeReport measure_sidelobe(std::span<const double> window) {
  if (window.empty()) throw std::invalid_argument("measure_sidelobe: empty window");
  const std::size_t pad = next_power_of_two(window.size() * 64);
  std::vector<std::complex<double>> buf(pad, 0.0);
  for (std::size_t i = 0; i < window.size(); ++i) buf[i] = window[i];
  fft_pow2(buf, false);

  std::vector<double> mag(pad / 2 + 1);
  for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(buf[i]);
  const double dc = mag[0];

  // First null, then lobe peaks between successive local minima.
  std::size_t first_null = 0;
  for (std::size_t i = 1; i + 1 < mag.size(); ++i) {
    if (mag[i] <= mag[i - 1] && mag[i] <= mag[i + 1] && mag[i] < 0.5 * dc) {
      first_null = i;
      break;
    }
  }
  if (first_null == 0) throw std::invalid_argument("measure_sidelobe: no spectral null found");

  SidelobeReport rep;
  rep.first_zero_x = static_cast<double>(first_null) / pad;  // cycles/sample

  struct Peak { double f; double db; };
  std::vector<Peak> peaks;
  double cur_max = 0.0, cur_f = 0.0;
  for (std::size_t i = first_null; i + 1 < mag.size(); ++i) {
    if (mag[i] > cur_max) { cur_max = mag[i]; cur_f = static_cast<double>(i) / pad; }
    const bool at_min = mag[i] <= mag[i - 1] && mag[i] <= mag[i + 1];
    if (at_min && cur_max > 0.0 && i > first_null) {
      peaks.push_back({cur_f, 20.0 * std::log10(cur_max / dc)});
      cur_max = 0.0;
    }
  }
  if (peaks.empty()) throw std::invalid_argument("measure_sidelobe: no sidelobes found");

  double best = -1e9;
  for (const auto& p : peaks) best = std::max(best, p.db);
  rep.max_sidelobe_db = best;

  // Decay fit: lobes above the numeric floor and below the fold-over
  // region, last two octaves of that range. Near-equiripple designs hold a
  // plateau around the peak sidelobe before the asymptote sets in, so the
  // fit also starts past the last lobe within 1 dB of the maximum.
  std::vector<Peak> usable;
  for (const auto& p : peaks) {
    if (p.db < -270.0) break;
    if (p.f > 0.125) break;
    usable.push_back(p);
  }
  if (usable.size() >= 2) {
    const double f_end = usable.back().f;
    double f_plateau = usable.front().f;
    for (const auto& p : usable)
      if (p.db > best - 1.0) f_plateau = p.f;
    const double f_lo = std::max(1.25 * f_plateau, f_end / 4.0);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (const auto& p : usable) {
      if (p.f < f_lo) continue;
      const double lx = std::log2(p.f);
      sx += lx; sy += p.db; sxx += lx * lx; sxy += lx * p.db;
      ++cnt;
    }
    if (cnt >= 2)
      rep.decay_db_per_oct = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  }
  return rep;
}

SidelobeReport measure_sidelobe(const CosineSeries& series) {
  return measure_sidelobe_analytic(series);
}

Spectrogram spectrogram(std::span<const double> signal, double fs, double window_ms,
                        double shift_ms, AnalysisWindowKind kind) {
  const int win_len = static_cast<int>(std::round(window_ms * 1e-3 * fs));
  const int hop = std::max(1, static_cast<int>(std::round(shift_ms * 1e-3 * fs)));
  if (static_cast<int>(signal.size()) < win_len)
    throw std::invalid_argument("spectrogram: signal shorter than the analysis window");
  const auto win = make_analysis_window(kind, win_len);
  const std::size_t nfft = next_power_of_two(win_len);

  Spectrogram sg;
  sg.fs = fs;
  sg.frequencies.resize(nfft / 2 + 1);
  for (std::size_t k = 0; k < sg.frequencies.size(); ++k)
    sg.frequencies[k] = static_cast<double>(k) * fs / nfft;

  double global_max = 0.0;
  for (int start = 0; start + win_len <= static_cast<int>(signal.size()); start += hop) {
    std::vector<std::complex<double>> buf(nfft, 0.0);
    for (int i = 0; i < win_len; ++i) buf[i] = signal[start + i] * win[i];
    fft_pow2(buf, false);
    std::vector<double> row(nfft / 2 + 1);
    for (std::size_t k = 0; k < row.size(); ++k) {
      row[k] = std::norm(buf[k]);
      global_max = std::max(global_max, row[k]);
    }
    sg.power_db.push_back(std::move(row));
    sg.times.push_back((start + 0.5 * win_len) / fs);
  }
  const double ref = global_max > 0.0 ? global_max : 1.0;
  for (auto& row : sg.power_db)
    for (double& v : row)
      v = 10.0 * std::log10(std::max(v / ref, 1e-300));
  return sg;
}

SpuriousFloor measure_spurious_floor(std::span<const double> signal, double fs,
                                     double f0_nominal) {
  const std::size_t n = signal.size();
  if (n < 16) throw std::invalid_argument("measure_spurious_floor: signal too short");
  if (!(f0_nominal > 0.0) || f0_nominal >= 0.45 * fs)
    throw std::invalid_argument("measure_spurious_floor: f0 out of range");
  const auto win = make_analysis_window(AnalysisWindowKind::kSelfConvolvedNuttall,
                                        static_cast<int>(n));
  std::vector<std::complex<double>> buf(n);
  for (std::size_t i = 0; i < n; ++i) buf[i] = signal[i] * win[i];
  const auto spec = fft_any(buf);
  const std::size_t half = n / 2;
  std::vector<double> pw(half + 1);
  for (std::size_t k = 0; k <= half; ++k) pw[k] = std::norm(spec[k]);
  const double binw = fs / static_cast<double>(n);

  // The fundamental must sit within 5% of the nominal f0 and carry real
  // energy relative to the strongest bin.
  {
    const double global_max = *std::max_element(pw.begin(), pw.end());
    const std::size_t lo = static_cast<std::size_t>(std::floor(0.95 * f0_nominal / binw));
    const std::size_t hi = std::min(half, static_cast<std::size_t>(std::ceil(1.05 * f0_nominal / binw)));
    std::size_t arg = lo;
    for (std::size_t k = lo; k <= hi; ++k)
      if (pw[k] > pw[arg]) arg = k;
    if (arg == lo || arg == hi || pw[arg] < 1e-12 * global_max)
      throw std::invalid_argument("measure_spurious_floor: no harmonic peak within 5% of f0");
  }

  const double band_lo = 1.0;
  const double band_hi = 0.9 * fs / 2.0;
  std::vector<bool> inter(half + 1, false);
  for (std::size_t k = 0; k <= half; ++k) {
    const double f = k * binw;
    inter[k] = (f >= band_lo && f <= band_hi);
  }
  double peak = 0.0;
  for (double hf = f0_nominal; hf < band_hi; hf += f0_nominal) {
    const long center = std::lround(hf / binw);
    for (long k = center - 6; k <= center + 6; ++k)
      if (k >= 0 && k <= static_cast<long>(half)) inter[k] = false;
    for (long k = center - 3; k <= center + 3; ++k)
      if (k >= 0 && k <= static_cast<long>(half)) peak = std::max(peak, pw[k]);
  }
  std::vector<double> vals;
  vals.reserve(half);
  for (std::size_t k = 0; k <= half; ++k)
    if (inter[k]) vals.push_back(pw[k]);
  if (vals.empty() || peak <= 0.0)
    throw std::invalid_argument("measure_spurious_floor: empty measurement region");
  std::sort(vals.begin(), vals.end(), std::greater<>());
  const std::size_t top = std::max<std::size_t>(1, vals.size() / 10);
  double median;
  if (top % 2 == 1)
    median = vals[top / 2];
  else
    median = 0.5 * (vals[top / 2 - 1] + vals[top / 2]);

  SpuriousFloor out;
  const double ref = *std::max_element(pw.begin(), pw.end());
  out.floor_db = 10.0 * std::log10(std::max(median / ref, 1e-300));
  out.peak_db = 10.0 * std::log10(std::max(peak / ref, 1e-300));
  return out;
}

}  // namespace afes
