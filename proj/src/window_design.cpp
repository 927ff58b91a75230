#include "afes/window_design.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace afes {

namespace {

// Gaussian elimination with partial pivoting; throws on singular systems.
std::vector<double> solve_linear(std::vector<std::vector<double>> a,
                                 std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-300)
      throw DesignError("window design: constraint matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

struct LobePeak {
  double x;
  double db;
};

std::vector<LobePeak> lobe_peaks(const CosineSeries& series, double x_first_zero,
                                 double x_max, int points_per_lobe) {
  const double dc = 2.0 * series.coefficients[0];
  std::vector<LobePeak> peaks;
  // Lobes lie between consecutive spectral nulls, which for constrained
  // series sit at integer x beyond the first zero.
  double lo = x_first_zero;
  while (lo < x_max) {
    const double hi = std::floor(lo + 1.0 + 1e-9);
    double best = 0.0, best_x = lo;
    for (int i = 1; i < points_per_lobe; ++i) {
      const double x = lo + (hi - lo) * static_cast<double>(i) / points_per_lobe;
      const double v = std::abs(spectrum_shape(series.coefficients, x));
      if (v > best) { best = v; best_x = x; }
    }
    peaks.push_back({best_x, 20.0 * std::log10(best / dc)});
    lo = hi;
  }
  return peaks;
}

}  // namespace

CosineSeries solve_coefficients(const WindowDesignSpec& spec) {
  if (spec.enforced_orders < 1)
    throw DesignError("window design: need at least one enforced derivative order");
  const int n = spec.term_count();
  std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
  std::vector<double> q(n, 0.0);
  for (int k = 0; k < n; ++k) r[0][k] = 1.0;  // unit height at origin
  q[0] = 1.0;
  for (int p = 0; p <= spec.enforced_orders; ++p) {
    // p = 0 is the endpoint level; p >= 1 the even derivatives there.
    for (int k = 0; k < n; ++k) {
      const double sgn = (k & 1) ? -1.0 : 1.0;
      r[1 + p][k] = sgn * std::pow(static_cast<double>(k), 2.0 * p);
    }
  }
  r[n - 1].assign(n, 0.0);
  r[n - 1][0] = 1.0;  // pins h0
  q[n - 1] = spec.q0;
  return CosineSeries{solve_linear(std::move(r), std::move(q)), 1.0};
}

SidelobeReport measure_sidelobe_analytic(const CosineSeries& series) {
  SidelobeReport rep;
  rep.first_zero_x = first_zero_abscissa(series);
  const double fz = rep.first_zero_x;
  auto peaks = lobe_peaks(series, fz, 50.0 * fz, 64);
  double best = -1e9;
  for (const auto& p : peaks) best = std::max(best, p.db);
  rep.max_sidelobe_db = best;

  // Decay: keep lobes above the numeric floor (to at most 64x the first
  // zero), then fit level vs log2(x) over the last two octaves of that set.
  auto fit = lobe_peaks(series, fz, 64.0 * fz, 64);
  std::vector<LobePeak> usable;
  for (const auto& p : fit) {
    if (p.db < -250.0) break;
    usable.push_back(p);
  }
  if (usable.size() >= 2) {
    const double x_end = usable.back().x;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (const auto& p : usable) {
      if (p.x < x_end / 4.0) continue;
      const double lx = std::log2(p.x);
      sx += lx; sy += p.db; sxx += lx * lx; sxy += lx * p.db;
      ++cnt;
    }
    if (cnt >= 2)
      rep.decay_db_per_oct = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  }
  return rep;
}

WindowDesignSpec optimize_q0(int enforced_orders) {
  if (enforced_orders < 1 || enforced_orders > 6)
    throw DesignError("optimize_q0: enforced order count must be in 1..6");
  const auto objective = [&](double q0) {
    WindowDesignSpec s{enforced_orders, q0};
    return measure_sidelobe_analytic(solve_coefficients(s)).max_sidelobe_db;
  };
  double a = 0.1, b = 0.5;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = objective(c), fd = objective(d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - gr * (b - a);
      fc = objective(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + gr * (b - a);
      fd = objective(d);
    }
  }
  const double q0 = 0.5 * (a + b);
  if (q0 - 0.1 < 1e-6 || 0.5 - q0 < 1e-6)
    throw DesignError("optimize_q0: search stalled at bracket edge; best q0 = " +
                      std::to_string(q0) + " with max sidelobe " +
                      std::to_string(objective(q0)) + " dB");
  return WindowDesignSpec{enforced_orders, q0};
}

double first_zero_abscissa(const CosineSeries& series) {
  const auto& h = series.coefficients;
  double prev = spectrum_shape(h, 1e-9);
  const double step = 0.01;
  for (double x = step; x < 1000.0; x += step) {
    const double cur = spectrum_shape(h, x);
    if (cur == 0.0) return x;
    if ((prev > 0.0) != (cur > 0.0)) {
      // bisect
      double lo = x - step, hi = x;
      for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double v = spectrum_shape(h, mid);
        if (v == 0.0) return mid;
        if ((v > 0.0) == (prev > 0.0)) lo = mid; else hi = mid;
        if (hi - lo < 1e-12) break;
      }
      return 0.5 * (lo + hi);
    }
    prev = cur;
  }
  throw DesignError("first_zero_abscissa: no spectral zero found");
}

double half_width_for_fs(const CosineSeries& series, double fs) {
  if (fs <= 0.0) throw DesignError("half_width_for_fs: fs must be positive");
  // Zeros dilate as 1/t_w: first zero at f = x0 / (2 t_w). Placing it at
  // fs/2 gives t_w = x0 / fs.
  return first_zero_abscissa(series) / fs;
}

}  // namespace afes
