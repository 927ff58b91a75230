#include "afes/poly_antialias.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace afes {

namespace {

constexpr double kPi = std::numbers::pi;

double horner(const std::vector<double>& coef, double x, int count) {
  double acc = 0.0;
  for (int k = count - 1; k >= 0; --k) acc = acc * x + coef[k];
  return acc;
}

// Row-vector combination w = p^T M for the first rows of M.
std::vector<double> combine(const std::vector<double>& p,
                            const std::vector<std::vector<double>>& m) {
  std::vector<double> w(m[0].size(), 0.0);
  for (std::size_t r = 0; r < p.size(); ++r)
    for (std::size_t c = 0; c < w.size(); ++c) w[c] += p[r] * m[r][c];
  return w;
}

}  // namespace

double PolynomialPulse::value(double tau) const {
  double acc = 0.0;
  for (int k = degree(); k >= 0; --k) acc = acc * tau + coefficients[k];
  return acc;
}

std::vector<std::vector<double>> binomial_matrix(int n) {
  if (n < 0) throw std::invalid_argument("binomial_matrix: negative degree");
  std::vector<std::vector<double>> b(n + 1, std::vector<double>(n + 1, 0.0));
  for (int r = 0; r <= n; ++r) {
    b[r][0] = 1.0;
    for (int k = 1; k <= r; ++k)
      b[r][k] = (k == r) ? 1.0 : b[r - 1][k - 1] + b[r - 1][k];
  }
  return b;
}

AntialiasTables build_tables(const CosineSeries& series, int degree, double half_width) {
  if (degree < 0 || half_width <= 0.0 || series.coefficients.empty())
    throw std::invalid_argument("build_tables: invalid degree or half width");
  const int n = degree;
  const int m = series.order();
  const double tw = half_width;
  const auto& h = series.coefficients;

  AntialiasTables t;
  t.degree = n;
  t.half_width = tw;
  t.series = series;
  t.series.half_width = tw;
  t.c.assign(n + 1, std::vector<double>(m + 1, 0.0));
  t.s.assign(n + 1, std::vector<double>(m + 1, 0.0));
  t.u.assign(n + 1, std::vector<double>(n + 2, 0.0));
  t.v.assign(n + 1, std::vector<double>(n + 1, 0.0));

  for (int k = 1; k <= m; ++k) t.s[0][k] = tw / (k * kPi) * h[k];
  t.u[0][1] = h[0];

  for (int r = 0; r <= n; ++r) {
    if (r > 0) {
      for (int k = 1; k <= m; ++k) {
        t.c[r][k] = -(r * tw / (k * kPi)) * t.s[r - 1][k];
        t.s[r][k] = (r * tw / (k * kPi)) * t.c[r - 1][k];
      }
      for (int k = 1; k <= n + 1; ++k)
        t.u[r][k] = (static_cast<double>(r) / k) * t.u[r - 1][k - 1];
      for (int k = 1; k <= n; ++k)
        t.v[r][k] = (static_cast<double>(r) / k) * t.v[r - 1][k - 1];
    }
    // U[r][0]: zero value at t = -t_w. V[r][0]: continuity at t = +t_w.
    double u0 = 0.0;
    for (int k = 1; k <= n + 1; ++k) u0 -= std::pow(-tw, k) * t.u[r][k];
    for (int k = 1; k <= m; ++k) u0 -= ((k & 1) ? -1.0 : 1.0) * t.c[r][k];
    t.u[r][0] = u0;
    double v0 = 0.0;
    for (int k = 0; k <= n + 1; ++k) v0 += std::pow(tw, k) * t.u[r][k];
    for (int k = 1; k <= m; ++k) v0 += ((k & 1) ? -1.0 : 1.0) * t.c[r][k];
    for (int k = 1; k <= n; ++k) v0 -= std::pow(tw, k) * t.v[r][k];
    t.v[r][0] = v0;
  }
  return t;
}

double eval_antialiased_poly(const AntialiasTables& tables,
                             const PolynomialPulse& pulse, double t) {
  if (pulse.degree() > tables.degree)
    throw std::invalid_argument("eval_antialiased_poly: pulse degree exceeds tables degree");
  const double tw = tables.half_width;
  if (t <= -tw || t > 1.0 + tw) return 0.0;

  const int n = tables.degree;
  const int m = tables.series.order();
  const auto& p = pulse.coefficients;

  const bool onset = (t > -tw) && (t <= tw);       // h_tau still in transition
  const bool offset = (t > 1.0 - tw);              // shifted kernel active

  const auto trig_poly = [&](const std::vector<double>& cc, const std::vector<double>& ss,
                             const std::vector<double>& uu, double x) {
    double acc = 0.0;
    for (int k = 1; k <= m; ++k) {
      const double arg = k * kPi * x / tw;
      acc += cc[k] * std::cos(arg) + ss[k] * std::sin(arg);
    }
    return acc + horner(uu, x, n + 2);
  };

  double val = 0.0;
  if (onset) {
    val = trig_poly(combine(p, tables.c), combine(p, tables.s), combine(p, tables.u), t);
  } else {
    val = horner(combine(p, tables.v), t, n + 1);
  }
  if (offset) {
    const auto b = binomial_matrix(n);
    std::vector<double> pb(n + 1, 0.0);
    for (int r = 0; r < static_cast<int>(p.size()); ++r)
      for (int k = 0; k <= r; ++k) pb[k] += p[r] * b[r][k];
    val -= trig_poly(combine(pb, tables.c), combine(pb, tables.s), combine(pb, tables.u),
                     t - 1.0);
  }
  return val / tables.dc_gain();
}

std::shared_ptr<const AntialiasTables> TableCache::get(int degree, double half_width) {
  // Round to 12 significant digits for the key.
  std::int64_t key = 0;
  if (half_width > 0.0) {
    const int exp10 = static_cast<int>(std::floor(std::log10(half_width)));
    const double scale = std::pow(10.0, 11 - exp10);
    key = static_cast<std::int64_t>(std::llround(half_width * scale));
    // fold the decade into the key so 0.123 and 1.23 differ
    key = key * 64 + (exp10 + 32);
  }
  std::scoped_lock lock(mutex_);
  auto it = entries_.find({degree, key});
  if (it != entries_.end()) return it->second;
  auto tab = std::make_shared<AntialiasTables>(build_tables(series_, degree, half_width));
  entries_.emplace(std::make_pair(degree, key), tab);
  return tab;
}

std::size_t TableCache::size() const {
  std::scoped_lock lock(mutex_);
  return entries_.size();
}

}  // namespace afes
