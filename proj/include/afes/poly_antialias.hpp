#ifndef AFES_POLY_ANTIALIAS_HPP
#define AFES_POLY_ANTIALIAS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "afes/cosine_series.hpp"

namespace afes {

// Polynomial pulse p(tau) = sum_j coefficients[j] tau^j on tau in [0, 1],
// zero outside.
struct PolynomialPulse {
  std::vector<double> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  double value(double tau) const;
};

// Lower-triangular matrix of binomial coefficients, rows 0..n. Row r holds
// the expansion of tau^r about tau = 1: tau^r = sum_k B[r][k] (tau-1)^k.
std::vector<std::vector<double>> binomial_matrix(int n);

// Constant matrices of the closed-form convolution of monomial steps
// tau^r u(tau) with the cosine-series kernel, for one (degree, half-width)
// pair. Row r of C/S/U describes the onset transition
//   sum_k C[r][k] cos(k pi t / t_w) + S[r][k] sin(k pi t / t_w)
//     + sum_k U[r][k] t^k               on -t_w < t <= t_w,
// and row r of V the settled polynomial sum_k V[r][k] t^k for t > t_w.
struct AntialiasTables {
  int degree = 0;             // highest monomial power n
  double half_width = 0.0;    // t_w in pulse-normalized time
  CosineSeries series;        // kernel the tables were built from
  std::vector<std::vector<double>> c, s;  // (n+1) x (m+1), column 0 unused
  std::vector<std::vector<double>> u;     // (n+1) x (n+2)
  std::vector<std::vector<double>> v;     // (n+1) x (n+1)

  double dc_gain() const { return 2.0 * half_width * series.coefficients[0]; }
};

// Builds the tables. Row 0 comes from integrating the kernel once; rows
// 1..n follow from d/dt [h * tau^r u] = r [h * tau^(r-1) u], with the free
// columns U[r][0] and V[r][0] closed by continuity at t = -t_w and +t_w.
AntialiasTables build_tables(const CosineSeries& series, int degree, double half_width);

// Antialiased pulse value at pulse-normalized time t: the convolution of
// p with the kernel, normalized to unit kernel DC gain. Zero for
// t <= -t_w and t > 1 + t_w. Requires pulse.degree() <= tables.degree.
double eval_antialiased_poly(const AntialiasTables& tables,
                             const PolynomialPulse& pulse, double t);

// Shared table store for one kernel; keys round half_width to 12
// significant digits so per-cycle rescaling reuses entries. Lookup/insert
// is mutex-guarded.
class TableCache {
 public:
  explicit TableCache(CosineSeries series) : series_(std::move(series)) {}

  std::shared_ptr<const AntialiasTables> get(int degree, double half_width);
  const CosineSeries& series() const { return series_; }
  std::size_t size() const;

 private:
  CosineSeries series_;
  mutable std::mutex mutex_;
  std::map<std::pair<int, std::int64_t>, std::shared_ptr<const AntialiasTables>> entries_;
};

}  // namespace afes

#endif
