#include <doctest.h>

#include <cmath>
#include <numbers>

#include "afes/poly_antialias.hpp"
#include "oracles.hpp"

using namespace afes;

namespace {

constexpr double kPi = std::numbers::pi;

// residuals of the transition/tail seam conditions for every row
void check_continuity(const AntialiasTables& t) {
  const int n = t.degree;
  const int m = t.series.order();
  const double tw = t.half_width;
  for (int r = 0; r <= n; ++r) {
    double at_minus = 0.0, at_plus = 0.0, tail = 0.0;
    for (int k = 1; k <= m; ++k) {
      const double sgn = (k & 1) ? -1.0 : 1.0;
      at_minus += t.c[r][k] * sgn;  // cos(-k pi), sin term vanishes
      at_plus += t.c[r][k] * sgn;
    }
    for (int k = 0; k <= n + 1; ++k) {
      at_minus += t.u[r][k] * std::pow(-tw, k);
      at_plus += t.u[r][k] * std::pow(tw, k);
    }
    for (int k = 0; k <= n; ++k) tail += t.v[r][k] * std::pow(tw, k);
    CHECK(std::abs(at_minus) < 1e-10);
    CHECK(std::abs(at_plus - tail) < 1e-10);
  }
}

}  // namespace

TEST_CASE("binomial matrix entries and the shifted-expansion identity") {
  CHECK(binomial_matrix(0) == std::vector<std::vector<double>>{{1.0}});
  const auto b2 = binomial_matrix(2);
  CHECK(b2[2] == std::vector<double>{1.0, 2.0, 1.0});

  // p(tau) = sum_k (p^T B)_k (tau - 1)^k for any tau
  const PolynomialPulse p{{0.7, -1.3, 0.4, 2.1}};
  const auto b = binomial_matrix(3);
  std::vector<double> pb(4, 0.0);
  for (int r = 0; r <= 3; ++r)
    for (int k = 0; k <= r; ++k) pb[k] += p.coefficients[r] * b[r][k];
  for (double tau : {1.3, 2.0, 5.5}) {
    double shifted = 0.0;
    for (int k = 0; k <= 3; ++k) shifted += pb[k] * std::pow(tau - 1.0, k);
    CHECK(std::abs(p.value(tau) - shifted) < 1e-12 * std::abs(p.value(tau)) + 1e-12);
  }
}

TEST_CASE("table row 0 and seam continuity") {
  const auto six = six_term_window();
  const auto t = build_tables(six, 3, 0.1);
  for (int k = 1; k <= 5; ++k)
    CHECK(t.s[0][k] == doctest::Approx(0.1 / (k * kPi) * six.coefficients[k]).epsilon(1e-14));
  CHECK(t.u[0][1] == six.coefficients[0]);
  CHECK(t.v[0][0] == doctest::Approx(t.dc_gain()).epsilon(1e-14));

  for (double tw : {0.02, 0.1, 0.45, 0.6, 1.7})
    for (int deg : {0, 1, 2, 3}) check_continuity(build_tables(six, deg, tw));
}

TEST_CASE("unit-DC kernel tables carry a unit tail row") {
  // Hann-shaped kernel scaled to unit DC at tw = 0.25: 2*tw*h0 = 1.
  const CosineSeries hann_unit{{2.0, 2.0}, 1.0};
  const auto t = build_tables(hann_unit, 1, 0.25);
  CHECK(t.v[0][0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(t.v[1][1] == doctest::Approx(1.0).epsilon(1e-14));
  // ramp pulse filtered by the kernel, settled value at t = 2 tw
  const PolynomialPulse ramp{{0.0, 1.0}};
  const double got = eval_antialiased_poly(t, ramp, 0.5);
  const double ref = testing::conv_poly_oracle(hann_unit, ramp, 0.5, 0.25);
  CHECK(std::abs(got - ref) < 1e-10);
}

TEST_CASE("steady region passes constants exactly; rectangular kernel gives a ramp") {
  const auto six = six_term_window();
  const auto t = build_tables(six, 0, 0.1);
  const PolynomialPulse one{{1.0}};
  for (double x : {0.15, 0.5, 0.89})
    CHECK(eval_antialiased_poly(t, one, x) == doctest::Approx(1.0).epsilon(1e-13));

  const CosineSeries rect{{1.0}, 1.0};
  const auto tr = build_tables(rect, 0, 0.2);
  for (double x : {-0.15, 0.0, 0.1})
    CHECK(eval_antialiased_poly(tr, one, x) ==
          doctest::Approx((x + 0.2) / 0.4).epsilon(1e-12));
}

TEST_CASE("closed form matches the quadrature oracle across widths and degrees") {
  const auto six = six_term_window();
  testing::Rng rng(7);
  for (double tw : {0.02, 0.1, 0.45, 0.6}) {
    for (int deg : {0, 1, 2, 3}) {
      PolynomialPulse p{std::vector<double>(deg + 1)};
      for (auto& c : p.coefficients) c = rng.uniform(-2.0, 2.0);
      double pmax = 0.0;
      for (double c : p.coefficients) pmax += std::abs(c);
      const auto t = build_tables(six, deg, tw);
      for (int i = 0; i < 60; ++i) {
        const double x = rng.uniform(-tw, 1.0 + tw);
        const double got = eval_antialiased_poly(t, p, x);
        const double ref = testing::conv_poly_oracle(six, p, x, tw);
        CHECK(std::abs(got - ref) < 1e-8 * pmax);
      }
    }
  }
}

TEST_CASE("zero outside the support, including the tail cancellation identity") {
  const auto six = six_term_window();
  const auto t = build_tables(six, 3, 0.1);
  const PolynomialPulse p{{1.0, -2.0, 0.5, 0.3}};
  double pmax = 0.0;
  for (double c : p.coefficients) pmax += std::abs(c);

  for (double eps : {1e-6, 0.1, 1.0}) {
    CHECK(eval_antialiased_poly(t, p, 1.1 + eps) == 0.0);
    CHECK(eval_antialiased_poly(t, p, -0.1 - eps + 1e-17) == 0.0);
    // settled onset tail vs shifted settled tail: identical polynomials
    const auto b = binomial_matrix(3);
    std::vector<double> pb(4, 0.0);
    for (int r = 0; r <= 3; ++r)
      for (int k = 0; k <= r; ++k) pb[k] += p.coefficients[r] * b[r][k];
    const double x = 1.1 + eps;
    double lhs = 0.0, rhs = 0.0;
    for (int k = 0; k <= 3; ++k) {
      double vk = 0.0, vbk = 0.0;
      for (int r = 0; r <= 3; ++r) {
        vk += p.coefficients[r] * t.v[r][k];
        vbk += pb[r] * t.v[r][k];
      }
      lhs += vk * std::pow(x, k);
      rhs += vbk * std::pow(x - 1.0, k);
    }
    CHECK(std::abs(lhs - rhs) < 1e-10 * pmax);
  }
}

TEST_CASE("evaluation is linear in the pulse") {
  const auto six = six_term_window();
  const auto t = build_tables(six, 3, 0.3);
  testing::Rng rng(19);
  PolynomialPulse p{{0.3, 1.2, -0.7, 0.1}}, q{{-1.1, 0.4, 0.9, -0.2}};
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
    const double x = rng.uniform(-0.3, 1.3);
    PolynomialPulse mix{{0, 0, 0, 0}};
    for (int k = 0; k < 4; ++k)
      mix.coefficients[k] = a * p.coefficients[k] + b * q.coefficients[k];
    const double lhs = eval_antialiased_poly(t, mix, x);
    const double rhs = a * eval_antialiased_poly(t, p, x) + b * eval_antialiased_poly(t, q, x);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("unit-DC normalization preserves the pulse integral") {
  const auto six = six_term_window();
  const PolynomialPulse p{{0.5, -1.0, 2.0, 0.25}};
  const double pulse_integral = 0.5 - 1.0 / 2.0 + 2.0 / 3.0 + 0.25 / 4.0;
  for (double tw : {0.1, 0.45}) {
    const auto t = build_tables(six, 3, tw);
    const auto f = [&](double x) { return eval_antialiased_poly(t, p, x); };
    const double filtered =
        testing::integrate_piecewise(f, -tw, 1.0 + tw, {tw, 1.0 - tw}, 1e-12);
    CHECK(std::abs(filtered - pulse_integral) < 1e-8);
  }
}

TEST_CASE("degree mismatch is rejected") {
  const auto t = build_tables(six_term_window(), 1, 0.1);
  CHECK_THROWS_AS(eval_antialiased_poly(t, PolynomialPulse{{1, 2, 3}}, 0.5),
                  std::invalid_argument);
}

TEST_CASE("table cache reuses entries keyed by degree and width") {
  TableCache cache(six_term_window());
  const auto a = cache.get(3, 0.123456789012345);
  const auto b = cache.get(3, 0.123456789012399);  // same at 12 significant digits
  const auto c = cache.get(3, 0.13);
  const auto d = cache.get(2, 0.13);
  CHECK(a.get() == b.get());
  CHECK(b.get() != c.get());
  CHECK(c.get() != d.get());
  CHECK(cache.size() == 3);
}
