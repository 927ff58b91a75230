#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "afes/exp_antialias.hpp"
#include "afes/poly_antialias.hpp"
#include "oracles.hpp"

using namespace afes;
using cd = std::complex<double>;

TEST_CASE("zero outside the support") {
  const auto six = six_term_window();
  for (double tw : {0.05, 0.3}) {
    for (const cd beta : {cd(-2.0, 0.0), cd(3.0, 40.0)}) {
      CHECK(std::abs(eval_antialiased_exp(six, beta, -tw, tw)) < 1e-12);
      CHECK(std::abs(eval_antialiased_exp(six, beta, -tw - 0.5, tw)) < 1e-12);
      CHECK(std::abs(eval_antialiased_exp(six, beta, 1.0 + tw, tw)) < 1e-12);
      CHECK(std::abs(eval_antialiased_exp(six, beta, 1.0 + tw + 2.0, tw)) < 1e-12);
    }
  }
}

TEST_CASE("beta = 0 coincides with the constant polynomial pulse") {
  const auto six = six_term_window();
  const double tw = 0.17;
  const auto tables = build_tables(six, 0, tw);
  const PolynomialPulse one{{1.0}};
  testing::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const double t = rng.uniform(-tw - 0.1, 1.0 + tw + 0.1);
    const cd got = eval_antialiased_exp(six, cd(0.0, 0.0), t, tw);
    CHECK(std::abs(got - cd(eval_antialiased_poly(tables, one, t), 0.0)) < 1e-10);
  }
}

TEST_CASE("single harmonic against the quadrature oracle") {
  // k = 1 term alone: series with only h0 (for normalization) and h1
  const CosineSeries h01{{0.5, 0.5}, 1.0};
  const double tw = 0.1;
  const cd beta(-3.0, 4.0);
  const cd got = eval_antialiased_exp(h01, beta, 0.05, tw);
  const cd ref = testing::conv_exp_oracle(h01, beta, 0.05, tw);
  CHECK(std::abs(got - ref) < 1e-10);
}

TEST_CASE("conjugating the exponent conjugates the result") {
  const auto six = six_term_window();
  testing::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const cd beta(rng.uniform(-10.0, 5.0), rng.uniform(-30.0, 30.0));
    const double tw = rng.uniform(0.03, 0.45);
    const double t = rng.uniform(-tw, 1.0 + tw);
    const cd a = eval_antialiased_exp(six, std::conj(beta), t, tw);
    const cd b = std::conj(eval_antialiased_exp(six, beta, t, tw));
    CHECK(std::abs(a - b) < 1e-12 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("closed form matches quadrature for real and complex exponents") {
  const auto six = six_term_window();
  testing::Rng rng(31);
  for (const cd beta : {cd(-2.0, 0.0), cd(-20.0, 0.0), cd(3.0, 40.0), cd(0.07, 0.0)}) {
    const double scale = std::max(1.0, std::exp(beta.real()));
    for (double tw : {0.05, 0.3}) {
      for (int i = 0; i < 250; ++i) {
        const double t = rng.uniform(-tw, 1.0 + tw);
        const cd got = eval_antialiased_exp(six, beta, t, tw);
        const cd ref = testing::conv_exp_oracle(six, beta, t, tw);
        CHECK(std::abs(got - ref) < 1e-8 * scale);
      }
    }
  }
}

TEST_CASE("overlapping transition intervals: widths above one half and above one") {
  const auto six = six_term_window();
  testing::Rng rng(37);
  for (double tw : {0.7, 1.6}) {
    for (const cd beta : {cd(-4.0, 0.0), cd(1.0, 9.0)}) {
      const double scale = std::max(1.0, std::exp(beta.real()));
      for (int i = 0; i < 40; ++i) {
        const double t = rng.uniform(-tw, 1.0 + tw);
        const cd got = eval_antialiased_exp(six, beta, t, tw);
        const cd ref = testing::conv_exp_oracle(six, beta, t, tw);
        CHECK(std::abs(got - ref) < 1e-8 * scale);
      }
    }
  }
}

TEST_CASE("small-exponent continuity of the k = 0 term") {
  const auto six = six_term_window();
  const double tw = 0.2;
  testing::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const double t = rng.uniform(-tw, 1.0 + tw);
    const cd a = eval_antialiased_exp(six, cd(1e-9, 0.0), t, tw);
    const cd b = eval_antialiased_exp(six, cd(0.0, 0.0), t, tw);
    CHECK(std::abs(a - b) < 1e-7);
  }
}

TEST_CASE("resonant harmonic is rejected") {
  const double tw = 0.5;
  const double a = std::numbers::pi / tw;  // k = 1 resonance at beta = i a
  CHECK_THROWS_AS(element_function(1, cd(0.0, a), 0.3, tw), std::domain_error);
  CHECK_THROWS_AS(element_function(2, cd(0.0, 2.0 * a), 0.3, tw), std::domain_error);
  CHECK_NOTHROW(element_function(1, cd(0.1, a), 0.3, tw));
}
