#include <cmath>
#include <limits>
#include <random>

#include <boost/math/special_functions/hypergeometric_1F1.hpp>

#include "doctest.h"
#include "graetz/errors.hpp"
#include "graetz/specfun.hpp"

using namespace graetz;

namespace {

double rel_err(double got, double want) { return std::fabs(got - want) / std::max(1.0, std::fabs(want)); }

// a = 1/2 - lambda_0 / 4 with lambda_0 from the RK4 shooting oracle (step 1e-4).
constexpr double kLambda0 = 2.70436441988568;

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.7, 0) == 1.0);
  CHECK(pochhammer(-12.5, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(-2.0, 4) == 0.0);
  CHECK(pochhammer(0.5, 3) == doctest::Approx(1.875).epsilon(1e-15));
  CHECK(std::isinf(pochhammer(1.0, 400)));
}

TEST_CASE("pochhammer recurrence holds to rounding") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xi(-10.0, 10.0);
  for (int s = 0; s < 50; ++s) {
    const double x = xi(rng);
    for (std::size_t n = 0; n < 30; ++n) {
      const double lhs = pochhammer(x, n + 1);
      const double rhs = pochhammer(x, n) * (x + static_cast<double>(n));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("kummer_m closed-form cases") {
  SUBCASE("zero argument") {
    for (double a : {-3.3, 0.0, 0.5, 7.0}) {
      const auto m = kummer_m(a, 2.0, 0.0);
      CHECK(m.value == 1.0);
      CHECK(m.terms_used == 1);
      CHECK(m.converged);
    }
  }
  SUBCASE("a = 0 terminates at the constant term") {
    const auto m = kummer_m(0.0, 1.0, 7.3);
    CHECK(m.value == 1.0);
    CHECK(m.terms_used == 1);
  }
  SUBCASE("M(1,1,x) = e^x") {
    CHECK(kummer_m(1.0, 1.0, 1.0).value == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    for (double x = -20.0; x <= 20.0; x += 0.25)
      CHECK(std::fabs(kummer_m(1.0, 1.0, x).value - std::exp(x)) <= 1e-12 * std::exp(x));
  }
  SUBCASE("terminating polynomial: M(-2,1,x) = 1 - 2x + x^2/2") {
    for (double x : {-0.5, 0.3, 4.0, 11.0}) {
      const auto m = kummer_m(-2.0, 1.0, x);
      CHECK(m.value == doctest::Approx(1.0 - 2.0 * x + 0.5 * x * x).epsilon(1e-14));
      CHECK(m.terms_used == 3);
    }
  }
  SUBCASE("vanishes at the first Graetz eigenvalue") {
    CHECK(std::fabs(kummer_m(0.5 - kLambda0 / 4.0, 1.0, kLambda0).value) < 1e-6);
  }
}

TEST_CASE("terms_used counts the constant term") {
  const auto m = kummer_m(0.3, 1.5, 2.0);
  CHECK(m.terms_used >= 2);
  CHECK(m.converged);
}

TEST_CASE("kummer_m agrees with boost hypergeometric_1F1") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ua(-5.0, 5.0), ux(-20.0, 20.0);
  for (int s = 0; s < 200; ++s) {
    const double a = ua(rng), x = ux(rng);
    const double b = static_cast<double>(1 + s % 3);
    const double want = boost::math::hypergeometric_1F1(a, b, x);
    CHECK_MESSAGE(rel_err(kummer_m(a, b, x).value, want) <= 1e-10, "a=" << a << " b=" << b << " x=" << x);
  }
}

TEST_CASE("Kummer transformation identity") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> ua(-5.0, 5.0), ux(-20.0, 20.0);
  for (int s = 0; s < 200; ++s) {
    const double a = ua(rng), x = ux(rng);
    const double b = static_cast<double>(1 + s % 3);
    const double m = kummer_m(a, b, x).value;
    const double t = std::exp(x) * kummer_m(b - a, b, -x).value;
    CHECK_MESSAGE(std::fabs(m - t) <= 1e-10 * std::max(1.0, std::fabs(m)), "a=" << a << " b=" << b << " x=" << x);
  }
}

TEST_CASE("kummer_m_dx") {
  CHECK(kummer_m_dx(1.0, 1.0, 0.7) == doctest::Approx(2.013752707470477).epsilon(1e-14));
  CHECK(kummer_m_dx(0.0, 1.0, 5.0) == 0.0);

  auto central = [](double a, double b, double x) {
    const double h = 1e-6;
    return (kummer_m(a, b, x + h).value - kummer_m(a, b, x - h).value) / (2.0 * h);
  };
  CHECK(rel_err(kummer_m_dx(-0.2, 1.0, 1.5), central(-0.2, 1.0, 1.5)) <= 1e-8);

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ua(-5.0, 5.0), ux(-20.0, 20.0);
  for (int s = 0; s < 100; ++s) {
    const double a = ua(rng), x = ux(rng);
    const double b = static_cast<double>(1 + s % 3);
    const double d = kummer_m_dx(a, b, x);
    const double fd = central(a, b, x);
    // central-difference truncation and rounding scale with |M| near x
    const double scale = std::max({1.0, std::fabs(d), std::fabs(kummer_m(a, b, x).value)});
    CHECK_MESSAGE(std::fabs(d - fd) <= 1e-8 * scale, "a=" << a << " b=" << b << " x=" << x);
  }
}

TEST_CASE("kummer_m_batch matches pointwise evaluation bit for bit") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(-25.0, 60.0);
  std::vector<double> xs(37), out(37);
  for (auto& x : xs) x = ux(rng);
  xs[3] = 0.0;
  xs[4] = -1.0;
  kummer_m_batch(-3.2, 1.0, xs, out);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(out[i] == kummer_m(-3.2, 1.0, xs[i]).value);
}

TEST_CASE("near-integer a does not stop the series early") {
  // (a + 0) ~ 1e-17 makes the first term vanish transiently small
  const double a = -1e-17, x = 30.0;
  const double want = boost::math::hypergeometric_1F1(a, 1.0, x);
  CHECK(rel_err(kummer_m(a, 1.0, x).value, want) <= 1e-10);
  const double a2 = -3.0 + 1e-13;
  CHECK(rel_err(kummer_m(a2, 1.0, x).value, boost::math::hypergeometric_1F1(a2, 1.0, x)) <= 1e-10);
}

TEST_CASE("large-argument Graetz regime stays accurate") {
  // lambda ~ 199 needs ~350 terms and cancels ~10 digits in plain doubles
  const double lambda = 198.666803962486;
  const double g = std::exp(-0.5 * lambda) * kummer_m(0.5 - lambda / 4.0, 1.0, lambda).value;
  CHECK(std::fabs(g) < 1e-10);
}

TEST_CASE("kummer_m error paths") {
  CHECK_THROWS_AS(kummer_m(1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(kummer_m(1.0, -2.0, 1.0), DomainError);
  CHECK_THROWS_AS(kummer_m_dx(1.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(kummer_m(1.0, 1.0, 1.0, {0.0, 500}), DomainError);
  CHECK_THROWS_AS(kummer_m(1.0, 1.0, 10.0, {1e-15, 5}), ConvergenceError);
  const auto raw = kummer_m_unchecked(1.0, 1.0, 10.0, {1e-15, 5});
  CHECK_FALSE(raw.converged);
  CHECK(raw.terms_used == 5);
  CHECK_NOTHROW(kummer_m(1.0, -0.5, 1.0));
}
