#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sobocirc/closed_forms.hpp"
#include "sobocirc/functionals.hpp"
#include "sobocirc/oracle.hpp"

using namespace sobocirc;

TEST_CASE("corpus is deterministic, positive, and respects its floor") {
  CorpusSpec spec;
  spec.seed = 42;
  spec.count = 3;
  auto a = random_corpus(spec);
  auto b = random_corpus(spec);
  REQUIRE(a.size() == 3);
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].values == b[i].values);
  for (const auto& m : a) {
    CHECK_NOTHROW(m.validate());
    for (double y : m.values) CHECK(y >= spec.positivity_floor - 1e-12);
    CHECK(inequality_report(m, DiffScheme::Spectral).slack >= -1e-6);
  }
  spec.count = 0;
  CHECK(random_corpus(spec).empty());
}

TEST_CASE("descent reaches the sharp value from a perturbed start") {
  auto v0 = normalize_constraint(
      sample_circle(512, [](double t) { return 1 + 0.1 * std::cos(t); }, Role::V));
  auto r = descend_oracle(v0);
  CHECK_FALSE(r.diverged);
  CHECK(r.F == doctest::Approx(-kTwoPi).epsilon(1e-4 / kTwoPi));
  CHECK(integrate(reciprocal_square(r.v)) == doctest::Approx(kTwoPi).epsilon(1e-12));
}

TEST_CASE("descent stays on the stationary orbit") {
  auto f = critical_profile(0.5, 0.0, 512);
  auto v = f;
  v.role = Role::V;
  for (double& y : v.values) y = 1.0 / std::sqrt(y);
  auto r = descend_oracle(v, 500);
  CHECK(std::abs(r.F + kTwoPi) < 1e-6);
}

TEST_CASE("stereographic transplant, half-scale variant") {
  auto one = sample_circle(512, [](double) { return 1.0; }, Role::V);
  auto rep = stereographic_check(one, StereoVariant::A);
  CHECK(rep.line_side == doctest::Approx(-kPi).epsilon(1e-9));
  CHECK(rep.bound_side == doctest::Approx(-kPi).epsilon(1e-9));
  CHECK(rep.residual < 1e-9);

  auto v = sample_circle(2048, [](double t) { return 1 + 0.1 * std::cos(t); }, Role::V);
  auto r2 = stereographic_check(v, StereoVariant::A);
  CHECK(r2.residual < 1e-6);
  // Line-side slack is half the circle-side slack.
  const auto circle = inequality_report(v, DiffScheme::Spectral);
  CHECK(r2.line_side - r2.bound_side ==
        doctest::Approx(circle.slack / 2).epsilon(8e-3));
}

TEST_CASE("stereographic transplant, weighted variant on analytic profiles") {
  LineProfile constant{[](double) { return 1.0; }, [](double) { return 0.0; }};
  auto rep = stereographic_check_b(constant);
  CHECK(std::abs(rep.line_side + kPi / 2) < 5e-6);
  CHECK(std::abs(rep.bound_side + kPi / 2) < 5e-6);
  CHECK(rep.residual < 1e-5);

  // Equality family: the weighted form on (0, 2 pi) is the interval form on
  // [0, pi] in the halved angle, so the extremals carry cos(theta / 2).
  const double a = 0.5;
  const double r = std::sqrt(1 - a * a);
  LineProfile family{
      [a, r](double th) { return std::sqrt((1 + a * std::cos(th / 2)) / r); },
      [a, r](double th) {
        return -a * std::sin(th / 2) /
               (4 * std::sqrt(r * (1 + a * std::cos(th / 2))));
      }};
  auto r2 = stereographic_check_b(family);
  CHECK(r2.residual < 1e-5);
  CHECK(std::abs(r2.line_side - r2.bound_side) < 1e-4);
}

TEST_CASE("grid profiles without analytic tails are rejected by the weighted variant") {
  auto v = sample_circle(256, [](double t) { return 1 + 0.2 * std::sin(t); }, Role::V);
  CHECK_THROWS_AS(stereographic_check(v, StereoVariant::B), std::invalid_argument);
}

TEST_CASE("interval form: equality cases and a strict case") {
  for (double l : {1.0, kPi, kTwoPi}) {
    std::vector<double> ones(129, 1.0);
    auto rep = interval_check(ones, l);
    CHECK(std::abs(rep.slack) < 1e-9);
  }
  // Equality profile on [0, l]: v^-2 proportional to the conformal factor.
  const double l = 2.0, a = 0.5;
  std::vector<double> samples;
  const int K = 256;
  for (int j = 0; j <= K; ++j) {
    const double th = l * j / K;
    samples.push_back(1.0 / std::sqrt(std::sqrt(1 - a * a) /
                                      (1 + a * std::cos(kPi * th / l))));
  }
  auto rep = interval_check(samples, l);
  CHECK(std::abs(rep.slack) < 1e-6);

  std::vector<double> ramp;
  for (int j = 0; j <= 128; ++j) ramp.push_back(1.0 + static_cast<double>(j) / 128);
  CHECK(interval_check(ramp, 1.0).slack > 1e-3);

  CHECK_THROWS_AS(interval_check(ramp, -1.0), std::invalid_argument);
}

TEST_CASE("degenerate form at a zero of the profile") {
  auto w1 = sample_circle(2048, [](double t) { return std::abs(std::sin(t / 2)); });
  auto [lhs1, rhs1] = vanishing_check(w1);
  CHECK(lhs1 == doctest::Approx(kPi).epsilon(1e-3));
  CHECK(rhs1 == doctest::Approx(kPi).epsilon(1e-3));
  CHECK(lhs1 >= rhs1 - 1e-6);

  auto w2 = sample_circle(2048, [](double t) {
    const double s = std::sin(t / 2);
    return s * s;
  });
  auto [lhs2, rhs2] = vanishing_check(w2);
  CHECK(lhs2 == doctest::Approx(kPi).epsilon(1e-3));
  CHECK(rhs2 == doctest::Approx(3 * kPi / 4).epsilon(1e-3));

  auto w0 = sample_circle(64, [](double) { return 0.0; });
  auto [lhs0, rhs0] = vanishing_check(w0);
  CHECK(lhs0 == 0.0);
  CHECK(rhs0 == 0.0);

  // Profiles bounded away from zero belong to the main inequality instead.
  auto pos = sample_circle(64, [](double) { return 1.0; });
  CHECK_THROWS_AS(vanishing_check(pos), std::invalid_argument);
}

TEST_CASE("constraint of the truncated vanishing family grows as the cutoff drops") {
  double prev = 0;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    auto v = sample_circle(4096, [eps](double t) {
      return std::max(std::abs(std::sin(t / 2)), eps);
    }, Role::V);
    const double c = integrate(reciprocal_square(v));
    CHECK(c > prev);
    prev = c;
  }
}
