#pragma once

// Independent verification paths: a seeded corpus of smooth positive test
// profiles, a projected gradient descent that approaches the sharp value
// without using boosts or rearrangement, and checks of the equivalent
// line, interval, and degenerate (vanishing-minimum) forms of the bound.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "sobocirc/circle.hpp"
#include "sobocirc/functionals.hpp"

namespace sobocirc {

struct CorpusSpec {
  std::uint64_t seed = 1;
  int count = 10;
  int n = 512;
  int max_harmonic = 3;
  double amplitude_cap = 0.3;
  double positivity_floor = 0.2;
};

// Deterministic: the same spec always yields the same members.  Each member
// is 1 + a random low-harmonic trigonometric polynomial, clamped at the
// floor, smoothed by one spectral low-pass, and kept >= positivity_floor.
std::vector<CircleFunction> random_corpus(const CorpusSpec& spec);

struct DescentResult {
  CircleFunction v;
  double F = 0.0;
  int steps_taken = 0;
  double final_rate = 0.0;
  bool diverged = false;
};

// Projected gradient descent for F under int v^-2 = 2 pi: a semi-implicit
// spectral step on the gradient -8 v'' - 2 v, followed by renormalization.
// The rate is halved whenever a step fails to decrease F.
DescentResult descend_oracle(const CircleFunction& v0, int max_steps = 5000,
                             double rate = 0.05);

enum class StereoVariant { A, B };

struct StereoReport {
  double circle_side = 0.0;  // functional value computed on the circle
  double line_side = 0.0;    // transplanted value computed on the line
  double bound_side = 0.0;   // sharp lower bound of the line form
  double residual = 0.0;     // |line_side - expected multiple of circle_side|
};

// Variant A transplants v through x = cot(theta/2): the line-side Dirichlet
// and mass integrals equal half their circle counterparts.  Variant B uses
// u = sqrt((1+x^2)/2) v with a boundary window term; it requires analytic
// tails (spectral derivative vanishing at theta = 0) and throws otherwise.
StereoReport stereographic_check(const CircleFunction& v, StereoVariant variant);

// Variant B for profiles given analytically on (0, 2 pi) (they need not be
// periodic).  window sets the half-width N of the x-window [-N, N].
struct LineProfile {
  std::function<double(double)> v;   // v(theta), theta in (0, 2 pi)
  std::function<double(double)> dv;  // dv/dtheta
};
StereoReport stereographic_check_b(const LineProfile& profile, double window = 1e6);

// The inequality on an interval [0, l] with Dirichlet-free endpoints:
// int [4 v'^2 - v^2 (pi/l)^2 scaled form] via even extension to the circle.
// Returns the usual report with bound -l^2-scaled constant.
FunctionalReport interval_check(const std::vector<double>& samples, double l);

// Degenerate form: for w >= 0 touching zero, 4 int w'^2 >= int w^2.
// Returns (lhs, rhs).  The Dirichlet side uses the one-sided difference sum
// so that kinks at the zero set are captured.
std::pair<double, double> vanishing_check(const CircleFunction& w);

}  // namespace sobocirc
