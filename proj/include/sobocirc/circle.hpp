#pragma once

// Uniform periodic grids on the circle [-pi, pi), trigonometric and periodic
// cubic interpolation, quadrature, and differentiation.  Everything downstream
// (functionals, symmetries, iteration) is built on CircleFunction.

#include <functional>
#include <vector>

namespace sobocirc {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Which pointwise form the samples represent.  V is the primal profile
// (positive), F = v^-2 (positive), H = log f (any sign), Generic is raw data
// such as derivatives or residuals.
enum class Role { Generic, V, H, F };

// How off-node values are reconstructed.  Trigonometric for smooth data;
// cubic for merely continuous data (e.g. after rearrangement) where a global
// trigonometric fit would ring.
enum class Interp { Trigonometric, Cubic };

enum class DiffScheme { Spectral, Central };

// Wrap an angle into (-pi, pi].
double wrap_angle(double theta);

struct CircleFunction {
  std::vector<double> values;
  Role role = Role::Generic;
  Interp interp = Interp::Trigonometric;

  int n() const { return static_cast<int>(values.size()); }
  double node(int j) const { return -kPi + kTwoPi * j / n(); }

  // Throws std::invalid_argument on bad size (odd or < 8), non-finite
  // samples, or non-positive samples in the V/F roles.
  void validate() const;
};

CircleFunction sample_circle(int n, const std::function<double(double)>& fn,
                             Role role = Role::Generic,
                             Interp interp = Interp::Trigonometric);

// Periodic trapezoid rule, (2*pi/n) * sum.
double integrate(const CircleFunction& u);

// Pointwise reciprocal square, u -> u^-2.  Requires positive samples.
CircleFunction reciprocal_square(const CircleFunction& u);

CircleFunction differentiate(const CircleFunction& u, DiffScheme scheme);
CircleFunction differentiate_twice(const CircleFunction& u, DiffScheme scheme);

// Evaluate at an arbitrary angle using the function's interpolation mode.
// Builds a fresh interpolant; for batch evaluation use the classes below.
double interp_eval(const CircleFunction& u, double theta);

// Scale a positive profile v so that the integral of v^-2 equals 2*pi.
CircleFunction normalize_constraint(const CircleFunction& v);

// Real trigonometric interpolant of uniform samples on [-pi, pi): the unique
// band-limited series a_0/2 + sum (a_k cos + b_k sin) + (a_{n/2}/2) cos(n/2 t)
// through the data.  Coefficients via plain DFT sums; evaluation via the
// complex exponential recurrence, no per-term trig calls.
class TrigSeries {
 public:
  explicit TrigSeries(const std::vector<double>& samples);
  double eval(double theta) const;
  double eval_derivative(double theta) const;
  double eval_second_derivative(double theta) const;
  int modes() const { return static_cast<int>(cos_coef_.size()) - 1; }

 private:
  std::vector<double> cos_coef_, sin_coef_;  // index k = 0 .. n/2
};

// Periodic natural cubic spline on the uniform grid (cyclic tridiagonal
// solve via Sherman-Morrison).
class PeriodicCubic {
 public:
  explicit PeriodicCubic(const std::vector<double>& samples);
  double eval(double theta) const;

 private:
  std::vector<double> y_, m_;  // samples and second derivatives at nodes
  double h_ = 0.0;
};

}  // namespace sobocirc
