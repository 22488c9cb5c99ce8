#pragma once

// The two symmetries that compete: Moebius-type boosts of the circle
// (conformal maps pulled back through stereographic projection) and the
// symmetric decreasing rearrangement on the uniform grid.

#include "sobocirc/circle.hpp"

namespace sobocirc {

// A boost is determined by a strength alpha in (-1, 1) and two centers:
// theta0 on the source circle, thetabar0 on the target circle.  The inverse
// of (alpha, theta0, thetabar0) is (-alpha, thetabar0, theta0).
struct LorentzParams {
  double alpha = 0.0;
  double theta0 = 0.0;
  double thetabar0 = 0.0;

  // Throws std::invalid_argument when |alpha| > 0.999 (the map degenerates
  // as |alpha| -> 1) or a parameter is non-finite.
  void validate() const;
  LorentzParams inverse() const { return {-alpha, thetabar0, theta0}; }
};

// Conformal factor nu(thetabar) = sqrt(1 - alpha^2) / (1 - alpha cos(thetabar
// - center)), optionally scaled by k.  Positive, with mean value 1 when k = 1.
struct NuProfile {
  double alpha = 0.0;
  double center = 0.0;
  double k = 1.0;
  double operator()(double thetabar) const;
};

// Source angle theta(thetabar) of the boost, in (-pi, pi].
double pullback_angle(double thetabar, const LorentzParams& p);

// Transform a profile in each parameterization: fbar = nu * f(theta),
// vbar = nu^{-1/2} * v(theta), hbar = h(theta) + log nu.  Values off the
// source nodes come from the profile's interpolation mode.
CircleFunction lorentz_v(const CircleFunction& v, const LorentzParams& p);
CircleFunction lorentz_f(const CircleFunction& f, const LorentzParams& p);
CircleFunction lorentz_h(const CircleFunction& h, const LorentzParams& p);

// Symmetric decreasing rearrangement: the sample multiset is preserved, the
// largest value lands at theta = 0 (index n/2), subsequent values alternate
// right/left, and the smallest lands at theta = -pi (index 0).  Ties keep
// their original order.  The result is marked for cubic interpolation.
CircleFunction rearrange(const CircleFunction& u);

}  // namespace sobocirc
