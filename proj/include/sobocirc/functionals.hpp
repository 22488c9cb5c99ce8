#pragma once

// The circle functional F[v] = int [4 v'^2 - v^2] dtheta, its bound
// -4 pi^2 / int v^-2 dtheta, the same functional in the f = v^-2 and
// h = log f parameterizations, the Euler-Lagrange residual, and the
// second-variation spectrum at the constant profile.

#include "sobocirc/circle.hpp"

namespace sobocirc {

struct FunctionalReport {
  double F = 0.0;           // int [4 v'^2 - v^2]
  double constraint = 0.0;  // int v^-2
  double Q = 0.0;           // F * constraint (scale invariant)
  double bound = 0.0;       // -4 pi^2 / constraint
  double slack = 0.0;       // F - bound, nonnegative up to discretization
};

struct SpectrumEntry {
  int m = 0;
  double kappa = 0.0;  // Rayleigh quotient of the (m+1)-harmonic pair
  int dimension = 0;   // multiplicity found at this level (2 when sin/cos agree)
};

struct SpectrumReport {
  std::vector<SpectrumEntry> entries;
};

double functional_v(const CircleFunction& v, DiffScheme scheme);
double functional_f(const CircleFunction& f, DiffScheme scheme);
double functional_h(const CircleFunction& h, DiffScheme scheme);

// int v^-2 dtheta for a positive V-form profile.
double constraint_integral(const CircleFunction& v);

FunctionalReport inequality_report(const CircleFunction& v, DiffScheme scheme);

// Pointwise residual of f^-2 + 3 f^-4 f'^2 - 2 f^-3 f'' - 1 for an F-form
// profile normalized to int f = 2 pi (throws if the mass is off by > 1e-8).
// Vanishes identically on the stationary family.
CircleFunction el_residual(const CircleFunction& f, DiffScheme scheme);

// Apply the second-variation operator at the constant profile,
// L u = -8 u'' - 8 u, restricted to zero-mean perturbations.
CircleFunction apply_second_variation(const CircleFunction& u, DiffScheme scheme);

// Rayleigh quotient int u L u / int u^2 under the given scheme.
double second_variation_rayleigh(const CircleFunction& u, DiffScheme scheme);

// Levels m = 1..max_m via Rayleigh quotients of the sampled harmonics
// sin((m+1) theta), cos((m+1) theta) under the spectral scheme.
SpectrumReport second_variation_spectrum(int max_m, int n = 256);

// Same levels through a dense matrix representation of L assembled column by
// column under the requested scheme: a cross-check on the basis path.
SpectrumReport second_variation_spectrum_dense(int max_m, int n, DiffScheme scheme);

}  // namespace sobocirc
