#pragma once

// Closed-form solutions: the stationary family on the circle, and the
// constrained Dirichlet minimizers on [0, pi] over profiles pinched between
// a floor m and a cap M with a prescribed value of int v^-2.  The minimizer
// changes shape across five regimes (A-E) separated by explicit thresholds
// in the constraint value c.

#include <vector>

#include "sobocirc/circle.hpp"

namespace sobocirc {

// Stationary F-form profile sqrt(1 - alpha^2) / (1 + alpha cos(theta -
// theta0)) sampled on n nodes; satisfies int f = 2 pi and kills el_residual.
CircleFunction critical_profile(double alpha, double theta0, int n);

struct ThresholdSet {
  double c_cap = 0.0;       // pi / M^2, smallest admissible c
  double c_ab = 0.0;        // case A / case B boundary
  double c_bc = 0.0;        // case B / case C boundary
  double c_lambda0 = 0.0;   // pi / (m M), where the multiplier changes sign
  double c_de = 0.0;        // case D / case E boundary
  double c_floor = 0.0;     // pi / m^2, largest admissible c
};

ThresholdSet dirichlet_thresholds(double m, double M);

enum class DirichletCase { A, B, C, D, E };

struct DirichletSpec {
  double m = 0.0, M = 0.0, c = 0.0;
  // Throws unless 0 < m < M and c lies strictly inside (pi/M^2, pi/m^2).
  void validate() const;
};

struct DirichletSolution {
  DirichletCase shape = DirichletCase::C;
  double m = 0.0, M = 0.0, c = 0.0;
  // Shape parameters.  Cases A/E: split is the junction angle (alpha or
  // beta).  Cases B/D: the parabola v^2 = mu (theta + Lambda)^2 + ratio with
  // ratio = lambda / mu.
  double split = 0.0;
  double mu = 0.0, Lambda = 0.0, ratio = 0.0;
  double lambda = 0.0;  // multiplier; also dE/dc along the energy curve
  double energy = 0.0;  // int v'^2 over [0, pi]

  double eval(double theta) const;  // v(theta) for theta in [0, pi]
};

DirichletSolution dirichlet_solve(const DirichletSpec& spec);

struct EnergyPoint {
  double c = 0.0, E = 0.0, lambda = 0.0;
  DirichletCase shape = DirichletCase::C;
};

std::vector<EnergyPoint> dirichlet_energy_curve(double m, double M,
                                                const std::vector<double>& c_grid);

}  // namespace sobocirc
