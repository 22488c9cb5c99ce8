#pragma once

// The competing-symmetries iteration: at each step pick the least boost
// strength that minimizes the boosted maximum of v^-2, apply the boost
// centered at theta = 0, and rearrange.  Along the sequence the functional
// is nonincreasing, the minimum of v nondecreasing, the maximum of v^-2
// nonincreasing, and the constraint integral constant.

#include <string>
#include <utility>
#include <vector>

#include "sobocirc/circle.hpp"

namespace sobocirc {

struct SearchConfig {
  double alpha_max = 0.999;
  int coarse_steps = 128;     // coarse grid resolution of the alpha scan
  double value_tol = 1e-6;    // band around the minimum for the leftward sweep
  double alpha_tol = 1e-8;    // resolution of the refinement stages
};

struct StepRecord {
  int step = 0;
  double alpha_n = 0.0;
  double F = 0.0;  // central-scheme value on the post-step iterate
  double min_v = 0.0;
  double max_vinv2 = 0.0;
  double constraint = 0.0;
  bool plateau = false;  // minimum of the boosted max was flat across the scan
};

struct IterationTrace {
  std::vector<StepRecord> steps;  // steps[0] describes the rearranged start
  bool converged = false;
  double tail_flatness = 0.0;  // max - min of v over |theta| >= pi/2, final iterate
  CircleFunction final;        // last iterate, rearranged
};

struct DiagnosticsReport {
  bool ok = true;
  std::vector<std::string> violations;
  double product_lhs = 1.0;  // prod sqrt(1 - alpha_n^2)
  double product_rhs = 0.0;  // final max v^-2 / initial max v^-2
};

// Max over target nodes of the boosted f = v^-2 under (alpha, 0, 0).
// Requires v symmetric decreasing on the grid (throws otherwise).
double boosted_max(const CircleFunction& v, double alpha);

// Least alpha (within value_tol of the minimum) minimizing boosted_max.
// Optional plateau output reports a flat minimum across the coarse scan.
double select_alpha(const CircleFunction& v, const SearchConfig& cfg = {},
                    bool* plateau = nullptr);

// One step: boost by the selected alpha, rearrange, report statistics.
std::pair<CircleFunction, StepRecord> iterate_step(const CircleFunction& v,
                                                   const SearchConfig& cfg = {});

IterationTrace run_iteration(const CircleFunction& v0, int max_steps,
                             double flat_tol, const SearchConfig& cfg = {});

// Max - min of the samples on |theta| >= pi/2.
double tail_flatness(const CircleFunction& v);

// Check the four per-step monotonicities and the product bound
// prod sqrt(1 - alpha_n^2) >= m_final / m_initial on a finished trace.
DiagnosticsReport diagnose_trace(const IterationTrace& trace,
                                 double step_tol = 1e-10, double budget = 1e-6);

}  // namespace sobocirc
