#include "sobocirc/iteration.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "sobocirc/functionals.hpp"
#include "sobocirc/symmetries.hpp"

namespace sobocirc {

namespace {

void require_symmetric_decreasing(const CircleFunction& v) {
  const int n = v.n();
  double scale = 0.0;
  for (double y : v.values) scale = std::max(scale, std::abs(y));
  const double tol = 1e-12 * scale;
  // Nonincreasing from theta = 0 out to theta = pi (wrapping to index 0),
  // nondecreasing from theta = -pi up to theta = 0.
  for (int j = n / 2; j < n - 1; ++j)
    if (v.values[j + 1] > v.values[j] + tol)
      throw std::invalid_argument("boosted_max: profile is not symmetric decreasing");
  if (v.values[0] > v.values[n - 1] + tol)
    throw std::invalid_argument("boosted_max: profile is not symmetric decreasing");
  for (int j = 0; j < n / 2; ++j)
    if (v.values[j] > v.values[j + 1] + tol)
      throw std::invalid_argument("boosted_max: profile is not symmetric decreasing");
}

// Evaluates max_j of the boosted f = v^-2 for many alphas with a single
// interpolant of f.
class BoostScan {
 public:
  explicit BoostScan(const CircleFunction& v)
      : n_(v.n()), f_(reciprocal_square(v)) {
    if (f_.interp == Interp::Trigonometric)
      trig_ = std::make_unique<TrigSeries>(f_.values);
    else
      cubic_ = std::make_unique<PeriodicCubic>(f_.values);
  }

  double max_boosted(double alpha) const {
    if (alpha == 0.0) {
      double m = 0.0;
      for (double y : f_.values) m = std::max(m, y);
      return m;
    }
    const LorentzParams p{alpha, 0.0, 0.0};
    const double root = std::sqrt(1.0 - alpha * alpha);
    double m = 0.0;
    for (int j = 0; j < n_; ++j) {
      const double tb = -kPi + kTwoPi * j / n_;
      const double nu = root / (1.0 - alpha * std::cos(tb));
      const double theta = pullback_angle(tb, p);
      const double y = trig_ ? trig_->eval(theta) : cubic_->eval(theta);
      m = std::max(m, nu * y);
    }
    return m;
  }

 private:
  int n_;
  CircleFunction f_;
  std::unique_ptr<TrigSeries> trig_;
  std::unique_ptr<PeriodicCubic> cubic_;
};

}  // namespace

double boosted_max(const CircleFunction& v, double alpha) {
  v.validate();
  if (v.role != Role::V)
    throw std::invalid_argument("boosted_max: expects a V-form profile");
  LorentzParams{alpha, 0.0, 0.0}.validate();
  require_symmetric_decreasing(v);
  return BoostScan(v).max_boosted(alpha);
}

double select_alpha(const CircleFunction& v, const SearchConfig& cfg, bool* plateau) {
  v.validate();
  if (v.role != Role::V)
    throw std::invalid_argument("select_alpha: expects a V-form profile");
  require_symmetric_decreasing(v);
  const BoostScan scan(v);

  // Coarse grid 0, 1/N, ..., capped at alpha_max.
  const int N = cfg.coarse_steps;
  std::vector<double> grid, vals;
  for (int i = 0;; ++i) {
    double a = static_cast<double>(i) / N;
    if (a > cfg.alpha_max) a = cfg.alpha_max;
    grid.push_back(a);
    vals.push_back(scan.max_boosted(a));
    if (a == cfg.alpha_max) break;
  }
  int best = 0;
  for (size_t i = 1; i < grid.size(); ++i)
    if (vals[i] < vals[best]) best = static_cast<int>(i);

  // Golden-section refinement around the best coarse cell.
  double lo = grid[std::max(best - 1, 0)];
  double hi = grid[std::min<size_t>(best + 1, grid.size() - 1)];
  double fstar = vals[best];
  double astar = grid[best];
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
  double fa = scan.max_boosted(a), fb = scan.max_boosted(b);
  while (hi - lo > cfg.alpha_tol) {
    if (fa < fb) {
      hi = b; b = a; fb = fa;
      a = hi - gr * (hi - lo);
      fa = scan.max_boosted(a);
    } else {
      lo = a; a = b; fa = fb;
      b = lo + gr * (hi - lo);
      fb = scan.max_boosted(b);
    }
  }
  if (fa < fstar) { fstar = fa; astar = a; }
  if (fb < fstar) { fstar = fb; astar = b; }

  if (plateau) {
    int within = 0;
    for (double y : vals)
      if (y <= fstar + cfg.value_tol) ++within;
    *plateau = within > 2;
  }

  // Leftward sweep: least alpha whose value lies within value_tol of the
  // minimum.  First admissible coarse point, then bisect the crossing.
  const double band = fstar + cfg.value_tol;
  size_t first = 0;
  while (first < grid.size() && vals[first] > band) ++first;
  if (first == 0) return 0.0;
  if (first == grid.size()) return astar;  // refined min undercuts every coarse value
  if (grid[first] >= astar) return astar;  // nothing admissible left of the min
  double left = grid[first - 1], right = grid[first];
  while (right - left > cfg.alpha_tol) {
    const double mid = 0.5 * (left + right);
    if (scan.max_boosted(mid) <= band)
      right = mid;
    else
      left = mid;
  }
  return right;
}

double tail_flatness(const CircleFunction& v) {
  v.validate();
  const int n = v.n();
  double lo = v.values[0], hi = v.values[0];
  for (int j = 0; j < n; ++j) {
    if (std::abs(v.node(j)) < kPi / 2) continue;
    lo = std::min(lo, v.values[j]);
    hi = std::max(hi, v.values[j]);
  }
  return hi - lo;
}

namespace {

StepRecord make_record(int step, double alpha, bool plateau, const CircleFunction& v) {
  StepRecord r;
  r.step = step;
  r.alpha_n = alpha;
  r.plateau = plateau;
  r.F = functional_v(v, DiffScheme::Central);
  r.min_v = *std::min_element(v.values.begin(), v.values.end());
  const CircleFunction f = reciprocal_square(v);
  r.max_vinv2 = *std::max_element(f.values.begin(), f.values.end());
  r.constraint = constraint_integral(v);
  return r;
}

}  // namespace

std::pair<CircleFunction, StepRecord> iterate_step(const CircleFunction& v,
                                                   const SearchConfig& cfg) {
  bool plateau = false;
  const double alpha = select_alpha(v, cfg, &plateau);
  CircleFunction next = (alpha == 0.0) ? v : lorentz_v(v, LorentzParams{alpha, 0.0, 0.0});
  if (alpha != 0.0) {
    // The boost preserves the constraint exactly in the continuum; the
    // interpolated transform does not, so project back onto the constraint
    // level of the input.  Rearrangement then preserves it verbatim.
    const double s = std::sqrt(constraint_integral(next) / constraint_integral(v));
    for (double& y : next.values) y *= s;
  }
  next = rearrange(next);
  return {next, make_record(0, alpha, plateau, next)};
}

IterationTrace run_iteration(const CircleFunction& v0, int max_steps,
                             double flat_tol, const SearchConfig& cfg) {
  v0.validate();
  if (v0.role != Role::V)
    throw std::invalid_argument("run_iteration: expects a V-form profile");
  IterationTrace trace;
  CircleFunction v = rearrange(v0);
  trace.steps.push_back(make_record(0, 0.0, false, v));
  for (int s = 1; s <= max_steps; ++s) {
    if (tail_flatness(v) < flat_tol) {
      trace.converged = true;
      break;
    }
    auto [next, rec] = iterate_step(v, cfg);
    rec.step = s;
    trace.steps.push_back(rec);
    const bool stalled = rec.alpha_n == 0.0;
    v = std::move(next);
    if (stalled) break;  // pure rearrangement is idempotent: a fixed point
  }
  trace.tail_flatness = tail_flatness(v);
  if (trace.tail_flatness < flat_tol) trace.converged = true;
  trace.final = std::move(v);
  return trace;
}

DiagnosticsReport diagnose_trace(const IterationTrace& trace, double step_tol,
                                 double budget) {
  DiagnosticsReport rep;
  const auto& s = trace.steps;
  if (s.empty()) {
    rep.ok = false;
    rep.violations.push_back("empty trace");
    return rep;
  }
  const double tol = step_tol + budget;
  for (size_t i = 1; i < s.size(); ++i) {
    const auto& a = s[i - 1];
    const auto& b = s[i];
    const double scale = std::max(1.0, std::abs(a.F));
    if (b.F > a.F + tol * scale)
      rep.violations.push_back("F increased at step " + std::to_string(b.step));
    if (b.min_v < a.min_v - tol)
      rep.violations.push_back("min v decreased at step " + std::to_string(b.step));
    if (b.max_vinv2 > a.max_vinv2 + tol)
      rep.violations.push_back("max v^-2 increased at step " + std::to_string(b.step));
    if (std::abs(b.constraint - a.constraint) > 1e-8 * std::max(1.0, a.constraint))
      rep.violations.push_back("constraint drifted at step " + std::to_string(b.step));
    rep.product_lhs *= std::sqrt(1.0 - b.alpha_n * b.alpha_n);
  }
  rep.product_rhs = s.back().max_vinv2 / s.front().max_vinv2;
  if (rep.product_lhs < rep.product_rhs - budget)
    rep.violations.push_back("product bound violated");
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace sobocirc
