#include "sobocirc/oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace sobocirc {

namespace {

// Plain DFT of real samples into cosine/sine coefficients a_k, b_k for
// k = 0..n/2.  Kept local so the descent path does not share the series
// machinery used by the boost/rearrangement pipeline.
void trig_tables(int n, std::vector<double>& tc, std::vector<double>& ts) {
  tc.resize(n);
  ts.resize(n);
  for (int r = 0; r < n; ++r) {
    tc[r] = std::cos(kTwoPi * r / n);
    ts[r] = std::sin(kTwoPi * r / n);
  }
}

void analyze(const std::vector<double>& y, std::vector<double>& a,
             std::vector<double>& b) {
  const int n = static_cast<int>(y.size());
  const int half = n / 2;
  std::vector<double> tc, ts;
  trig_tables(n, tc, ts);
  a.assign(half + 1, 0.0);
  b.assign(half + 1, 0.0);
  // cos(k theta_j) = (-1)^k cos(2 pi (k j mod n) / n) on the native grid.
  for (int k = 0; k <= half; ++k) {
    double ca = 0.0, sa = 0.0;
    int r = 0;
    for (int j = 0; j < n; ++j) {
      ca += y[j] * tc[r];
      sa += y[j] * ts[r];
      r += k;
      if (r >= n) r -= n;
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    a[k] = sign * ca * 2.0 / n;
    b[k] = sign * sa * 2.0 / n;
  }
}

void synthesize(const std::vector<double>& a, const std::vector<double>& b,
                std::vector<double>& y) {
  const int half = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(y.size());
  std::vector<double> tc, ts;
  trig_tables(n, tc, ts);
  for (int j = 0; j < n; ++j) y[j] = 0.5 * a[0];
  for (int k = 1; k <= half; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double scale = (k == half) ? 0.5 : 1.0;
    const double wc = sign * scale * a[k];
    const double ws = sign * scale * b[k];
    int r = 0;
    for (int j = 0; j < n; ++j) {
      y[j] += wc * tc[r] + ws * ts[r];
      r += k;
      if (r >= n) r -= n;
    }
  }
}

}  // namespace

std::vector<CircleFunction> random_corpus(const CorpusSpec& spec) {
  if (spec.count < 0 || spec.n < 8 || spec.n % 2 != 0 || spec.max_harmonic < 1 ||
      spec.positivity_floor <= 0.0)
    throw std::invalid_argument("random_corpus: bad spec");
  std::vector<CircleFunction> out;
  out.reserve(spec.count);
  for (int i = 0; i < spec.count; ++i) {
    std::mt19937_64 rng(spec.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> amp_c(spec.max_harmonic + 1, 0.0);
    std::vector<double> amp_s(spec.max_harmonic + 1, 0.0);
    for (int k = 1; k <= spec.max_harmonic; ++k) {
      amp_c[k] = unif(rng) * spec.amplitude_cap / k;
      amp_s[k] = unif(rng) * spec.amplitude_cap / k;
    }
    CircleFunction v;
    v.role = Role::V;
    v.interp = Interp::Trigonometric;
    v.values.resize(spec.n);
    for (int j = 0; j < spec.n; ++j) {
      const double t = -kPi + kTwoPi * j / spec.n;
      double y = 1.0;
      for (int k = 1; k <= spec.max_harmonic; ++k)
        y += amp_c[k] * std::cos(k * t) + amp_s[k] * std::sin(k * t);
      v.values[j] = std::max(y, spec.positivity_floor);
    }
    // One spectral low-pass to round off any corners the clamp introduced.
    std::vector<double> a, b;
    analyze(v.values, a, b);
    const int cutoff = 2 * spec.max_harmonic;
    for (int k = cutoff + 1; k < static_cast<int>(a.size()); ++k) a[k] = b[k] = 0.0;
    synthesize(a, b, v.values);
    double lo = v.values[0];
    for (double y : v.values) lo = std::min(lo, y);
    if (lo < spec.positivity_floor)
      for (double& y : v.values) y += spec.positivity_floor - lo;
    v.validate();
    out.push_back(std::move(v));
  }
  return out;
}

DescentResult descend_oracle(const CircleFunction& v0, int max_steps, double rate) {
  v0.validate();
  if (v0.role != Role::V)
    throw std::invalid_argument("descend_oracle: expects a V-form profile");
  if (!(rate > 0.0 && rate < 0.4))
    throw std::invalid_argument("descend_oracle: rate must lie in (0, 0.4)");

  DescentResult res;
  res.v = normalize_constraint(v0);
  res.F = functional_v(res.v, DiffScheme::Spectral);
  const double f_initial = res.F;
  const int n = res.v.n();
  const int half = n / 2;
  std::vector<double> a, b, trial(n);
  int calm = 0;

  for (int step = 0; step < max_steps; ++step) {
    // Semi-implicit step on the gradient -8 v'' - 2 v: mode k is damped by
    // 1 / (1 + rate (8 k^2 - 2)); the k = 0 mode grows and renormalization
    // pulls it back.
    analyze(res.v.values, a, b);
    for (int k = 0; k <= half; ++k) {
      const double factor = 1.0 / (1.0 + rate * (8.0 * k * k - 2.0));
      a[k] *= factor;
      b[k] *= factor;
    }
    synthesize(a, b, trial);
    double lo = trial[0];
    for (double y : trial) lo = std::min(lo, y);
    if (lo <= 0.0) {
      rate *= 0.5;
      if (rate < 1e-12) break;
      continue;
    }
    CircleFunction cand = res.v;
    cand.values = trial;
    cand = normalize_constraint(cand);
    const double f_new = functional_v(cand, DiffScheme::Spectral);
    if (f_new > res.F + 1e-12 * std::max(1.0, std::abs(res.F))) {
      rate *= 0.5;
      if (rate < 1e-12) break;
      continue;
    }
    const bool tiny = std::abs(f_new - res.F) < 1e-15 * std::max(1.0, std::abs(res.F));
    res.v = std::move(cand);
    res.F = f_new;
    res.steps_taken = step + 1;
    calm = tiny ? calm + 1 : 0;
    if (calm >= 3) break;
  }
  res.final_rate = rate;
  res.diverged = res.F > f_initial + 1e-6;
  return res;
}

// --- stereographic transplants ---------------------------------------------

namespace {

// Composite Simpson with m (even) intervals.
template <typename Fn>
double simpson(Fn g, double lo, double hi, int m) {
  const double h = (hi - lo) / m;
  double acc = g(lo) + g(hi);
  for (int i = 1; i < m; ++i) acc += g(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace

StereoReport stereographic_check_b(const LineProfile& profile, double window) {
  if (!(window > 1.0))
    throw std::invalid_argument("stereographic_check_b: window must exceed 1");
  const double S = std::asinh(window);
  const int m = 1 << 15;

  // Everything in the graded variable x = sinh(s) so the quadrature resolves
  // both the core and the tails.  theta(x) = 2 atan2(1, x) lies in (0, 2 pi).
  auto theta_of = [](double x) { return 2.0 * std::atan2(1.0, x); };
  auto u_of = [&](double x) {
    return std::sqrt((1.0 + x * x) / 2.0) * profile.v(theta_of(x));
  };
  auto ux_of = [&](double x) {
    const double t = theta_of(x);
    const double opx = 1.0 + x * x;
    // du/dx = (x / sqrt(2 (1+x^2))) v + sqrt((1+x^2)/2) v_theta dtheta/dx.
    return x / std::sqrt(2.0 * opx) * profile.v(t) -
           std::sqrt(opx / 2.0) * profile.dv(t) * 2.0 / opx;
  };

  const double dirichlet = simpson(
      [&](double s) {
        const double x = std::sinh(s);
        const double d = ux_of(x);
        return d * d * std::cosh(s);
      },
      -S, S, m);
  const double lower_order = simpson(
      [&](double s) {
        const double x = std::sinh(s);
        const double u = u_of(x);
        const double opx = 1.0 + x * x;
        return 3.0 * u * u / (opx * opx) * std::cosh(s);
      },
      -S, S, m);
  const double mass = simpson(
      [&](double s) {
        const double x = std::sinh(s);
        const double u = u_of(x);
        return std::cosh(s) / (u * u);
      },
      -S, S, m);
  const double vr = profile.v(theta_of(window));
  const double vl = profile.v(theta_of(-window));
  const double boundary = window * (vr * vr + vl * vl) / 2.0;

  StereoReport rep;
  rep.line_side = 4.0 * (dirichlet - boundary) + lower_order;
  rep.bound_side = -kPi * kPi / mass;
  rep.circle_side = simpson(
      [&](double t) {
        const double d = profile.dv(t);
        const double y = profile.v(t);
        return 4.0 * d * d - 0.25 * y * y;
      },
      1e-9, kTwoPi - 1e-9, m);
  rep.residual = std::abs(rep.line_side - rep.circle_side);
  return rep;
}

StereoReport stereographic_check(const CircleFunction& v, StereoVariant variant) {
  v.validate();
  if (v.role != Role::V)
    throw std::invalid_argument("stereographic_check: expects a V-form profile");
  const TrigSeries series(v.values);
  const int n = v.n();

  if (variant == StereoVariant::B) {
    double scale = 0.0;
    for (double y : v.values) scale = std::max(scale, std::abs(y));
    // The window term only settles for profiles flat at the point sent to
    // infinity (theta = 0).
    if (std::abs(series.eval_derivative(0.0)) > 1e-6 * scale)
      throw std::invalid_argument(
          "stereographic_check: variant B requires analytic tails (v'(0) = 0)");
    LineProfile p{[&](double t) { return series.eval(t); },
                  [&](double t) { return series.eval_derivative(t); }};
    return stereographic_check_b(p, 1e6);
  }

  StereoReport rep;
  rep.circle_side = functional_v(v, DiffScheme::Spectral);
  // Line-side integrals pulled back to the circle land on the integrand
  // 2 v'^2 - v^2 / 2; evaluate it on the offset midpoint grid so the two
  // sides are genuinely different quadratures.
  const double h = kTwoPi / n;
  double line = 0.0, mass = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = -kPi + (j + 0.5) * h;
    const double y = series.eval(t);
    const double d = series.eval_derivative(t);
    line += 2.0 * d * d - 0.5 * y * y;
    mass += 0.5 / (y * y);
  }
  rep.line_side = line * h;
  rep.bound_side = -kPi * kPi / (mass * h);
  rep.residual = std::abs(rep.line_side - 0.5 * rep.circle_side);
  return rep;
}

FunctionalReport interval_check(const std::vector<double>& samples, double l) {
  const int K = static_cast<int>(samples.size()) - 1;
  if (K < 4)
    throw std::invalid_argument("interval_check: need at least 5 samples");
  if (!(l > 0.0)) throw std::invalid_argument("interval_check: l must be positive");
  for (double y : samples)
    if (!(y > 0.0))
      throw std::invalid_argument("interval_check: samples must be positive");

  // Even extension to the circle: node j <-> theta_j = -pi + pi j / K maps to
  // the interval coordinate x = l |theta| / pi.
  CircleFunction w;
  w.role = Role::V;
  w.interp = Interp::Trigonometric;
  w.values.resize(2 * K);
  for (int j = 0; j < 2 * K; ++j) w.values[j] = samples[std::abs(j - K)];
  const FunctionalReport circle = inequality_report(w, DiffScheme::Spectral);

  FunctionalReport rep;
  const double scale = l / kTwoPi;  // (l / pi) * 1/2
  rep.F = circle.F * scale;
  rep.constraint = circle.constraint * scale;
  rep.Q = rep.F * rep.constraint;
  rep.bound = -l * l / rep.constraint;
  rep.slack = rep.F - rep.bound;
  return rep;
}

std::pair<double, double> vanishing_check(const CircleFunction& w) {
  w.validate();
  double lo = w.values[0];
  for (double y : w.values) {
    if (y < -1e-12)
      throw std::invalid_argument("vanishing_check: samples must be nonnegative");
    lo = std::min(lo, y);
  }
  if (lo > 1e-9)
    throw std::invalid_argument("vanishing_check: profile must touch zero");
  const int n = w.n();
  const double h = kTwoPi / n;
  // One-sided difference sum so the kink at the zero set is captured.
  double dir = 0.0;
  for (int j = 0; j < n; ++j) {
    const double d = w.values[(j + 1) % n] - w.values[j];
    dir += d * d;
  }
  double mass = 0.0;
  for (double y : w.values) mass += y * y;
  return {4.0 * dir / h, mass * h};
}

}  // namespace sobocirc
