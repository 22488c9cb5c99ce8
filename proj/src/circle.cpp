#include "sobocirc/circle.hpp"

#include <cmath>
#include <stdexcept>

namespace sobocirc {

double wrap_angle(double theta) {
  double r = std::remainder(theta, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

void CircleFunction::validate() const {
  const int size = n();
  if (size < 8 || size % 2 != 0)
    throw std::invalid_argument("CircleFunction: n must be even and >= 8");
  for (double y : values) {
    if (!std::isfinite(y))
      throw std::invalid_argument("CircleFunction: non-finite sample");
    if ((role == Role::V || role == Role::F) && y <= 0.0)
      throw std::invalid_argument("CircleFunction: V/F samples must be positive");
  }
}

CircleFunction sample_circle(int n, const std::function<double(double)>& fn,
                             Role role, Interp interp) {
  CircleFunction u;
  u.role = role;
  u.interp = interp;
  u.values.resize(n);
  for (int j = 0; j < n; ++j) u.values[j] = fn(-kPi + kTwoPi * j / n);
  u.validate();
  return u;
}

double integrate(const CircleFunction& u) {
  u.validate();
  double s = 0.0;
  for (double y : u.values) s += y;
  return s * kTwoPi / u.n();
}

CircleFunction reciprocal_square(const CircleFunction& u) {
  u.validate();
  CircleFunction out = u;
  for (double& y : out.values) {
    if (y <= 0.0)
      throw std::invalid_argument("reciprocal_square: samples must be positive");
    y = 1.0 / (y * y);
  }
  out.role = (u.role == Role::V) ? Role::F : Role::Generic;
  return out;
}

// --- trigonometric series -------------------------------------------------

namespace {

// DFT analysis on the native grid using an exact trig table:
// cos(k theta_j) = (-1)^k cos(2 pi (k j mod n) / n), likewise for sin, so the
// inner loop is table lookups with integer index arithmetic.  Phase
// recurrences are avoided on purpose: their ~k*eps drift gets amplified by
// k^2 in second derivatives, which would swamp 1e-7-level residual checks.
void analyze_on_grid(const std::vector<double>& y, std::vector<double>& a,
                     std::vector<double>& b) {
  const int n = static_cast<int>(y.size());
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("analyze_on_grid: even sample count required");
  const int half = n / 2;
  std::vector<double> tc(n), ts(n);
  for (int r = 0; r < n; ++r) {
    tc[r] = std::cos(kTwoPi * r / n);
    ts[r] = std::sin(kTwoPi * r / n);
  }
  a.assign(half + 1, 0.0);
  b.assign(half + 1, 0.0);
  double peak = 0.0;
  for (double v : y) peak = std::max(peak, std::abs(v));
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
  // Noise floor: coefficients of smooth data decay below round-off; zero them
  // so that the k^2 weights of differentiation act only on real content.
  const double floor_tol = 64.0 * 1.1e-16 * peak;
  for (int k = 1; k <= half; ++k) {
    if (std::abs(a[k]) < floor_tol) a[k] = 0.0;
    if (std::abs(b[k]) < floor_tol) b[k] = 0.0;
  }
}

// First (order 1) or second (order 2) spectral derivative evaluated back on
// the native grid with the same exact-table scheme.
void spectral_derivative_on_grid(const std::vector<double>& y,
                                 std::vector<double>& out, int order) {
  const int n = static_cast<int>(y.size());
  const int half = n / 2;
  std::vector<double> a, b;
  analyze_on_grid(y, a, b);
  std::vector<double> tc(n), ts(n);
  for (int r = 0; r < n; ++r) {
    tc[r] = std::cos(kTwoPi * r / n);
    ts[r] = std::sin(kTwoPi * r / n);
  }
  out.assign(n, 0.0);
  for (int k = 1; k < half; ++k) {
    if (a[k] == 0.0 && b[k] == 0.0) continue;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    // d/dt: k (b cos - a sin);  d2/dt2: -k^2 (a cos + b sin).
    const double wc = (order == 1) ? sign * k * b[k] : -sign * k * k * a[k];
    const double ws = (order == 1) ? -sign * k * a[k] : -sign * k * k * b[k];
    int r = 0;
    for (int j = 0; j < n; ++j) {
      out[j] += wc * tc[r] + ws * ts[r];
      r += k;
      if (r >= n) r -= n;
    }
  }
  // Nyquist mode, carried as a pure cosine: its first derivative vanishes at
  // the nodes; its second derivative alternates in sign.
  if (order == 2 && a[half] != 0.0) {
    const double sign = (half % 2 == 0) ? 1.0 : -1.0;
    const double w = -0.5 * sign * static_cast<double>(half) * half * a[half];
    for (int j = 0; j < n; ++j) out[j] += (j % 2 == 0) ? w : -w;
  }
}

}  // namespace

TrigSeries::TrigSeries(const std::vector<double>& samples) {
  analyze_on_grid(samples, cos_coef_, sin_coef_);
}

double TrigSeries::eval(double theta) const {
  const int half = modes();
  const double c1 = std::cos(theta), s1 = std::sin(theta);
  double c = c1, s = s1;
  double acc = 0.5 * cos_coef_[0];
  for (int k = 1; k < half; ++k) {
    acc += cos_coef_[k] * c + sin_coef_[k] * s;
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
  }
  acc += 0.5 * cos_coef_[half] * c;  // Nyquist mode as pure cosine
  return acc;
}

double TrigSeries::eval_derivative(double theta) const {
  const int half = modes();
  const double c1 = std::cos(theta), s1 = std::sin(theta);
  double c = c1, s = s1;
  double acc = 0.0;
  for (int k = 1; k < half; ++k) {
    acc += k * (sin_coef_[k] * c - cos_coef_[k] * s);
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
  }
  acc -= 0.5 * half * cos_coef_[half] * s;
  return acc;
}

double TrigSeries::eval_second_derivative(double theta) const {
  const int half = modes();
  const double c1 = std::cos(theta), s1 = std::sin(theta);
  double c = c1, s = s1;
  double acc = 0.0;
  for (int k = 1; k < half; ++k) {
    acc -= static_cast<double>(k) * k * (cos_coef_[k] * c + sin_coef_[k] * s);
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
  }
  acc -= 0.5 * static_cast<double>(half) * half * cos_coef_[half] * c;
  return acc;
}

// --- periodic cubic spline ------------------------------------------------

PeriodicCubic::PeriodicCubic(const std::vector<double>& samples) : y_(samples) {
  const int n = static_cast<int>(samples.size());
  if (n < 4) throw std::invalid_argument("PeriodicCubic: need >= 4 samples");
  h_ = kTwoPi / n;

  // Solve the cyclic system (1, 4, 1) m = (6/h^2) d2y with Sherman-Morrison.
  std::vector<double> rhs(n);
  for (int j = 0; j < n; ++j) {
    const double ym = y_[(j + n - 1) % n], yp = y_[(j + 1) % n];
    rhs[j] = 6.0 / (h_ * h_) * (ym - 2.0 * y_[j] + yp);
  }
  auto solve_tridiag = [&](std::vector<double> b, double d0, double dn1) {
    // Tridiagonal with diagonal 4 except first = d0 and last = dn1,
    // off-diagonals 1.  Thomas algorithm; returns solution in-place.
    const int m = static_cast<int>(b.size());
    std::vector<double> diag(m, 4.0), upper(m, 1.0);
    diag[0] = d0;
    diag[m - 1] = dn1;
    for (int i = 1; i < m; ++i) {
      const double w = 1.0 / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      b[i] -= w * b[i - 1];
      upper[i - 1] = w * upper[i - 1];  // stash the multiplier-scaled entry
    }
    b[m - 1] /= diag[m - 1];
    for (int i = m - 2; i >= 0; --i) b[i] = (b[i] - 1.0 * b[i + 1]) / diag[i];
    return b;
  };
  // Cyclic correction vector u = (gamma, 0, ..., 0, 1), v = (1, ..., 1/gamma).
  const double gamma = -4.0;
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = 1.0;
  auto x1 = solve_tridiag(rhs, 4.0 - gamma, 4.0 - 1.0 / gamma);
  auto x2 = solve_tridiag(u, 4.0 - gamma, 4.0 - 1.0 / gamma);
  const double num = x1[0] + x1[n - 1] / gamma;
  const double den = 1.0 + x2[0] + x2[n - 1] / gamma;
  m_.resize(n);
  for (int j = 0; j < n; ++j) m_[j] = x1[j] - (num / den) * x2[j];
}

double PeriodicCubic::eval(double theta) const {
  const int n = static_cast<int>(y_.size());
  double t = theta + kPi;
  t -= kTwoPi * std::floor(t / kTwoPi);
  int j = static_cast<int>(t / h_);
  if (j >= n) j = n - 1;
  const int jp = (j + 1) % n;
  const double a = ((j + 1) * h_ - t) / h_;
  const double b = 1.0 - a;
  return a * y_[j] + b * y_[jp] +
         ((a * a * a - a) * m_[j] + (b * b * b - b) * m_[jp]) * h_ * h_ / 6.0;
}

// --- differentiation and evaluation ---------------------------------------

CircleFunction differentiate(const CircleFunction& u, DiffScheme scheme) {
  u.validate();
  const int n = u.n();
  CircleFunction out;
  out.role = Role::Generic;
  out.interp = u.interp;
  out.values.resize(n);
  if (scheme == DiffScheme::Central) {
    const double inv2h = n / (2.0 * kTwoPi);
    for (int j = 0; j < n; ++j)
      out.values[j] = (u.values[(j + 1) % n] - u.values[(j + n - 1) % n]) * inv2h;
  } else {
    spectral_derivative_on_grid(u.values, out.values, 1);
  }
  return out;
}

CircleFunction differentiate_twice(const CircleFunction& u, DiffScheme scheme) {
  u.validate();
  const int n = u.n();
  CircleFunction out;
  out.role = Role::Generic;
  out.interp = u.interp;
  out.values.resize(n);
  if (scheme == DiffScheme::Central) {
    const double h = kTwoPi / n;
    for (int j = 0; j < n; ++j)
      out.values[j] = (u.values[(j + 1) % n] - 2.0 * u.values[j] +
                       u.values[(j + n - 1) % n]) /
                      (h * h);
  } else {
    spectral_derivative_on_grid(u.values, out.values, 2);
  }
  return out;
}

double interp_eval(const CircleFunction& u, double theta) {
  u.validate();
  if (u.interp == Interp::Trigonometric) return TrigSeries(u.values).eval(theta);
  return PeriodicCubic(u.values).eval(theta);
}

CircleFunction normalize_constraint(const CircleFunction& v) {
  v.validate();
  if (v.role != Role::V)
    throw std::invalid_argument("normalize_constraint: expects a V-form profile");
  const double mass = integrate(reciprocal_square(v));
  const double s = std::sqrt(mass / kTwoPi);
  CircleFunction out = v;
  for (double& y : out.values) y *= s;
  return out;
}

}  // namespace sobocirc
