#include "sobocirc/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace sobocirc {

double functional_v(const CircleFunction& v, DiffScheme scheme) {
  v.validate();
  const CircleFunction dv = differentiate(v, scheme);
  double acc = 0.0;
  for (int j = 0; j < v.n(); ++j)
    acc += 4.0 * dv.values[j] * dv.values[j] - v.values[j] * v.values[j];
  return acc * kTwoPi / v.n();
}

double functional_f(const CircleFunction& f, DiffScheme scheme) {
  f.validate();
  if (f.role != Role::F)
    throw std::invalid_argument("functional_f: expects an F-form profile");
  const CircleFunction df = differentiate(f, scheme);
  double acc = 0.0;
  for (int j = 0; j < f.n(); ++j) {
    const double y = f.values[j], dy = df.values[j];
    acc += -1.0 / y + dy * dy / (y * y * y);
  }
  return acc * kTwoPi / f.n();
}

double functional_h(const CircleFunction& h, DiffScheme scheme) {
  h.validate();
  const CircleFunction dh = differentiate(h, scheme);
  double acc = 0.0;
  for (int j = 0; j < h.n(); ++j) {
    const double dy = dh.values[j];
    acc += std::exp(-h.values[j]) * (dy * dy - 1.0);
  }
  return acc * kTwoPi / h.n();
}

double constraint_integral(const CircleFunction& v) {
  v.validate();
  if (v.role != Role::V)
    throw std::invalid_argument("constraint_integral: expects a V-form profile");
  return integrate(reciprocal_square(v));
}

FunctionalReport inequality_report(const CircleFunction& v, DiffScheme scheme) {
  FunctionalReport r;
  r.F = functional_v(v, scheme);
  r.constraint = constraint_integral(v);
  r.Q = r.F * r.constraint;
  r.bound = -4.0 * kPi * kPi / r.constraint;
  r.slack = r.F - r.bound;
  return r;
}

CircleFunction el_residual(const CircleFunction& f, DiffScheme scheme) {
  f.validate();
  if (f.role != Role::F)
    throw std::invalid_argument("el_residual: expects an F-form profile");
  const double mass = integrate(f);
  if (std::abs(mass - kTwoPi) > 1e-8)
    throw std::invalid_argument("el_residual: profile must satisfy int f = 2 pi");
  const CircleFunction df = differentiate(f, scheme);
  const CircleFunction d2f = differentiate_twice(f, scheme);
  CircleFunction out;
  out.role = Role::Generic;
  out.interp = f.interp;
  out.values.resize(f.n());
  for (int j = 0; j < f.n(); ++j) {
    const double y = f.values[j], dy = df.values[j], ddy = d2f.values[j];
    const double y2 = y * y;
    out.values[j] = 1.0 / y2 + 3.0 * dy * dy / (y2 * y2) - 2.0 * ddy / (y2 * y) - 1.0;
  }
  return out;
}

CircleFunction apply_second_variation(const CircleFunction& u, DiffScheme scheme) {
  const CircleFunction d2u = differentiate_twice(u, scheme);
  CircleFunction out = u;
  out.role = Role::Generic;
  for (int j = 0; j < u.n(); ++j)
    out.values[j] = -8.0 * d2u.values[j] - 8.0 * u.values[j];
  return out;
}

double second_variation_rayleigh(const CircleFunction& u, DiffScheme scheme) {
  const CircleFunction lu = apply_second_variation(u, scheme);
  double num = 0.0, den = 0.0;
  for (int j = 0; j < u.n(); ++j) {
    num += u.values[j] * lu.values[j];
    den += u.values[j] * u.values[j];
  }
  if (den == 0.0)
    throw std::invalid_argument("second_variation_rayleigh: zero test function");
  return num / den;
}

SpectrumReport second_variation_spectrum(int max_m, int n) {
  if (max_m < 0) throw std::invalid_argument("second_variation_spectrum: max_m >= 0");
  if (n < 2 * (max_m + 2))
    throw std::invalid_argument("second_variation_spectrum: grid too coarse for max_m");
  SpectrumReport report;
  for (int m = 0; m <= max_m; ++m) {
    const int k = m + 1;
    const CircleFunction us =
        sample_circle(n, [k](double t) { return std::sin(k * t); });
    const CircleFunction uc =
        sample_circle(n, [k](double t) { return std::cos(k * t); });
    const double ks = second_variation_rayleigh(us, DiffScheme::Spectral);
    const double kc = second_variation_rayleigh(uc, DiffScheme::Spectral);
    SpectrumEntry e;
    e.m = m;
    e.kappa = 0.5 * (ks + kc);
    e.dimension = (std::abs(ks - kc) <= 1e-9 * std::max(1.0, std::abs(e.kappa))) ? 2 : 1;
    report.entries.push_back(e);
  }
  return report;
}

SpectrumReport second_variation_spectrum_dense(int max_m, int n, DiffScheme scheme) {
  if (n < 2 * (max_m + 2))
    throw std::invalid_argument("second_variation_spectrum_dense: grid too coarse");
  // Assemble L column by column, then take Rayleigh quotients of sampled
  // harmonics against the assembled matrix.  Slower but independent of the
  // series-differentiation fast path.
  std::vector<std::vector<double>> L(n, std::vector<double>(n, 0.0));
  for (int c = 0; c < n; ++c) {
    CircleFunction e;
    e.values.assign(n, 0.0);
    e.values[c] = 1.0;
    const CircleFunction col = apply_second_variation(e, scheme);
    for (int r = 0; r < n; ++r) L[r][c] = col.values[r];
  }
  auto rayleigh = [&](const std::vector<double>& u) {
    double num = 0.0, den = 0.0;
    for (int r = 0; r < n; ++r) {
      double lu = 0.0;
      for (int c = 0; c < n; ++c) lu += L[r][c] * u[c];
      num += u[r] * lu;
      den += u[r] * u[r];
    }
    return num / den;
  };
  SpectrumReport report;
  for (int m = 0; m <= max_m; ++m) {
    const int k = m + 1;
    std::vector<double> us(n), uc(n);
    for (int j = 0; j < n; ++j) {
      const double t = -kPi + kTwoPi * j / n;
      us[j] = std::sin(k * t);
      uc[j] = std::cos(k * t);
    }
    const double ks = rayleigh(us), kc = rayleigh(uc);
    SpectrumEntry e;
    e.m = m;
    e.kappa = 0.5 * (ks + kc);
    e.dimension = (std::abs(ks - kc) <= 1e-6 * std::max(1.0, std::abs(e.kappa))) ? 2 : 1;
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace sobocirc
