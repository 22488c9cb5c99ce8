#include "sobocirc/closed_forms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sobocirc {

CircleFunction critical_profile(double alpha, double theta0, int n) {
  if (std::abs(alpha) > 0.999)
    throw std::invalid_argument("critical_profile: |alpha| must be <= 0.999");
  const double root = std::sqrt(1.0 - alpha * alpha);
  return sample_circle(
      n, [=](double t) { return root / (1.0 + alpha * std::cos(t - theta0)); },
      Role::F);
}

ThresholdSet dirichlet_thresholds(double m, double M) {
  if (!(0.0 < m && m < M))
    throw std::invalid_argument("dirichlet_thresholds: need 0 < m < M");
  const double s = std::sqrt(M * M - m * m);
  ThresholdSet t;
  t.c_cap = kPi / (M * M);
  t.c_ab = kPi / (2.0 * M * s) * std::log((M + s) / (M - s));
  t.c_bc = kPi / (M * M - m * m) * std::log((M * M) / (m * m));
  t.c_lambda0 = kPi / (m * M);
  t.c_de = kPi / (m * s) * std::atan(s / m);
  t.c_floor = kPi / (m * m);
  return t;
}

void DirichletSpec::validate() const {
  if (!(0.0 < m && m < M))
    throw std::invalid_argument("DirichletSpec: need 0 < m < M");
  if (!(c > kPi / (M * M) && c < kPi / (m * m)))
    throw std::invalid_argument(
        "DirichletSpec: c must lie strictly inside (pi/M^2, pi/m^2)");
}

namespace {

constexpr int kQuadPoints = 4096;

// Half-open midpoint rule on [a, b]; exact enough for the smooth pieces the
// case profiles are built from.
template <typename Fn>
double midpoint(Fn g, double a, double b) {
  const double h = (b - a) / kQuadPoints;
  double acc = 0.0;
  for (int i = 0; i < kQuadPoints; ++i) acc += g(a + (i + 0.5) * h);
  return acc * h;
}

// v^2 and its theta-derivative for the parabola cases B/D.
struct Parabola {
  double mu, Lambda, t;
  double q(double th) const {
    const double u = th + Lambda;
    return mu * u * u + t;
  }
  double qp(double th) const { return 2.0 * mu * (th + Lambda); }
};

// Constraint value int 1/v^2 for a parabola profile.
double parabola_constraint(const Parabola& p) {
  return midpoint([&](double th) { return 1.0 / p.q(th); }, 0.0, kPi);
}

// Energy int v'^2 = int (q')^2 / (4 q) over a piece.
template <typename Q, typename Qp>
double piece_energy(Q q, Qp qp, double a, double b) {
  return midpoint([&](double th) {
    const double d = qp(th);
    return d * d / (4.0 * q(th));
  }, a, b);
}

// Bisection for g(x) = target on [lo, hi]; g need only be monotone.
template <typename Fn>
double bisect(Fn g, double lo, double hi, double target, const char* what) {
  double glo = g(lo), ghi = g(hi);
  if ((glo - target) * (ghi - target) > 0.0)
    throw std::runtime_error(std::string("dirichlet_solve: non-bracketing interval for ") +
                             what + " (target outside scanned range)");
  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((glo - target) * (gm - target) <= 0.0) {
      hi = mid;
      ghi = gm;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  (void)ghi;
  return 0.5 * (lo + hi);
}

Parabola parabola_from_case_b(double sigma, double m, double M) {
  // sigma = 1/s in (0, 1); t = M^2 + delta with delta > 0, mu < 0.
  const double k = M * M - m * m;
  const double delta = sigma * sigma * k / (1.0 - sigma * sigma);
  const double Lambda = kPi * sigma / (1.0 - sigma);
  const double t = M * M + delta;
  const double mu = -delta / (Lambda * Lambda);
  return {mu, Lambda, t};
}

Parabola parabola_from_case_d(double s, double m, double M) {
  // s in (0, 1); t <= m^2, mu > 0, vertex at or beyond theta = pi.
  const double t = (m * m - s * s * M * M) / (1.0 - s * s);
  const double Lambda = -kPi / (1.0 - s);
  const double mu = (M * M - t) / (Lambda * Lambda);
  return {mu, Lambda, t};
}

}  // namespace

double DirichletSolution::eval(double theta) const {
  if (theta < 0.0 || theta > kPi)
    throw std::invalid_argument("DirichletSolution::eval: theta outside [0, pi]");
  const double k = M * M - m * m;
  double q = 0.0;
  switch (shape) {
    case DirichletCase::A: {
      if (theta <= split) return M;
      const double u = (theta - split) / (kPi - split);
      q = M * M - k * u * u;
      break;
    }
    case DirichletCase::E: {
      if (theta >= split) return m;
      const double u = (theta - split) / split;
      q = m * m + k * u * u;
      break;
    }
    case DirichletCase::C:
      q = M * M - k * theta / kPi;
      break;
    case DirichletCase::B:
    case DirichletCase::D: {
      const double u = theta + Lambda;
      q = mu * u * u + ratio;
      break;
    }
  }
  return std::sqrt(q);
}

DirichletSolution dirichlet_solve(const DirichletSpec& spec) {
  spec.validate();
  const double m = spec.m, M = spec.M, c = spec.c;
  const double k = M * M - m * m;
  const ThresholdSet th = dirichlet_thresholds(m, M);

  DirichletSolution sol;
  sol.m = m;
  sol.M = M;
  sol.c = c;

  if (c < th.c_ab) {
    sol.shape = DirichletCase::A;
    // c(a) = a / M^2 + (1 - a/pi) c_ab, monotone decreasing in a.
    auto cof = [&](double a) { return a / (M * M) + (1.0 - a / kPi) * th.c_ab; };
    const double a = bisect(cof, 0.0, kPi, c, "case A junction");
    sol.split = a;
    sol.lambda = -M * M * k / ((kPi - a) * (kPi - a));
    const double w = kPi - a;
    // E = (k/w) [ (M/s) atanh(s/M) - 1 ], s^2 = k; the midpoint rule cannot
    // resolve the near-floor spike when m is small, the antiderivative can.
    const double s = std::sqrt(k);
    sol.energy = (k / w) * (M / s * std::atanh(s / M) - 1.0);
  } else if (std::abs(c - th.c_bc) <= 1e-12 * th.c_bc) {
    sol.shape = DirichletCase::C;
    sol.lambda = -k * k / (4.0 * kPi * kPi);
    sol.energy = k / (4.0 * kPi) * std::log(M * M / (m * m));
  } else if (c < th.c_bc) {
    sol.shape = DirichletCase::B;
    auto cof = [&](double sigma) {
      return parabola_constraint(parabola_from_case_b(sigma, m, M));
    };
    const double sigma = bisect(cof, 1e-9, 1.0 - 1e-9, c, "case B parameter");
    const Parabola p = parabola_from_case_b(sigma, m, M);
    sol.mu = p.mu;
    sol.Lambda = p.Lambda;
    sol.ratio = p.t;
    sol.lambda = p.t * p.mu;
    sol.energy = piece_energy([&](double t) { return p.q(t); },
                              [&](double t) { return p.qp(t); }, 0.0, kPi);
  } else if (c <= th.c_de) {
    sol.shape = DirichletCase::D;
    auto cof = [&](double s) {
      return parabola_constraint(parabola_from_case_d(s, m, M));
    };
    const double s = bisect(cof, 1e-9, 1.0 - 1e-9, c, "case D parameter");
    const Parabola p = parabola_from_case_d(s, m, M);
    sol.mu = p.mu;
    sol.Lambda = p.Lambda;
    sol.ratio = p.t;
    sol.lambda = p.t * p.mu;
    sol.energy = piece_energy([&](double t) { return p.q(t); },
                              [&](double t) { return p.qp(t); }, 0.0, kPi);
  } else {
    sol.shape = DirichletCase::E;
    // c(b) = (b/pi) c_de + (pi - b) / m^2, monotone decreasing in b.
    auto cof = [&](double b) { return b / kPi * th.c_de + (kPi - b) / (m * m); };
    const double b = bisect(cof, 0.0, kPi, c, "case E junction");
    sol.split = b;
    sol.lambda = m * m * k / (b * b);
    // E = (k/b) [ 1 - (m/s) atan(s/m) ], s^2 = k.
    const double s = std::sqrt(k);
    sol.energy = (k / b) * (1.0 - m / s * std::atan(s / m));
  }
  return sol;
}

std::vector<EnergyPoint> dirichlet_energy_curve(double m, double M,
                                                const std::vector<double>& c_grid) {
  std::vector<EnergyPoint> out;
  out.reserve(c_grid.size());
  for (double c : c_grid) {
    const DirichletSolution sol = dirichlet_solve({m, M, c});
    out.push_back({c, sol.energy, sol.lambda, sol.shape});
  }
  return out;
}

}  // namespace sobocirc
