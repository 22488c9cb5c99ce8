#include "sobocirc/symmetries.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace sobocirc {

void LorentzParams::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(theta0) || !std::isfinite(thetabar0))
    throw std::invalid_argument("LorentzParams: non-finite parameter");
  if (std::abs(alpha) > 0.999)
    throw std::invalid_argument("LorentzParams: |alpha| must be <= 0.999");
}

double NuProfile::operator()(double thetabar) const {
  return k * std::sqrt(1.0 - alpha * alpha) /
         (1.0 - alpha * std::cos(thetabar - center));
}

double pullback_angle(double thetabar, const LorentzParams& p) {
  p.validate();
  const double d = thetabar - p.thetabar0;
  const double cd = std::cos(d), sd = std::sin(d);
  const double denom = 1.0 - p.alpha * cd;
  const double ct = (cd - p.alpha) / denom;
  const double st = std::sqrt(1.0 - p.alpha * p.alpha) * sd / denom;
  return wrap_angle(p.theta0 + std::atan2(st, ct));
}

namespace {

// One interpolant per call, dispatched on the profile's mode.
class Evaluator {
 public:
  explicit Evaluator(const CircleFunction& u) {
    if (u.interp == Interp::Trigonometric)
      trig_ = std::make_unique<TrigSeries>(u.values);
    else
      cubic_ = std::make_unique<PeriodicCubic>(u.values);
  }
  double operator()(double theta) const {
    return trig_ ? trig_->eval(theta) : cubic_->eval(theta);
  }

 private:
  std::unique_ptr<TrigSeries> trig_;
  std::unique_ptr<PeriodicCubic> cubic_;
};

template <typename Combine>
CircleFunction boost_impl(const CircleFunction& u, const LorentzParams& p,
                          Combine combine) {
  u.validate();
  p.validate();
  if (p.alpha == 0.0 && p.theta0 == p.thetabar0) return u;  // identity map
  const NuProfile nu{p.alpha, p.thetabar0, 1.0};
  const Evaluator eval(u);
  CircleFunction out = u;
  for (int j = 0; j < u.n(); ++j) {
    const double tb = u.node(j);
    out.values[j] = combine(nu(tb), eval(pullback_angle(tb, p)));
  }
  out.validate();
  return out;
}

}  // namespace

CircleFunction lorentz_f(const CircleFunction& f, const LorentzParams& p) {
  if (f.role != Role::F)
    throw std::invalid_argument("lorentz_f: expects an F-form profile");
  return boost_impl(f, p, [](double nu, double y) { return nu * y; });
}

CircleFunction lorentz_v(const CircleFunction& v, const LorentzParams& p) {
  if (v.role != Role::V)
    throw std::invalid_argument("lorentz_v: expects a V-form profile");
  return boost_impl(v, p, [](double nu, double y) { return y / std::sqrt(nu); });
}

CircleFunction lorentz_h(const CircleFunction& h, const LorentzParams& p) {
  if (h.role != Role::H)
    throw std::invalid_argument("lorentz_h: expects an H-form profile");
  return boost_impl(h, p, [](double nu, double y) { return y + std::log(nu); });
}

CircleFunction rearrange(const CircleFunction& u) {
  u.validate();
  const int n = u.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return u.values[a] > u.values[b];
  });
  CircleFunction out = u;
  out.interp = Interp::Cubic;
  // Largest at index n/2 (theta = 0), then alternate +1, -1, +2, -2, ...;
  // the final offset +n/2 wraps to index 0 (theta = -pi).
  for (int r = 0; r < n; ++r) {
    const int off = (r + 1) / 2;
    const int target = (r % 2 == 1) ? (n / 2 + off) % n : (n / 2 - off + n) % n;
    out.values[target] = u.values[order[r]];
  }
  return out;
}

}  // namespace sobocirc
