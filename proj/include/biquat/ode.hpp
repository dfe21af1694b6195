#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace biquat {

using OdeState = std::vector<double>;
using OdeRhs = std::function<OdeState(double, const OdeState&)>;

struct OdeOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double initial_step = 1e-3;
  double min_step = 1e-13;
  size_t max_steps = 5'000'000;
};

struct OdeSolution {
  std::vector<double> times;
  std::vector<OdeState> states;
  bool complete = true;
};

/// Thrown on step-size underflow; carries the partial trajectory up to the
/// failure time.
struct IntegrationError : std::runtime_error {
  OdeSolution partial;
  IntegrationError(const std::string& what, OdeSolution sol)
      : std::runtime_error(what), partial(std::move(sol)) {}
};

namespace detail {

inline OdeState axpy(const OdeState& y, double h, const OdeState& k) {
  OdeState r = y;
  for (size_t i = 0; i < r.size(); ++i) r[i] += h * k[i];
  return r;
}

}  // namespace detail

/// Adaptive Dormand-Prince 5(4) integration reporting the state at each
/// requested sample time.  sample_times must be increasing and start at t0.
inline OdeSolution integrate_ode(const OdeRhs& rhs, const OdeState& y0,
                                 const std::vector<double>& sample_times,
                                 const OdeOptions& opts = {}) {
  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                      a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                      a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                      e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                      e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  if (sample_times.empty()) throw std::invalid_argument("integrate_ode: no sample times");
  OdeSolution out;
  out.times.push_back(sample_times.front());
  out.states.push_back(y0);

  double t = sample_times.front();
  OdeState y = y0;
  double h = opts.initial_step;
  size_t steps = 0;

  for (size_t target_idx = 1; target_idx < sample_times.size(); ++target_idx) {
    const double target = sample_times[target_idx];
    if (target <= t + 1e-300) {
      out.times.push_back(target);
      out.states.push_back(y);
      continue;
    }
    while (target - t > 1e-14 * std::max(1.0, std::abs(target))) {
      if (++steps > opts.max_steps)
        throw IntegrationError("integrate_ode: step budget exhausted", std::move(out));
      if (h < opts.min_step) {
        out.complete = false;
        throw IntegrationError("integrate_ode: step size underflow (stiff problem?)",
                               std::move(out));
      }
      const double hs = std::min(h, target - t);
      const OdeState k1 = rhs(t, y);
      const OdeState k2 = rhs(t + c2 * hs, detail::axpy(y, hs * a21, k1));
      OdeState tmp = detail::axpy(y, hs * a31, k1);
      tmp = detail::axpy(tmp, hs * a32, k2);
      const OdeState k3 = rhs(t + c3 * hs, tmp);
      tmp = detail::axpy(y, hs * a41, k1);
      tmp = detail::axpy(tmp, hs * a42, k2);
      tmp = detail::axpy(tmp, hs * a43, k3);
      const OdeState k4 = rhs(t + c4 * hs, tmp);
      tmp = detail::axpy(y, hs * a51, k1);
      tmp = detail::axpy(tmp, hs * a52, k2);
      tmp = detail::axpy(tmp, hs * a53, k3);
      tmp = detail::axpy(tmp, hs * a54, k4);
      const OdeState k5 = rhs(t + c5 * hs, tmp);
      tmp = detail::axpy(y, hs * a61, k1);
      tmp = detail::axpy(tmp, hs * a62, k2);
      tmp = detail::axpy(tmp, hs * a63, k3);
      tmp = detail::axpy(tmp, hs * a64, k4);
      tmp = detail::axpy(tmp, hs * a65, k5);
      const OdeState k6 = rhs(t + hs, tmp);

      OdeState ynew = y;
      for (size_t i = 0; i < y.size(); ++i)
        ynew[i] += hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
      const OdeState k7 = rhs(t + hs, ynew);

      double err = 0.0;
      for (size_t i = 0; i < y.size(); ++i) {
        const double ei = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                e6 * k6[i] + e7 * k7[i]);
        const double scale =
            opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        err = std::max(err, std::abs(ei) / scale);
      }
      if (err <= 1.0) {
        t += hs;
        y = std::move(ynew);
      }
      const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
      h = hs * std::clamp(factor, 0.2, 5.0);
    }
    out.times.push_back(target);
    out.states.push_back(y);
  }
  return out;
}

}  // namespace biquat
