#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "biquat/matrix.hpp"
#include "biquat/ode.hpp"

namespace biquat {

/// Rotating-frame problem: generalized angular velocity program Omega_j(t),
/// mass, and applied force in frame components.
struct RotatingFrameSpec {
  std::function<Vec3(double)> omega;
  std::function<Vec3(double)> omega_dot;  // optional; numeric when empty
  double mass = 1.0;
  std::function<Vec3(double, const Vec3&, const Vec3&)> force;  // F(t, x, v)
  double omega_dot_step = 1e-6;

  Vec3 omega_rate(double t) const {
    if (omega_dot) return omega_dot(t);
    const Vec3 p = omega(t + omega_dot_step), m = omega(t - omega_dot_step);
    return (1.0 / (2.0 * omega_dot_step)) * (p - m);
  }
};

/// Sampled solution with the four named acceleration terms; they sum to
/// F/m at every sample.
struct Trajectory {
  std::vector<double> t;
  std::vector<Vec3> x, v;
  std::vector<Vec3> a_linear, a_coriolis, a_angular, a_centripetal;
};

/// Integrates m(a + 2 Omega x v + dOmega/dt x r + Omega x (Omega x r)) = F
/// with an adaptive 4/5 embedded pair.
inline Trajectory integrate_rotating_frame(const RotatingFrameSpec& spec, const Vec3& x0,
                                           const Vec3& v0,
                                           const std::vector<double>& sample_times,
                                           const OdeOptions& opts = {}) {
  if (spec.mass <= 0.0) throw std::invalid_argument("integrate_rotating_frame: mass > 0 required");
  auto acceleration = [&spec](double t, const Vec3& x, const Vec3& v) {
    const Vec3 w = spec.omega(t);
    const Vec3 wd = spec.omega_rate(t);
    const Vec3 f = spec.force(t, x, v);
    return (1.0 / spec.mass) * f - 2.0 * cross(w, v) - cross(wd, x) - cross(w, cross(w, x));
  };
  const OdeRhs rhs = [&acceleration](double t, const OdeState& y) {
    const Vec3 x{y[0], y[1], y[2]}, v{y[3], y[4], y[5]};
    const Vec3 a = acceleration(t, x, v);
    return OdeState{v[0], v[1], v[2], a[0], a[1], a[2]};
  };
  const OdeSolution sol =
      integrate_ode(rhs, {x0[0], x0[1], x0[2], v0[0], v0[1], v0[2]}, sample_times, opts);

  Trajectory out;
  out.t = sol.times;
  for (size_t i = 0; i < sol.times.size(); ++i) {
    const auto& y = sol.states[i];
    const Vec3 x{y[0], y[1], y[2]}, v{y[3], y[4], y[5]};
    const double t = sol.times[i];
    const Vec3 w = spec.omega(t), wd = spec.omega_rate(t);
    out.x.push_back(x);
    out.v.push_back(v);
    out.a_linear.push_back(acceleration(t, x, v));
    out.a_coriolis.push_back(2.0 * cross(w, v));
    out.a_angular.push_back(cross(wd, x));
    out.a_centripetal.push_back(cross(w, cross(w, x)));
  }
  return out;
}

/// Connection components of the chasing frame, whose first vector tracks
/// the particle: Omega_1 = da/dt sin(b), Omega_2 = -db/dt,
/// Omega_3 = da/dt cos(b).
struct ChasingBasis {
  std::function<double(double)> alpha, beta;
  double diff_step = 1e-6;

  double rate(const std::function<double(double)>& f, double t) const {
    return (f(t + diff_step) - f(t - diff_step)) / (2.0 * diff_step);
  }

  Vec3 omega(double t) const {
    const double ad = rate(alpha, t), bd = rate(beta, t), b = beta(t);
    return {ad * std::sin(b), -bd, ad * std::cos(b)};
  }

  Vec3 omega_rate(double t) const {
    const Vec3 p = omega(t + diff_step), m = omega(t - diff_step);
    return (1.0 / (2.0 * diff_step)) * (p - m);
  }

  /// Residuals of the three scalar chasing equations for a particle at
  /// (r, 0, 0); zero exactly on solutions of the rotating-frame equation.
  Vec3 equation_residuals(double t, double r, double rdot, double rddot, const Vec3& force,
                          double mass) const {
    const Vec3 w = omega(t);
    const Vec3 wd = omega_rate(t);
    return {rddot - r * (w[1] * w[1] + w[2] * w[2]) - force[0] / mass,
            2.0 * rdot * w[2] + r * wd[2] + r * w[0] * w[1] - force[1] / mass,
            2.0 * rdot * w[1] + r * wd[1] - r * w[0] * w[2] + force[2] / mass};
  }
};

enum class OscillatorRegime { Harmonic, Polynomial, Exponential };

inline const char* to_string(OscillatorRegime r) {
  switch (r) {
    case OscillatorRegime::Harmonic: return "harmonic";
    case OscillatorRegime::Polynomial: return "polynomial";
    default: return "exponential";
  }
}

/// Closed-form radial motion of the oscillator on a rod rotating at
/// constant omega: r'' + (k/m - omega^2) r = (k/m) l.  The regime follows
/// the sign of w^2 = k/m - omega^2; the rod reaction force is 2 m r' omega.
struct OscillatorSolution {
  OscillatorRegime regime;
  double w = 0.0;  // |k/m - omega^2|^(1/2)
  double mass, stiffness, omega, rest_length;
  std::function<double(double)> r, rdot;

  double rod_force(double t) const { return 2.0 * mass * rdot(t) * omega; }
};

inline OscillatorSolution rotating_oscillator(double mass, double stiffness, double omega,
                                              double rest_length, double r0, double v0,
                                              double boundary_rel_tol = 1e-12) {
  if (mass <= 0.0 || stiffness <= 0.0)
    throw std::invalid_argument("rotating_oscillator: m, k must be positive");
  if (omega < 0.0) throw std::invalid_argument("rotating_oscillator: omega must be >= 0");
  const double km = stiffness / mass;
  const double w_sq = km - omega * omega;
  const double forcing = km * rest_length;

  OscillatorSolution sol;
  sol.mass = mass;
  sol.stiffness = stiffness;
  sol.omega = omega;
  sol.rest_length = rest_length;

  if (std::abs(w_sq) <= boundary_rel_tol * (km + omega * omega)) {
    // r'' = (k/m) l: linear escape, quadratic when l != 0
    sol.regime = OscillatorRegime::Polynomial;
    sol.w = 0.0;
    const double a = 0.5 * forcing;
    sol.r = [r0, v0, a](double t) { return r0 + v0 * t + a * t * t; };
    sol.rdot = [v0, a](double t) { return v0 + 2.0 * a * t; };
  } else if (w_sq > 0.0) {
    sol.regime = OscillatorRegime::Harmonic;
    const double w = std::sqrt(w_sq);
    sol.w = w;
    const double center = forcing / w_sq;
    const double amp_cos = r0 - center, amp_sin = v0 / w;
    sol.r = [center, amp_cos, amp_sin, w](double t) {
      return center + amp_cos * std::cos(w * t) + amp_sin * std::sin(w * t);
    };
    sol.rdot = [amp_cos, amp_sin, w](double t) {
      return w * (-amp_cos * std::sin(w * t) + amp_sin * std::cos(w * t));
    };
  } else {
    sol.regime = OscillatorRegime::Exponential;
    const double w = std::sqrt(-w_sq);
    sol.w = w;
    const double center = forcing / w_sq;
    const double a = 0.5 * (r0 - center + v0 / w);   // e^{+wt} branch
    const double b = 0.5 * (r0 - center - v0 / w);   // e^{-wt} branch
    sol.r = [center, a, b, w](double t) {
      return center + a * std::exp(w * t) + b * std::exp(-w * t);
    };
    sol.rdot = [a, b, w](double t) {
      return w * (a * std::exp(w * t) - b * std::exp(-w * t));
    };
  }
  return sol;
}

}  // namespace biquat
