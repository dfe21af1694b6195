#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "biquat/matrix.hpp"
#include "biquat/ode.hpp"
#include "biquat/quaternion.hpp"
#include "biquat/transform.hpp"
#include "biquat/triad.hpp"

namespace biquat {

/// Space-time displacement dz = (dx_k + i dt_k) q_k with the time part on
/// the imaginary vector; dx.dt = 0 is required for the interval to exist.
struct BQInterval {
  Vec3 dx{};
  Vec3 dt{};

  Biquaternion as_biquaternion() const { return Biquaternion::from_parts(dx, dt); }
};

struct OrthogonalityError : std::domain_error {
  double residual;
  OrthogonalityError(const std::string& what, double res)
      : std::domain_error(what), residual(res) {}
};

/// dz^2 = dt^2 - dr^2; positive for timelike displacements.
inline double interval_square(const BQInterval& i, double tol = 1e-12) {
  const double residual = dot(i.dx, i.dt);
  const double scale = std::max(1.0, std::max(dot(i.dx, i.dx), dot(i.dt, i.dt)));
  if (std::abs(residual) > tol * scale)
    throw OrthogonalityError("interval_square: dx.dt = 0 violated", residual);
  return dot(i.dt, i.dt) - dot(i.dx, i.dx);
}

/// Components co-transform with the frame: u' = O u on dx + i dt.
inline BQInterval transform_interval(const Rotor& r, const BQInterval& in) {
  Vec3c u{};
  for (int k = 0; k < 3; ++k)
    for (int n = 0; n < 3; ++n) u[k] += r.o(k, n) * cplx{in.dx[n], in.dt[n]};
  BQInterval out;
  for (int k = 0; k < 3; ++k) {
    out.dx[k] = u[k].real();
    out.dt[k] = u[k].imag();
  }
  return out;
}

/// Relativistic reference frame: a triad with its accumulated rotor
/// history.  Velocities only exist through rapidities, so |V| < 1 always.
struct RelFrame {
  UnitTriad sigma;
  Mat history{Mat::identity(3)};

  static RelFrame rest_frame() { return {pauli_triad(), Mat::identity(3)}; }
};

/// Boost with rapidity psi about the given axis, Sigma' = H Sigma.
inline RelFrame boost(const RelFrame& frame, int axis, double psi) {
  const Rotor h = h_rotation(axis, psi);
  return {vector_transform(h, frame.sigma), h.o * frame.history};
}

/// Extracts the accumulated rapidity from a history that is a pure
/// hyperbolic rotation about the given axis.
inline double rapidity(const RelFrame& frame, int axis, double tol = 1e-9) {
  double psi = 0.0;
  switch (axis) {
    case 3: psi = std::asinh(frame.history(0, 1).imag()); break;
    case 2: psi = std::asinh(frame.history(2, 0).imag()); break;
    case 1: psi = std::asinh(frame.history(1, 2).imag()); break;
    default: throw std::invalid_argument("rapidity: axis must be 1, 2 or 3");
  }
  if (max_abs_diff(frame.history, h_rotation(axis, psi).o) > tol)
    throw std::domain_error("rapidity: frame history is not a pure boost about this axis");
  return psi;
}

inline double velocity(const RelFrame& frame, int axis) { return std::tanh(rapidity(frame, axis)); }

/// dt/dt' for the boosted frame.
inline double clock_factor(const RelFrame& frame, int axis) {
  return std::cosh(rapidity(frame, axis));
}

/// Relativistic circular motion seen by the inertial observer: coordinate
/// time, swept angle, and the tangential/normal accelerations, driven by a
/// rapidity program psi(t').
struct CircularMotionResult {
  std::vector<double> t_prime, t, alpha, a_tan, a_norm;
};

inline CircularMotionResult circular_motion(const std::function<double(double)>& psi,
                                            double radius,
                                            const std::vector<double>& t_prime_samples,
                                            double psi_rate_step = 1e-6,
                                            const OdeOptions& opts = {}) {
  if (radius <= 0.0) throw std::invalid_argument("circular_motion: radius must be positive");
  const OdeRhs rhs = [&psi, radius](double tp, const OdeState&) {
    const double p = psi(tp);
    return OdeState{std::cosh(p), std::tanh(p) / radius};
  };
  const OdeSolution sol = integrate_ode(rhs, {0.0, 0.0}, t_prime_samples, opts);
  CircularMotionResult out;
  out.t_prime = sol.times;
  for (size_t i = 0; i < sol.times.size(); ++i) {
    const double tp = sol.times[i];
    const double p = psi(tp);
    const double pd = (psi(tp + psi_rate_step) - psi(tp - psi_rate_step)) / (2.0 * psi_rate_step);
    out.t.push_back(sol.states[i][0]);
    out.alpha.push_back(sol.states[i][1]);
    // dpsi/dt = psi'(t')/cosh(psi), a_tan = (dpsi/dt)/cosh^2
    out.a_tan.push_back(pd / std::pow(std::cosh(p), 3));
    const double dalpha_dt = std::tanh(p) / (radius * std::cosh(p));
    out.a_norm.push_back(radius * dalpha_dt * dalpha_dt);
  }
  return out;
}

/// Constant proper acceleration along a line as a rapidity program
/// psi = a t'; coordinate time and position by quadrature.
struct HyperbolicMotionResult {
  std::vector<double> t_prime, t, x, v;
};

inline HyperbolicMotionResult hyperbolic_motion(double proper_acceleration,
                                                const std::vector<double>& t_prime_samples,
                                                const OdeOptions& opts = {}) {
  const double a = proper_acceleration;
  const OdeRhs rhs = [a](double tp, const OdeState&) {
    return OdeState{std::cosh(a * tp), std::sinh(a * tp)};
  };
  const OdeSolution sol = integrate_ode(rhs, {0.0, 0.0}, t_prime_samples, opts);
  HyperbolicMotionResult out;
  out.t_prime = sol.times;
  for (size_t i = 0; i < sol.times.size(); ++i) {
    out.t.push_back(sol.states[i][0]);
    out.x.push_back(sol.states[i][1]);
    out.v.push_back(std::tanh(a * sol.times[i]));
  }
  return out;
}

/// Thomas precession frequency for circular motion at orbital frequency
/// omega and rapidity psi: omega (1 - cosh psi) ~ -omega V^2 / 2.
inline double thomas_simple(double omega_orbit, double psi) {
  return omega_orbit * (1.0 - std::cosh(psi));
}

/// General Thomas precession along Sigma'' = R1^{-theta} H2^{psi} R1^{theta}
/// Sigma.  theta'(t) is extracted from the composed rotor product: each
/// evolution increment is polar-split, the real rotation factors are
/// composed, and the axis-1 angle is read off by atan2 with phase
/// unwrapping.  Omega_T = d(theta - theta')/dt.
struct ThomasResult {
  std::vector<double> t, theta, theta_prime, delta;
  std::vector<double> omega_t;  // at interior samples t[1..n-2]
};

inline ThomasResult thomas_general(const std::function<double(double)>& theta,
                                   const std::function<double(double)>& psi, double t0,
                                   double t1, int samples, double tol = 1e-8) {
  if (samples < 3) throw std::invalid_argument("thomas_general: need at least 3 samples");
  auto frame_map = [&](double t) {
    return elementary_rotation(1, -theta(t)) * elementary_rotation(2, cplx{0.0, psi(t)}) *
           elementary_rotation(1, theta(t));
  };
  ThomasResult out;
  const double dt = (t1 - t0) / (samples - 1);
  Mat rot_acc = Mat::identity(3);
  Mat prev = frame_map(t0);
  double prev_delta = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = t0 + i * dt;
    if (i > 0) {
      const Mat step = frame_map(t) * prev.transpose();
      const Mat rot_step = polar_unitary_factor(step);
      if (rot_step.max_imag() > tol)
        throw std::domain_error(
            "thomas_general: rotor extraction ill-conditioned, rotation factor not real "
            "(refine the sampling)");
      rot_acc = rot_step * rot_acc;
      prev = frame_map(t);
    }
    if (std::abs(rot_acc(0, 0) - 1.0) > 1e-6)
      throw std::domain_error("thomas_general: accumulated rotation left the axis-1 plane");
    double delta = std::atan2(rot_acc(1, 2).real(), rot_acc(1, 1).real());
    // unwrap against the previous sample
    const double two_pi = 2.0 * M_PI;
    while (delta - prev_delta > M_PI) delta -= two_pi;
    while (prev_delta - delta > M_PI) delta += two_pi;
    if (i > 0 && std::abs(delta - prev_delta) > M_PI / 2)
      throw std::domain_error(
          "thomas_general: phase unwrap jump of " + std::to_string(delta - prev_delta) +
          " rad between samples; refine the sampling near the branch cut");
    prev_delta = delta;
    out.t.push_back(t);
    out.theta.push_back(theta(t));
    out.delta.push_back(delta);
    out.theta_prime.push_back(theta(t) + delta);
  }
  for (int i = 1; i + 1 < samples; ++i) {
    const double dtp = (out.theta_prime[i + 1] - out.theta_prime[i - 1]) / (2.0 * dt);
    const double dth = (out.theta[i + 1] - out.theta[i - 1]) / (2.0 * dt);
    out.omega_t.push_back(dth - dtp);
  }
  return out;
}

/// Angular deviation of a planetary satellite position accumulated over
/// observation time: omega V_E V_P t, with velocities as fractions of c.
inline double satellite_deviation(double omega_sat, double v_earth_over_c,
                                  double v_planet_over_c, double t_seconds) {
  if (omega_sat < 0 || v_earth_over_c < 0 || v_planet_over_c < 0 || t_seconds < 0)
    throw std::invalid_argument("satellite_deviation: inputs must be nonnegative");
  return omega_sat * v_earth_over_c * v_planet_over_c * t_seconds;
}

}  // namespace biquat
