#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "biquat/eigenstructure.hpp"
#include "biquat/grid.hpp"
#include "biquat/matrix.hpp"
#include "biquat/transform.hpp"
#include "biquat/triad.hpp"

namespace biquat {

using TriadField = std::function<UnitTriad(const std::vector<double>&)>;
using RotorField = std::function<Rotor(const std::vector<double>&)>;
using SpinorField = std::function<SpinorMap(const std::vector<double>&)>;

/// omega_{xi, k j} at one point for one parameter.
using Omega3 = std::array<std::array<cplx, 3>, 3>;

inline double max_abs(const Omega3& o) {
  double m = 0.0;
  for (const auto& row : o)
    for (const auto& x : row) m = std::max(m, std::abs(x));
  return m;
}

inline Omega3 operator-(const Omega3& a, const Omega3& b) {
  Omega3 r{};
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) r[k][j] = a[k][j] - b[k][j];
  return r;
}

/// Raised when the refinement disagreement of a finite difference exceeds
/// the requested accuracy, i.e. the grid is too coarse for the field.
struct AccuracyError : std::runtime_error {
  double estimate;
  AccuracyError(const std::string& what, double est) : std::runtime_error(what), estimate(est) {}
};

/// Antisymmetric connection coefficients omega_{xi,kj} sampled over a grid.
struct ConnectionField {
  ParameterGrid grid;
  std::vector<Omega3> data;  // [point * G + xi]
  double error_estimate = 0.0;

  const Omega3& at(size_t point, int xi) const {
    return data[point * static_cast<size_t>(grid.num_params()) + xi];
  }
  Omega3& at(size_t point, int xi) {
    return data[point * static_cast<size_t>(grid.num_params()) + xi];
  }

  double antisymmetry_residual() const {
    double m = 0.0;
    for (const auto& o : data)
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(o[k][j] + o[j][k]));
    return m;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& o : data) m = std::max(m, biquat::max_abs(o));
    return m;
  }

  /// Dual vector Omega_j = eps_knj Omega_kn / 2 of one sample.
  Vec3c dual_at(size_t point, int xi) const {
    const Omega3& o = at(point, xi);
    Vec3c out{};
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int n = 0; n < 3; ++n) out[j] += 0.5 * levi_civita(k, n, j) * o[k][n];
    return out;
  }

  double max_diff(const ConnectionField& other) const {
    if (data.size() != other.data.size())
      throw std::invalid_argument("ConnectionField::max_diff: grids do not match");
    double m = 0.0;
    for (size_t i = 0; i < data.size(); ++i)
      m = std::max(m, biquat::max_abs(data[i] - other.data[i]));
    return m;
  }
};

namespace detail {

// derivative at half the given step plus a Richardson disagreement estimate
template <class F>
Mat mat_diff(F&& f, const std::vector<double>& coords, int axis, double h, double* err) {
  const Mat coarse = central_diff(f, coords, axis, h);
  const Mat fine = central_diff(f, coords, axis, 0.5 * h);
  if (err) *err = std::max(*err, max_abs_diff(fine, coarse) / 3.0);
  return fine;
}

// The exact connection is antisymmetric; finite differences break that at
// O(h^2).  Project back and fold the violation into the error estimate.
inline Omega3 antisymmetrize(const Omega3& o, double* err) {
  Omega3 r{};
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) {
      r[k][j] = 0.5 * (o[k][j] - o[j][k]);
      if (err) *err = std::max(*err, std::abs(o[k][j] + o[j][k]));
    }
  return r;
}

}  // namespace detail

/// omega_{xi,kn} = <d q_k / d Phi_xi>_n^+ using the eigenfunctions of the
/// local triad.  Throws AccuracyError when the refinement disagreement of
/// the derivative exceeds accuracy_tol.
inline ConnectionField connection_from_basis(const TriadField& field, const ParameterGrid& grid,
                                             double accuracy_tol = 1e-5) {
  const int g = grid.num_params();
  ConnectionField out{grid, {}, 0.0};
  out.data.resize(grid.num_points() * static_cast<size_t>(g));
  for (size_t p = 0; p < grid.num_points(); ++p) {
    const auto coords = grid.coords(p);
    const UnitTriad center = field(coords);
    std::array<EigenBundle, 3> bundles;
    for (int n = 0; n < 3; ++n) bundles[n] = eigen_bundle(center.q[n]);
    for (int xi = 0; xi < g; ++xi) {
      Omega3 o{};
      for (int k = 0; k < 3; ++k) {
        const Mat dq = detail::mat_diff(
            [&](const std::vector<double>& c) { return field(c).q[k]; }, coords, xi,
            grid.axes[xi].step, &out.error_estimate);
        for (int n = 0; n < 3; ++n) {
          const cplx i{0.0, 1.0};
          o[k][n] = -i * unit_sandwich(bundles[n], Parity::Plus, dq);
        }
      }
      out.at(p, xi) = detail::antisymmetrize(o, &out.error_estimate);
    }
  }
  if (out.error_estimate > accuracy_tol)
    throw AccuracyError("connection_from_basis: grid too coarse for requested accuracy",
                        out.error_estimate);
  return out;
}

/// omega_xi = (d O / d Phi_xi) O^T for a rotor field, q_k' = O_kj q_j~.
inline ConnectionField connection_from_rotor(const RotorField& field, const ParameterGrid& grid,
                                             double accuracy_tol = 1e-5) {
  const int g = grid.num_params();
  ConnectionField out{grid, {}, 0.0};
  out.data.resize(grid.num_points() * static_cast<size_t>(g));
  for (size_t p = 0; p < grid.num_points(); ++p) {
    const auto coords = grid.coords(p);
    const Mat ot = field(coords).o.transpose();
    for (int xi = 0; xi < g; ++xi) {
      const Mat d_o = detail::mat_diff(
          [&](const std::vector<double>& c) { return field(c).o; }, coords, xi,
          grid.axes[xi].step, &out.error_estimate);
      const Mat omega = d_o * ot;
      Omega3 o{};
      for (int k = 0; k < 3; ++k)
        for (int n = 0; n < 3; ++n) o[k][n] = omega(k, n);
      out.at(p, xi) = detail::antisymmetrize(o, &out.error_estimate);
    }
  }
  if (out.error_estimate > accuracy_tol)
    throw AccuracyError("connection_from_rotor: grid too coarse for requested accuracy",
                        out.error_estimate);
  return out;
}

/// omega_{xi,kn} = <[U^-1 dU/dPhi_xi, q_k~]>_n^+ projected on the constant
/// Pauli bundles, for the triad field q_k = U q_k~ U^-1.
inline ConnectionField connection_from_spinor(const SpinorField& field,
                                              const ParameterGrid& grid,
                                              double accuracy_tol = 1e-5) {
  static const UnitTriad pauli = pauli_triad();
  static const std::array<EigenBundle, 3> bundles{
      eigen_bundle(pauli.q[0]), eigen_bundle(pauli.q[1]), eigen_bundle(pauli.q[2])};
  const int g = grid.num_params();
  ConnectionField out{grid, {}, 0.0};
  out.data.resize(grid.num_points() * static_cast<size_t>(g));
  const cplx i{0.0, 1.0};
  for (size_t p = 0; p < grid.num_points(); ++p) {
    const auto coords = grid.coords(p);
    const Mat u_inv = field(coords).inverse();
    for (int xi = 0; xi < g; ++xi) {
      const Mat du = detail::mat_diff(
          [&](const std::vector<double>& c) { return field(c).u; }, coords, xi,
          grid.axes[xi].step, &out.error_estimate);
      const Mat left_log = u_inv * du;
      Omega3 o{};
      for (int k = 0; k < 3; ++k) {
        const Mat integrand = left_log * pauli.q[k] - pauli.q[k] * left_log;
        for (int n = 0; n < 3; ++n)
          o[k][n] = -i * unit_sandwich(bundles[n], Parity::Plus, integrand);
      }
      out.at(p, xi) = detail::antisymmetrize(o, &out.error_estimate);
    }
  }
  if (out.error_estimate > accuracy_tol)
    throw AccuracyError("connection_from_spinor: grid too coarse for requested accuracy",
                        out.error_estimate);
  return out;
}

/// Connection of the transformed basis q_k = O_kp q_p', given the source
/// connection: omega'_{kj} = O_kp O_jn omega_pn + O_jp dO_kp/dPhi_xi.
/// With a constant rotor only the homogeneous rotation survives.
inline ConnectionField transform_connection(const RotorField& rotor,
                                            const ConnectionField& src) {
  const int g = src.grid.num_params();
  ConnectionField out{src.grid, {}, src.error_estimate};
  out.data.resize(src.data.size());
  for (size_t p = 0; p < src.grid.num_points(); ++p) {
    const auto coords = src.grid.coords(p);
    const Mat o = rotor(coords).o;
    for (int xi = 0; xi < g; ++xi) {
      const Mat d_o = detail::mat_diff(
          [&](const std::vector<double>& c) { return rotor(c).o; }, coords, xi,
          src.grid.axes[xi].step, &out.error_estimate);
      const Omega3& w = src.at(p, xi);
      Omega3 r{};
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) {
          cplx acc{};
          for (int pp = 0; pp < 3; ++pp) {
            for (int n = 0; n < 3; ++n) acc += o(k, pp) * o(j, n) * w[pp][n];
            acc += o(j, pp) * d_o(k, pp);
          }
          r[k][j] = acc;
        }
      out.at(p, xi) = detail::antisymmetrize(r, &out.error_estimate);
    }
  }
  return out;
}

/// Pointwise connection as a callable, Omega_a(coords) for parameter a.
using ConnectionFn = std::function<Omega3(const std::vector<double>&, int)>;

/// Metric connection induced by a rotor field, evaluated anywhere.
inline ConnectionFn metric_connection(const RotorField& field, double h) {
  return [field, h](const std::vector<double>& coords, int a) {
    const Mat ot = field(coords).o.transpose();
    const Mat d_o = central_diff([&](const std::vector<double>& c) { return field(c).o; },
                                coords, a, h);
    const Mat omega = d_o * ot;
    Omega3 o{};
    for (int k = 0; k < 3; ++k)
      for (int n = 0; n < 3; ++n) o[k][n] = omega(k, n);
    return o;
  };
}

/// Q-curvature samples r_{knab} over a grid.
struct CurvatureField {
  ParameterGrid grid;
  std::vector<Omega3> data;  // [point * G * G + a * G + b], components [k][n]

  const Omega3& at(size_t point, int a, int b) const {
    const auto g = static_cast<size_t>(grid.num_params());
    return data[point * g * g + static_cast<size_t>(a) * g + b];
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& o : data) m = std::max(m, biquat::max_abs(o));
    return m;
  }
};

/// r_ab = d_a Omega_b - d_b Omega_a - [Omega_a, Omega_b], the placement that
/// vanishes identically for metric connections (Omega_a = d_a O O^T).
inline CurvatureField curvature(const ConnectionFn& omega, const ParameterGrid& grid) {
  const int g = grid.num_params();
  CurvatureField out{grid, {}};
  out.data.resize(grid.num_points() * static_cast<size_t>(g) * g);
  auto omega_mat = [&omega](const std::vector<double>& c, int a) {
    const Omega3 o = omega(c, a);
    Mat m(3);
    for (int k = 0; k < 3; ++k)
      for (int n = 0; n < 3; ++n) m(k, n) = o[k][n];
    return m;
  };
  for (size_t p = 0; p < grid.num_points(); ++p) {
    const auto coords = grid.coords(p);
    std::vector<Mat> om(g);
    for (int a = 0; a < g; ++a) om[a] = omega_mat(coords, a);
    for (int a = 0; a < g; ++a)
      for (int b = 0; b < g; ++b) {
        const Mat da_ob = central_diff(
            [&](const std::vector<double>& c) { return omega_mat(c, b); }, coords, a,
            grid.axes[a].step);
        const Mat db_oa = central_diff(
            [&](const std::vector<double>& c) { return omega_mat(c, a); }, coords, b,
            grid.axes[b].step);
        const Mat r = da_ob - db_oa - (om[a] * om[b] - om[b] * om[a]);
        Omega3 rc{};
        for (int k = 0; k < 3; ++k)
          for (int n = 0; n < 3; ++n) rc[k][n] = r(k, n);
        out.data[p * g * g + static_cast<size_t>(a) * g + b] = rc;
      }
  }
  return out;
}

struct QSpaceReport {
  bool torsion_present = false;
  bool curvature_present = false;
  bool metric_compatible = false;
  double connection_magnitude = 0.0;
  double curvature_magnitude = 0.0;
};

/// Qualitative predicates: a nonzero connection carries torsion, vanishing
/// curvature marks the metric family.
inline QSpaceReport qspace_predicates(const ConnectionField& conn, const CurvatureField& curv,
                                      double tol = 1e-5) {
  QSpaceReport rep;
  rep.connection_magnitude = conn.max_abs();
  rep.curvature_magnitude = curv.max_abs();
  rep.torsion_present = rep.connection_magnitude > tol;
  rep.curvature_present = rep.curvature_magnitude > tol;
  rep.metric_compatible = !rep.curvature_present;
  return rep;
}

}  // namespace biquat
