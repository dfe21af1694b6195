#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "biquat/connection.hpp"
#include "biquat/grid.hpp"
#include "biquat/matrix.hpp"
#include "biquat/triad.hpp"

namespace biquat {

using VectorField4 = std::function<Vec3(const Vec3&, double)>;
using VectorField3 = std::function<Vec3(const Vec3&)>;
using SpinorField3 = std::function<Spinor(const Vec3&)>;

/// Electromagnetic field pair packed as H = (B_n + i E_n) q_n.
struct EMField {
  VectorField4 E, B;
};

/// Evaluation lattice; fields are analytic callables, so every listed point
/// supports a centered stencil.
struct SpacetimeGrid {
  Vec3 origin{};
  double t0 = 0.0;
  double step = 1e-3;
  std::array<int, 3> nx{5, 5, 5};
  int nt = 5;
};

inline Mat pack_h(const EMField& em, const Vec3& x, double t) {
  static const UnitTriad pauli = pauli_triad();
  const Vec3 e = em.E(x, t), b = em.B(x, t);
  Mat h(2);
  for (int n = 0; n < 3; ++n) h += cplx{b[n], e[n]} * pauli.q[n];
  return h;
}

/// Recovers (B, E) from a packed field matrix; exact inverse of pack_h.
inline std::pair<Vec3, Vec3> unpack_h(const Mat& h) {
  static const UnitTriad pauli = pauli_triad();
  Vec3 b{}, e{};
  for (int n = 0; n < 3; ++n) {
    const cplx v = -0.5 * (h * pauli.q[n]).trace();
    b[n] = v.real();
    e[n] = v.imag();
  }
  return {b, e};
}

/// One evaluation of the analyticity condition (i d_t - q_k d_k) H and its
/// scalar/vector, real/imaginary decomposition into the four named field
/// residuals.
struct FueterSample {
  Mat residual{2};
  double div_E = 0.0, div_B = 0.0;
  Vec3 rot_E_minus_dtB{}, rot_B_plus_dtE{};
};

inline FueterSample fueter_sample(const EMField& em, const Vec3& x, double t, double h) {
  static const UnitTriad pauli = pauli_triad();
  const cplx i{0.0, 1.0};
  auto h_at = [&em](const Vec3& xx, double tt) { return pack_h(em, xx, tt); };
  Mat res = i * ((1.0 / (2.0 * h)) * (h_at(x, t + h) - h_at(x, t - h)));
  for (int k = 0; k < 3; ++k) {
    Vec3 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    res = res - pauli.q[k] * ((1.0 / (2.0 * h)) * (h_at(xp, t) - h_at(xm, t)));
  }
  FueterSample s;
  s.residual = res;
  const cplx scal = 0.5 * res.trace();
  s.div_B = scal.real();
  s.div_E = scal.imag();
  for (int n = 0; n < 3; ++n) {
    const cplx v = -0.5 * (res * pauli.q[n]).trace();
    s.rot_B_plus_dtE[n] = -v.real();
    s.rot_E_minus_dtB[n] = -v.imag();
  }
  return s;
}

struct FueterReport {
  double max_residual = 0.0;
  double max_div_E = 0.0, max_div_B = 0.0;
  double max_rot_E_minus_dtB = 0.0, max_rot_B_plus_dtE = 0.0;
};

inline FueterReport fueter_residual(const EMField& em, const SpacetimeGrid& g) {
  FueterReport rep;
  for (int it = 0; it < g.nt; ++it)
    for (int ix = 0; ix < g.nx[0]; ++ix)
      for (int iy = 0; iy < g.nx[1]; ++iy)
        for (int iz = 0; iz < g.nx[2]; ++iz) {
          const Vec3 x{g.origin[0] + ix * g.step, g.origin[1] + iy * g.step,
                       g.origin[2] + iz * g.step};
          const double t = g.t0 + it * g.step;
          const FueterSample s = fueter_sample(em, x, t, g.step);
          rep.max_residual = std::max(rep.max_residual, s.residual.max_abs());
          rep.max_div_E = std::max(rep.max_div_E, std::abs(s.div_E));
          rep.max_div_B = std::max(rep.max_div_B, std::abs(s.div_B));
          for (int n = 0; n < 3; ++n) {
            rep.max_rot_E_minus_dtB =
                std::max(rep.max_rot_E_minus_dtB, std::abs(s.rot_E_minus_dtB[n]));
            rep.max_rot_B_plus_dtE =
                std::max(rep.max_rot_B_plus_dtE, std::abs(s.rot_B_plus_dtE[n]));
          }
        }
  return rep;
}

struct MaxwellEquivalenceReport {
  double max_matching_gap = 0.0;  // Fueter decomposition vs direct vector calculus
  FueterReport fueter;
};

/// Computes the four field residuals independently by vector calculus on
/// the same stencils and matches them against the Fueter decomposition
/// component by component.
inline MaxwellEquivalenceReport maxwell_equivalence_report(const EMField& em,
                                                           const SpacetimeGrid& g) {
  MaxwellEquivalenceReport rep;
  const double h = g.step;
  auto diff_t = [&](const VectorField4& f, const Vec3& x, double t) {
    return (1.0 / (2.0 * h)) * (f(x, t + h) - f(x, t - h));
  };
  auto diff_x = [&](const VectorField4& f, const Vec3& x, double t, int k) {
    Vec3 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    return (1.0 / (2.0 * h)) * (f(xp, t) - f(xm, t));
  };
  for (int it = 0; it < g.nt; ++it)
    for (int ix = 0; ix < g.nx[0]; ++ix)
      for (int iy = 0; iy < g.nx[1]; ++iy)
        for (int iz = 0; iz < g.nx[2]; ++iz) {
          const Vec3 x{g.origin[0] + ix * g.step, g.origin[1] + iy * g.step,
                       g.origin[2] + iz * g.step};
          const double t = g.t0 + it * g.step;

          std::array<Vec3, 3> de{}, db{};
          for (int k = 0; k < 3; ++k) {
            de[k] = diff_x(em.E, x, t, k);
            db[k] = diff_x(em.B, x, t, k);
          }
          const Vec3 dte = diff_t(em.E, x, t), dtb = diff_t(em.B, x, t);
          const double div_e = de[0][0] + de[1][1] + de[2][2];
          const double div_b = db[0][0] + db[1][1] + db[2][2];
          Vec3 rot_e{}, rot_b{};
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
              for (int m = 0; m < 3; ++m) {
                rot_e[j] += levi_civita(j, k, m) * de[k][m];
                rot_b[j] += levi_civita(j, k, m) * db[k][m];
              }

          const FueterSample s = fueter_sample(em, x, t, h);
          double gap = std::max(std::abs(s.div_E - div_e), std::abs(s.div_B - div_b));
          for (int n = 0; n < 3; ++n) {
            gap = std::max(gap, std::abs(s.rot_E_minus_dtB[n] - (rot_e[n] - dtb[n])));
            gap = std::max(gap, std::abs(s.rot_B_plus_dtE[n] - (rot_b[n] + dte[n])));
          }
          rep.max_matching_gap = std::max(rep.max_matching_gap, gap);
          rep.fueter.max_residual = std::max(rep.fueter.max_residual, s.residual.max_abs());
          rep.fueter.max_div_E = std::max(rep.fueter.max_div_E, std::abs(s.div_E));
          rep.fueter.max_div_B = std::max(rep.fueter.max_div_B, std::abs(s.div_B));
          for (int n = 0; n < 3; ++n) {
            rep.fueter.max_rot_E_minus_dtB =
                std::max(rep.fueter.max_rot_E_minus_dtB, std::abs(s.rot_E_minus_dtB[n]));
            rep.fueter.max_rot_B_plus_dtE =
                std::max(rep.fueter.max_rot_B_plus_dtE, std::abs(s.rot_B_plus_dtE[n]));
          }
        }
  return rep;
}

/// Charged quantum particle on a spatial lattice with vector potential A
/// and a smooth test spinor.
struct QuantumSetup {
  double charge = 1.0, mass = 1.0, hbar = 1.0, c_light = 1.0;
  VectorField3 potential;  // A_k(x)
  SpinorField3 wavefunction;
};

struct SpatialGrid {
  Vec3 origin{};
  double step = 1e-3;
  std::array<int, 3> n{5, 5, 5};
};

struct PauliReport {
  double max_operator_gap = 0.0;  // |H_Q psi - H_Pauli psi| pointwise max
  cplx extracted_coefficient{};   // fitted spin-term coefficient
  double expected_coefficient = 0.0;  // e hbar / (2 m c)
  double coefficient_gap = 0.0;
};

/// Applies H = -(1/2m) P_k P_m q_k q_m and the Pauli Hamiltonian
/// (1/2m)(p - eA/c)^2 - (e hbar/2mc) B.sigma to the test spinor on shared
/// stencils, reports the pointwise gap, and fits the spin coefficient.
inline PauliReport pauli_check(const QuantumSetup& setup, const SpatialGrid& g) {
  for (int axis = 0; axis < 3; ++axis)
    if (g.n[axis] < 5)
      throw std::invalid_argument("pauli_check: at least 5 points per axis required");
  static const UnitTriad pauli = pauli_triad();
  const cplx i{0.0, 1.0};
  const double h = g.step;
  const double ec = setup.charge / setup.c_light;

  using CSpinorField = std::function<Spinor(const Vec3&)>;
  auto momentum = [&, ec](const CSpinorField& f, int k) -> CSpinorField {
    return [&, f, k, ec](const Vec3& x) {
      Vec3 xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      const Spinor fp = f(xp), fm = f(xm), fc = f(x);
      const cplx dcoef = -i * setup.hbar / (2.0 * h);
      const cplx acoef = -ec * setup.potential(x)[k];
      return Spinor{dcoef * (fp[0] - fm[0]) + acoef * fc[0],
                    dcoef * (fp[1] - fm[1]) + acoef * fc[1]};
    };
  };

  const CSpinorField psi = [&](const Vec3& x) { return setup.wavefunction(x); };
  std::array<CSpinorField, 3> p_psi;
  for (int m = 0; m < 3; ++m) p_psi[m] = momentum(psi, m);

  PauliReport rep;
  rep.expected_coefficient = setup.charge * setup.hbar / (2.0 * setup.mass * setup.c_light);

  cplx fit_num{};
  double fit_den = 0.0;

  for (int ix = 0; ix < g.n[0]; ++ix)
    for (int iy = 0; iy < g.n[1]; ++iy)
      for (int iz = 0; iz < g.n[2]; ++iz) {
        const Vec3 x{g.origin[0] + ix * h, g.origin[1] + iy * h, g.origin[2] + iz * h};

        // quaternionic route, with the full double sum over k, m
        Spinor hq{0.0, 0.0};
        Spinor laplace_part{0.0, 0.0};
        for (int k = 0; k < 3; ++k)
          for (int m = 0; m < 3; ++m) {
            const Spinor pkpm = momentum(p_psi[m], k)(x);
            const Mat qq = pauli.q[k] * pauli.q[m];
            const Spinor term = mul(qq, pkpm);
            hq[0] += term[0];
            hq[1] += term[1];
            if (k == m) {
              laplace_part[0] += pkpm[0];
              laplace_part[1] += pkpm[1];
            }
          }
        const double f = -1.0 / (2.0 * setup.mass);
        hq = {f * hq[0], f * hq[1]};

        // Pauli route with B from the same centered stencil
        Vec3 b{};
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            for (int m = 0; m < 3; ++m) {
              if (levi_civita(j, k, m) == 0.0) continue;
              Vec3 xp = x, xm = x;
              xp[k] += h;
              xm[k] -= h;
              b[j] += levi_civita(j, k, m) * (setup.potential(xp)[m] - setup.potential(xm)[m]) /
                      (2.0 * h);
            }
        Mat b_sigma(2);
        for (int j = 0; j < 3; ++j) b_sigma += b[j] * (i * pauli.q[j]);  // sigma_j = i q_j
        const Spinor psi_c = psi(x);
        const Spinor spin_term = mul(b_sigma, psi_c);
        const double kin = 1.0 / (2.0 * setup.mass);
        Spinor hp{kin * laplace_part[0] - rep.expected_coefficient * spin_term[0],
                  kin * laplace_part[1] - rep.expected_coefficient * spin_term[1]};

        rep.max_operator_gap = std::max(
            rep.max_operator_gap,
            std::max(std::abs(hq[0] - hp[0]), std::abs(hq[1] - hp[1])));

        // remainder of the quaternionic route beyond the kinetic part, fit
        // against -(B.sigma) psi
        const Spinor remainder{hq[0] - kin * laplace_part[0], hq[1] - kin * laplace_part[1]};
        const Spinor target{-spin_term[0], -spin_term[1]};
        fit_num += std::conj(target[0]) * remainder[0] + std::conj(target[1]) * remainder[1];
        fit_den += std::norm(target[0]) + std::norm(target[1]);
      }

  rep.extracted_coefficient = fit_den > 0.0 ? fit_num / fit_den : cplx{};
  rep.coefficient_gap = std::abs(rep.extracted_coefficient - rep.expected_coefficient);
  return rep;
}

struct YangMillsReport {
  double two_way_gap = 0.0;       // F from curvature vs F from the potential
  double printed_order_gap = 0.0; // same check with the derivative terms swapped
  double max_strength = 0.0;
  bool derivative_order_da_first = false;
};

/// Potential A_ka = eps_kmn Omega_amn / 2 and strength F_kab = eps_kmn
/// r_mnab / 2, checked against the Yang-Mills combination of A.  The report
/// states numerically which derivative ordering of the printed formula
/// makes the identity hold.
inline YangMillsReport ym_strength_check(const ConnectionFn& omega, const ParameterGrid& grid) {
  if (grid.num_params() != 3)
    throw std::invalid_argument("ym_strength_check: three spatial parameters required");
  auto potential = [&omega](const std::vector<double>& c, int a) {
    const Omega3 o = omega(c, a);
    Vec3c out{};
    for (int k = 0; k < 3; ++k)
      for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) out[k] += 0.5 * levi_civita(k, m, n) * o[m][n];
    return out;
  };

  const CurvatureField r = curvature(omega, grid);
  YangMillsReport rep;
  for (size_t p = 0; p < grid.num_points(); ++p) {
    const auto coords = grid.coords(p);
    std::array<Vec3c, 3> a_here;
    for (int a = 0; a < 3; ++a) a_here[a] = potential(coords, a);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        // F from curvature
        Vec3c f_curv{};
        const Omega3& rc = r.at(p, a, b);
        for (int k = 0; k < 3; ++k)
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) f_curv[k] += 0.5 * levi_civita(k, m, n) * rc[m][n];

        // F from the potential
        auto comp = [&potential](int idx, int which) {
          return [&potential, idx, which](const std::vector<double>& c) {
            return potential(c, which)[idx];
          };
        };
        Vec3c da_ab{}, db_aa{};
        for (int k = 0; k < 3; ++k) {
          da_ab[k] = central_diff(comp(k, b), coords, a, grid.axes[a].step);
          db_aa[k] = central_diff(comp(k, a), coords, b, grid.axes[b].step);
        }
        for (int k = 0; k < 3; ++k) {
          cplx quad{};
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n)
              quad += levi_civita(k, m, n) * a_here[a][m] * a_here[b][n];
          const cplx f_ym = da_ab[k] - db_aa[k] + quad;
          const cplx f_printed = db_aa[k] - da_ab[k] + quad;
          rep.two_way_gap = std::max(rep.two_way_gap, std::abs(f_curv[k] - f_ym));
          rep.printed_order_gap =
              std::max(rep.printed_order_gap, std::abs(f_curv[k] - f_printed));
          rep.max_strength = std::max(rep.max_strength, std::abs(f_curv[k]));
        }
      }
  }
  rep.derivative_order_da_first = rep.two_way_gap <= rep.printed_order_gap;
  return rep;
}

}  // namespace biquat
