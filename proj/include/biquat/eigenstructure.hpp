#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "biquat/matrix.hpp"
#include "biquat/transform.hpp"
#include "biquat/triad.hpp"

namespace biquat {

enum class Parity { Plus, Minus };

inline double parity_sign(Parity p) { return p == Parity::Plus ? 1.0 : -1.0; }

/// Eigenfunctions of one vector unit: columns psi with q psi = +-i psi and
/// rows phi with phi q = +-i phi, normalized so that phi^p psi^p = 1.
///
/// The residual scaling freedom is pinned by a fixed gauge: psi has unit
/// Euclidean norm and its last nonzero component is real positive, phi is
/// the dual row.  This gauge reproduces the closed-form scalar invariants
/// (sigma_12^+ = (1-i)/2 on the Pauli triad) and pins the combination
/// coefficients relating the eigenfunctions of q3 = q1 q2 to those of
/// q1, q2 (the sqrt(+-i) constants on the standard triad).
struct EigenBundle {
  Spinor psi_plus{}, psi_minus{};
  Cospinor phi_plus{}, phi_minus{};

  const Spinor& psi(Parity p) const { return p == Parity::Plus ? psi_plus : psi_minus; }
  const Cospinor& phi(Parity p) const { return p == Parity::Plus ? phi_plus : phi_minus; }
};

namespace detail {

inline void canonicalize(Spinor& psi, Cospinor& phi) {
  const double n = std::sqrt(std::norm(psi[0]) + std::norm(psi[1]));
  if (n < 1e-300) throw std::domain_error("eigen_bundle: degenerate eigenvector");
  psi = {psi[0] / n, psi[1] / n};
  const int last = std::abs(psi[1]) > 1e-12 ? 1 : 0;
  const cplx phase = psi[last] / std::abs(psi[last]);
  psi = {psi[0] / phase, psi[1] / phase};
  const cplx prod = phi[0] * psi[0] + phi[1] * psi[1];
  if (std::abs(prod) < 1e-300) throw std::domain_error("eigen_bundle: phi psi = 0");
  phi = {phi[0] / prod, phi[1] / prod};
}

inline Spinor null_column(const Mat& z) {
  const Spinor v1{z(0, 1), -z(0, 0)}, v2{z(1, 1), -z(1, 0)};
  const double n1 = std::norm(v1[0]) + std::norm(v1[1]);
  const double n2 = std::norm(v2[0]) + std::norm(v2[1]);
  return n1 >= n2 ? v1 : v2;
}

inline Cospinor null_row(const Mat& z) {
  const Cospinor w1{z(1, 0), -z(0, 0)}, w2{z(1, 1), -z(0, 1)};
  const double n1 = std::norm(w1[0]) + std::norm(w1[1]);
  const double n2 = std::norm(w2[0]) + std::norm(w2[1]);
  return n1 >= n2 ? w1 : w2;
}

}  // namespace detail

/// Eigenfunctions and dual rows of a 2x2 vector unit.  Uses the closed form
/// in the entries of i*q away from its degeneracies (|T|, |b|, |c| <= 1e-8)
/// and a direct nullspace decomposition otherwise; both land in the same
/// gauge.
inline EigenBundle eigen_bundle(const Mat& q, double tol = 1e-8) {
  if (q.dim() != 2) throw std::invalid_argument("eigen_bundle: 2x2 unit required");
  if (std::abs(q.trace()) > tol || std::abs(q.det() - 1.0) > tol)
    throw std::invalid_argument("eigen_bundle: not a valid Q-unit (need trace 0, det 1)");

  const cplx i{0.0, 1.0};
  const Mat m = i * q;
  const cplx a = m(0, 0), b = m(0, 1), c = m(1, 0);
  const cplx t = std::sqrt(a * a + b * c);

  EigenBundle out;
  if (std::abs(t) > 1e-8 && std::abs(b) > 1e-8 && std::abs(c) > 1e-8) {
    // q psi = +i psi corresponds to M psi = -T psi, M = i q.
    out.psi_plus = {1.0, -(a + t) / b};
    out.psi_minus = {1.0, (t - a) / b};
    out.phi_plus = {1.0, -(a + t) / c};
    out.phi_minus = {1.0, (t - a) / c};
  } else {
    const Mat z_plus = q - i * Mat::identity(2);
    const Mat z_minus = q + i * Mat::identity(2);
    out.psi_plus = detail::null_column(z_plus);
    out.psi_minus = detail::null_column(z_minus);
    out.phi_plus = detail::null_row(z_plus);
    out.phi_minus = detail::null_row(z_minus);
  }
  detail::canonicalize(out.psi_plus, out.phi_plus);
  detail::canonicalize(out.psi_minus, out.phi_minus);
  return out;
}

/// C^+- = psi^+- phi^+-; idempotent with det 0, trace 1.
inline Mat projector(const EigenBundle& b, Parity p) { return outer(b.psi(p), b.phi(p)); }

/// The same projector straight from the unit: psi^+- phi^+- = (1 -+ i q)/2
/// (the sign follows from q psi^+- = +-i psi^+-).
inline Mat projector_from_unit(const Mat& q, Parity p) {
  const cplx i{0.0, 1.0};
  return 0.5 * (Mat::identity(2) - parity_sign(p) * i * q);
}

/// Inverts the projector back to the unit, q = +-i (2 C^+- - 1).
inline Mat reconstruct_unit(const Mat& c, Parity p) {
  const cplx i{0.0, 1.0};
  return parity_sign(p) * i * (2.0 * c - Mat::identity(2));
}

/// phi^p q_x psi^p sandwich used by projections and the connection.
inline cplx unit_sandwich(const EigenBundle& b, Parity p, const Mat& x) {
  return dot(mul(b.phi(p), x), b.psi(p));
}

/// Projection of a Q-vector with components a_k in the given basis onto the
/// direction whose eigen bundle is supplied: -+i a_k phi q_k psi.
inline cplx project_qvector(const Vec3& components, const UnitTriad& basis,
                            const EigenBundle& target, Parity p = Parity::Plus) {
  cplx acc{};
  for (int k = 0; k < 3; ++k) acc += components[k] * unit_sandwich(target, p, basis.q[k]);
  const cplx i{0.0, 1.0};
  return -parity_sign(p) * i * acc;
}

/// Transports a bundle along a spinor map: psi' = U psi, phi' = phi U^-1.
/// Scalar products phi psi are exactly invariant under this action.
inline EigenBundle transform_bundle(const EigenBundle& b, const SpinorMap& u) {
  const Mat inv = u.inverse();
  return {mul(u.u, b.psi_plus), mul(u.u, b.psi_minus), mul(b.phi_plus, inv),
          mul(b.phi_minus, inv)};
}

/// Scalar invariant sigma: phi of one unit contracted with psi of another.
inline cplx invariant_sigma(const EigenBundle& from_k, const EigenBundle& from_n,
                            Parity p_phi, Parity p_psi) {
  return dot(from_k.phi(p_phi), from_n.psi(p_psi));
}

inline cplx invariant_sigma(const EigenBundle& from_k, const EigenBundle& from_n,
                            Parity p = Parity::Plus) {
  return invariant_sigma(from_k, from_n, p, p);
}

struct SigmaInvariant {
  int k, n;
  Parity p_phi, p_psi;
  cplx value;
};

/// All 24 scalar products from eigenfunction pairs of distinct units of one
/// triad: 6 ordered unit pairs times 4 parity pairs.
inline std::vector<SigmaInvariant> enumerate_invariants(const std::array<EigenBundle, 3>& b) {
  std::vector<SigmaInvariant> out;
  for (int k = 0; k < 3; ++k)
    for (int n = 0; n < 3; ++n) {
      if (k == n) continue;
      for (Parity pf : {Parity::Plus, Parity::Minus})
        for (Parity pp : {Parity::Plus, Parity::Minus})
          out.push_back({k, n, pf, pp, invariant_sigma(b[k], b[n], pf, pp)});
    }
  return out;
}

/// Linear-combination coefficients expressing each eigenfunction of
/// q3 = q1 q2 through the eigenfunctions of q1 and q2 in the canonical
/// gauge.  On the standard Pauli triad these come out as the sqrt(+-i)
/// constants: psi3+ = sqrt(i) psi1+ + sqrt(-i) psi2+ and so on.
struct ThirdEigenCoefficients {
  std::array<cplx, 2> psi_plus, psi_minus;  // coefficients on units 1, 2
  std::array<cplx, 2> phi_plus, phi_minus;
};

inline ThirdEigenCoefficients third_eigenfunction_coefficients(const Mat& q1, const Mat& q2,
                                                               double tol = 1e-8) {
  const UnitTriad t{{q1, q2, q1 * q2}};
  if (!verify_triad(t).ok(tol))
    throw std::domain_error("third_eigenfunctions: q1, q2 do not satisfy the triad rule");
  const EigenBundle c1 = eigen_bundle(q1), c2 = eigen_bundle(q2), c3 = eigen_bundle(q1 * q2);
  auto solve_col = [](const Spinor& v1, const Spinor& v2, const Spinor& rhs) {
    const cplx det = v1[0] * v2[1] - v1[1] * v2[0];
    if (std::abs(det) < 1e-12)
      throw std::domain_error("third_eigenfunctions: degenerate eigenfunction pair");
    return std::array<cplx, 2>{(rhs[0] * v2[1] - rhs[1] * v2[0]) / det,
                               (v1[0] * rhs[1] - v1[1] * rhs[0]) / det};
  };
  auto solve_row = [&solve_col](const Cospinor& v1, const Cospinor& v2, const Cospinor& rhs) {
    return solve_col(Spinor{v1[0], v1[1]}, Spinor{v2[0], v2[1]}, Spinor{rhs[0], rhs[1]});
  };
  ThirdEigenCoefficients out;
  out.psi_plus = solve_col(c1.psi_plus, c2.psi_plus, c3.psi_plus);
  out.psi_minus = solve_col(c1.psi_minus, c2.psi_minus, c3.psi_minus);
  out.phi_plus = solve_row(c1.phi_plus, c2.phi_plus, c3.phi_plus);
  out.phi_minus = solve_row(c1.phi_minus, c2.phi_minus, c3.phi_minus);
  return out;
}

/// Eigenfunctions of q3 = q1 q2 as linear combinations of the supplied
/// bundles, using the canonical-gauge coefficients above; the output is
/// linear in the inputs, and equals eigen_bundle(q1 q2) when the inputs are
/// the canonical bundles of q1 and q2.
inline EigenBundle third_eigenfunctions(const EigenBundle& b1, const EigenBundle& b2,
                                        const Mat& q1, const Mat& q2, double tol = 1e-8) {
  const ThirdEigenCoefficients c = third_eigenfunction_coefficients(q1, q2, tol);
  auto comb_col = [](const std::array<cplx, 2>& cc, const Spinor& v1, const Spinor& v2) {
    return Spinor{cc[0] * v1[0] + cc[1] * v2[0], cc[0] * v1[1] + cc[1] * v2[1]};
  };
  auto comb_row = [](const std::array<cplx, 2>& cc, const Cospinor& v1, const Cospinor& v2) {
    return Cospinor{cc[0] * v1[0] + cc[1] * v2[0], cc[0] * v1[1] + cc[1] * v2[1]};
  };
  EigenBundle out;
  out.psi_plus = comb_col(c.psi_plus, b1.psi_plus, b2.psi_plus);
  out.psi_minus = comb_col(c.psi_minus, b1.psi_minus, b2.psi_minus);
  out.phi_plus = comb_row(c.phi_plus, b1.phi_plus, b2.phi_plus);
  out.phi_minus = comb_row(c.phi_minus, b1.phi_minus, b2.phi_minus);
  return out;
}

}  // namespace biquat
