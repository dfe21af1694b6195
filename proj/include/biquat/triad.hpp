#pragma once

#include <cmath>
#include <stdexcept>

#include "biquat/matrix.hpp"
#include "biquat/quaternion.hpp"
#include "biquat/random.hpp"

namespace biquat {

/// Matrix realization of the three vector units q_1, q_2, q_3, each with
/// det 1 and trace 0, obeying q_j q_k = -delta_jk + eps_jkn q_n.
struct UnitTriad {
  std::array<Mat, 3> q;

  int dim() const { return q[0].dim(); }
  Mat unit() const { return Mat::identity(dim()); }
};

/// Deviations of a candidate triad from the multiplication rule and from
/// det 1 / trace 0.
struct TriadReport {
  double max_rule_deviation = 0.0;
  double max_det_deviation = 0.0;
  double max_trace_deviation = 0.0;

  double worst() const {
    return std::max(max_rule_deviation, std::max(max_det_deviation, max_trace_deviation));
  }
  bool ok(double tol = 1e-10) const { return worst() <= tol; }
};

/// Checks all nine products q_j q_k against -delta_jk + eps_jkn q_n.
inline TriadReport verify_triad(const UnitTriad& t) {
  TriadReport rep;
  const Mat id = t.unit();
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      Mat expected = -kronecker(j, k) * id;
      for (int n = 0; n < 3; ++n) {
        const double e = levi_civita(j, k, n);
        if (e != 0.0) expected += e * t.q[n];
      }
      rep.max_rule_deviation =
          std::max(rep.max_rule_deviation, max_abs_diff(t.q[j] * t.q[k], expected));
    }
  for (int k = 0; k < 3; ++k) {
    rep.max_det_deviation = std::max(rep.max_det_deviation, std::abs(t.q[k].det() - 1.0));
    rep.max_trace_deviation = std::max(rep.max_trace_deviation, std::abs(t.q[k].trace()));
  }
  return rep;
}

/// The standard 2x2 representation q_k = -i sigma_k.
inline UnitTriad pauli_triad() {
  const cplx i{0.0, 1.0};
  Mat q1(2), q2(2), q3(2);
  q1(0, 1) = -i;
  q1(1, 0) = -i;
  q2(0, 1) = -1.0;
  q2(1, 0) = 1.0;
  q3(0, 0) = -i;
  q3(1, 1) = i;
  return {{q1, q2, q3}};
}

/// Two traceless 2x2 seeds for a triad; needs Tr(AB) = 0 as well.
struct TracelessPair {
  Mat a{2};
  Mat b{2};
};

/// Builds a triad q1 = A/sqrt(det A), q2 = B/sqrt(det B), q3 = q1 q2 from a
/// traceless pair.  Square roots are principal, which fixes the overall sign
/// of each unit.
inline UnitTriad triad_from_traceless(const TracelessPair& p, double tol = 1e-10) {
  const double scale = std::max(1.0, std::max(p.a.max_abs(), p.b.max_abs()));
  if (std::abs(p.a.trace()) > tol * scale || std::abs(p.b.trace()) > tol * scale)
    throw std::invalid_argument("triad_from_traceless: seed matrices must be traceless");
  const cplx det_a = p.a.det(), det_b = p.b.det();
  if (std::abs(det_a) < tol || std::abs(det_b) < tol)
    throw std::domain_error("triad_from_traceless: degenerate seed matrix (det = 0)");
  if (std::abs((p.a * p.b).trace()) > tol * scale * scale)
    throw std::domain_error("triad_from_traceless: incompatible pair, Tr(AB) != 0");
  const Mat q1 = p.a / std::sqrt(det_a);
  const Mat q2 = p.b / std::sqrt(det_b);
  return {{q1, q2, q1 * q2}};
}

/// Replaces each complex entry x + iy by the real block (x y; -y x),
/// realizing i as (0 1; -1 0).  A ring homomorphism, so triads stay triads.
inline Mat rank_double(const Mat& m) {
  const int n = m.dim();
  Mat r(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x = m(i, j).real(), y = m(i, j).imag();
      r(2 * i, 2 * j) = x;
      r(2 * i, 2 * j + 1) = y;
      r(2 * i + 1, 2 * j) = -y;
      r(2 * i + 1, 2 * j + 1) = x;
    }
  return r;
}

inline UnitTriad rank_double(const UnitTriad& t) {
  return {{rank_double(t.q[0]), rank_double(t.q[1]), rank_double(t.q[2])}};
}

/// Random traceless pair with entries in the unit disc, |det| >= 0.1 by
/// rejection, and B projected against A in the trace inner product so that
/// Tr(AB) = 0 exactly.
inline TracelessPair sample_traceless_pair(Rng& rng) {
  auto disc = [&rng] {
    while (true) {
      const double x = rng.uniform(-1.0, 1.0), y = rng.uniform(-1.0, 1.0);
      if (x * x + y * y <= 1.0) return cplx{x, y};
    }
  };
  auto traceless = [&](Mat& m) {
    m(0, 0) = disc();
    m(0, 1) = disc();
    m(1, 0) = disc();
    m(1, 1) = -m(0, 0);
  };
  while (true) {
    TracelessPair p;
    traceless(p.a);
    traceless(p.b);
    const cplx tr_aa = (p.a * p.a).trace();
    if (std::abs(p.a.det()) < 0.1 || std::abs(tr_aa) < 0.1) continue;
    const cplx coeff = (p.a * p.b).trace() / tr_aa;
    p.b = p.b - coeff * p.a;
    if (std::abs(p.b.det()) < 0.1) continue;
    return p;
  }
}

}  // namespace biquat
