#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "biquat/matrix.hpp"
#include "biquat/triad.hpp"

namespace biquat {

/// Unimodular 2x2 map acting on triads by conjugation q -> U q U^-1.
/// SL(2,C) in general, SU(2) when unitary.
struct SpinorMap {
  Mat u{2};

  explicit SpinorMap(const Mat& m, double tol = 1e-8) : u(m) {
    if (m.dim() != 2) throw std::invalid_argument("SpinorMap: 2x2 matrix required");
    if (std::abs(m.det() - 1.0) > tol)
      throw std::invalid_argument("SpinorMap: det U must be 1 (got deviation " +
                                  std::to_string(std::abs(m.det() - 1.0)) + ")");
  }

  /// Normalizes an invertible 2x2 matrix onto the unimodular slice.
  static SpinorMap normalized(const Mat& m, double tol = 1e-8) {
    const cplx d = m.det();
    if (std::abs(d) < 1e-14) throw std::domain_error("SpinorMap: non-invertible matrix");
    return SpinorMap(m / std::sqrt(d), tol);
  }

  Mat inverse() const {
    // adjugate; det is 1 by construction
    Mat r(2);
    r(0, 0) = u(1, 1);
    r(0, 1) = -u(0, 1);
    r(1, 0) = -u(1, 0);
    r(1, 1) = u(0, 0);
    return r;
  }
};

enum class RotorKind { RealRotation, Hyperbolic, GeneralComplex };

inline const char* to_string(RotorKind k) {
  switch (k) {
    case RotorKind::RealRotation: return "real-rotation";
    case RotorKind::Hyperbolic: return "hyperbolic";
    default: return "general-complex";
  }
}

/// Kind is recomputed from the entries; caller labels are not trusted.
/// Real entries mean an ordinary rotation, a hermitian orthogonal matrix is
/// a pure hyperbolic rotation, anything else is general SO(3,C).
inline RotorKind classify_rotor(const Mat& o, double tol = 1e-10) {
  if (o.max_imag() <= tol) return RotorKind::RealRotation;
  if (max_abs_diff(o, o.dagger()) <= tol) return RotorKind::Hyperbolic;
  return RotorKind::GeneralComplex;
}

/// 3x3 complex orthogonal unimodular matrix mixing the vector units,
/// q_k' = O_kn q_n.
struct Rotor {
  Mat o{3};
  RotorKind kind = RotorKind::RealRotation;

  explicit Rotor(const Mat& m, double tol = 1e-8) : o(m) {
    if (m.dim() != 3) throw std::invalid_argument("Rotor: 3x3 matrix required");
    const double orth = orthogonality_residual(m);
    const double det_dev = std::abs(m.det() - 1.0);
    if (orth > tol || det_dev > tol) {
      std::ostringstream os;
      os << "Rotor: invalid transformation matrix (orthogonality deviation " << orth
         << ", det deviation " << det_dev << ")";
      throw std::invalid_argument(os.str());
    }
    kind = classify_rotor(m);
  }

  static Rotor identity() { return Rotor(Mat::identity(3)); }

  Rotor operator*(const Rotor& other) const { return Rotor(o * other.o, 1e-7); }
  Mat transpose() const { return o.transpose(); }
};

/// q_k' = U q_k U^-1; form-invariance of the multiplication rule is the
/// defining property, verify_triad on the output stays clean.
inline UnitTriad spinor_transform(const SpinorMap& u, const UnitTriad& t) {
  const Mat inv = u.inverse();
  return {{u.u * t.q[0] * inv, u.u * t.q[1] * inv, u.u * t.q[2] * inv}};
}

/// q_k' = O_kn q_n.
inline UnitTriad vector_transform(const Rotor& r, const UnitTriad& t) {
  UnitTriad out;
  for (int k = 0; k < 3; ++k) {
    Mat acc(t.dim());
    for (int n = 0; n < 3; ++n) acc += r.o(k, n) * t.q[n];
    out.q[k] = acc;
  }
  return out;
}

/// Elementary rotation about the numbered axis (1, 2 or 3) by a complex
/// angle; imaginary angles give hyperbolic rotations.
inline Mat elementary_rotation(int axis, cplx angle) {
  const cplx c = std::cos(angle), s = std::sin(angle);
  Mat m = Mat::identity(3);
  switch (axis) {
    case 3:
      m(0, 0) = c; m(0, 1) = s;
      m(1, 0) = -s; m(1, 1) = c;
      break;
    case 2:
      m(0, 0) = c; m(0, 2) = -s;
      m(2, 0) = s; m(2, 2) = c;
      break;
    case 1:
      m(1, 1) = c; m(1, 2) = s;
      m(2, 1) = -s; m(2, 2) = c;
      break;
    default:
      throw std::invalid_argument("elementary_rotation: axis must be 1, 2 or 3");
  }
  return m;
}

/// Product O = O_3^A O_2^B O_1^Gamma of the three irreducible factors.
inline Rotor rotor_from_angles(cplx a, cplx b, cplx gamma) {
  return Rotor(elementary_rotation(3, a) * elementary_rotation(2, b) *
               elementary_rotation(1, gamma));
}

/// Hyperbolic rotation with rapidity psi about the given axis; equals
/// rotor_from_angles with the imaginary angle i*psi in the matching slot.
inline Rotor h_rotation(int axis, double psi) {
  const cplx ipsi{0.0, psi};
  switch (axis) {
    case 3: return rotor_from_angles(ipsi, 0.0, 0.0);
    case 2: return rotor_from_angles(0.0, ipsi, 0.0);
    case 1: return rotor_from_angles(0.0, 0.0, ipsi);
    default: throw std::invalid_argument("h_rotation: axis must be 1, 2 or 3");
  }
}

/// The explicit x,y,z parameterization of the transformation matrix.
/// Singular where z^2 = 1; equals rotor_from_angles(A,B,Gamma) under
/// z = sin B, x = -sin A cos B, y = -sin Gamma cos B on matching branches.
inline Rotor rotor_from_xyz(cplx x, cplx y, cplx z, double tol = 1e-10) {
  const cplx one{1.0, 0.0};
  if (std::abs(one - z * z) < tol)
    throw std::domain_error("rotor_from_xyz: parameterization singular at z^2 = 1");
  const cplx wz = one - z * z;
  const cplx rx = std::sqrt(one - x * x - z * z);
  const cplx ry = std::sqrt(one - y * y - z * z);
  Mat m(3);
  m(0, 0) = rx;
  m(0, 1) = -(x * ry + y * z * rx) / wz;
  m(0, 2) = (x * y - z * rx * ry) / wz;
  m(1, 0) = x;
  m(1, 1) = (rx * ry - x * y * z) / wz;
  m(1, 2) = (-y * rx - x * z * ry) / wz;
  m(2, 0) = z;
  m(2, 1) = y;
  m(2, 2) = ry;
  return Rotor(m);
}

/// O_kn = -Tr(U q_k U^-1 q_n)/2, the vector transformation induced by a
/// spinor map in the constant Pauli representation.
inline Rotor o_from_u(const SpinorMap& u) {
  static const UnitTriad pauli = pauli_triad();
  const Mat inv = u.inverse();
  Mat o(3);
  for (int k = 0; k < 3; ++k) {
    const Mat conj_k = u.u * pauli.q[k] * inv;
    for (int n = 0; n < 3; ++n) o(k, n) = -0.5 * (conj_k * pauli.q[n]).trace();
  }
  return Rotor(o);
}

/// Spinor map (one of the two signs) reproducing a given rotor.  Singular at
/// trace O = -1, i.e. rotations by pi, where the caller should compose two
/// half-rotations instead.
inline SpinorMap u_from_o(const Rotor& r, double tol = 1e-8) {
  static const UnitTriad pauli = pauli_triad();
  const cplx tr = r.o.trace();
  const cplx root = std::sqrt(1.0 + tr);
  if (std::abs(root) < std::sqrt(tol))
    throw std::domain_error(
        "u_from_o: formula singular at trace(O) = -1 (rotation by pi); "
        "compose two half-rotations");
  Mat num = (1.0 + tr) * Mat::identity(2);
  for (int j = 0; j < 3; ++j) {
    cplx coeff{};
    for (int k = 0; k < 3; ++k)
      for (int n = 0; n < 3; ++n) {
        const double e = levi_civita(k, n, j);
        if (e != 0.0) coeff += e * r.o(k, n);
      }
    num += coeff * pauli.q[j];
  }
  return SpinorMap(num / (2.0 * root), tol);
}

}  // namespace biquat
