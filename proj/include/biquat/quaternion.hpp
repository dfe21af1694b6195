#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

#include "biquat/matrix.hpp"

namespace biquat {

/// Kronecker delta over vector indices 0..2.
constexpr double kronecker(int j, int k) { return j == k ? 1.0 : 0.0; }

/// Levi-Civita symbol with eps(0,1,2) = +1, totally antisymmetric.
constexpr double levi_civita(int j, int k, int n) {
  return static_cast<double>((j - k) * (k - n) * (n - j)) / 2.0;
}

/// Hamilton quaternion a + b i + c j + d k with real components.
struct Quaternion {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  Quaternion() = default;
  Quaternion(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}
  Quaternion(double scalar, const Vec3& v) : a(scalar), b(v[0]), c(v[1]), d(v[2]) {}

  double scal() const { return a; }
  Vec3 vect() const { return {b, c, d}; }

  Quaternion operator+(const Quaternion& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Quaternion operator-(const Quaternion& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Quaternion operator-() const { return {-a, -b, -c, -d}; }

  Quaternion operator*(const Quaternion& o) const {
    // scalar: a1 a2 - v1.v2; vector: a1 v2 + a2 v1 + v1 x v2
    return {a * o.a - b * o.b - c * o.c - d * o.d,
            a * o.b + b * o.a + c * o.d - d * o.c,
            a * o.c + c * o.a + d * o.b - b * o.d,
            a * o.d + d * o.a + b * o.c - c * o.b};
  }

  Quaternion operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
  friend Quaternion operator*(double s, const Quaternion& q) { return q * s; }
  Quaternion operator/(double s) const { return {a / s, b / s, c / s, d / s}; }

  Quaternion conjugated() const { return {a, -b, -c, -d}; }

  bool operator==(const Quaternion& o) const = default;
};

inline Quaternion conjugate(const Quaternion& q) { return q.conjugated(); }

inline double norm_sq(const Quaternion& q) {
  return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// Same product evaluated through the delta/epsilon contraction form of the
/// multiplication rule, kept as an independent route to the component form.
inline Quaternion mul_tensor_form(const Quaternion& q1, const Quaternion& q2) {
  const Vec3 v1 = q1.vect(), v2 = q2.vect();
  double scal = q1.a * q2.a;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) scal -= kronecker(j, k) * v1[j] * v2[k];
  Vec3 vect{};
  for (int n = 0; n < 3; ++n) {
    vect[n] = q1.a * v2[n] + q2.a * v1[n];
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) vect[n] += levi_civita(j, k, n) * v1[j] * v2[k];
  }
  return {scal, vect};
}

/// Left division Q1 conj(Q2)/|Q2|^2.
inline Quaternion divide_left(const Quaternion& q1, const Quaternion& q2) {
  const double n2 = norm_sq(q2);
  if (n2 == 0.0) throw std::domain_error("divide_left: zero-norm divisor");
  return q1 * q2.conjugated() / n2;
}

/// Right division conj(Q2) Q1/|Q2|^2.
inline Quaternion divide_right(const Quaternion& q1, const Quaternion& q2) {
  const double n2 = norm_sq(q2);
  if (n2 == 0.0) throw std::domain_error("divide_right: zero-norm divisor");
  return q2.conjugated() * q1 / n2;
}

/// Canonical display form "a + b i + c j + d k".
inline std::string to_string(const Quaternion& q) {
  std::ostringstream os;
  os << q.a;
  const double comps[3] = {q.b, q.c, q.d};
  const char* units[3] = {"i", "j", "k"};
  for (int n = 0; n < 3; ++n)
    os << (comps[n] < 0 ? " - " : " + ") << std::abs(comps[n]) << " " << units[n];
  return os.str();
}

/// Thrown when a biquaternion norm is requested outside the "good" subset;
/// carries the orthogonality residual sum a_k b_k.
struct NormUndefinedError : std::domain_error {
  double residual;
  explicit NormUndefinedError(const std::string& what, double res)
      : std::domain_error(what), residual(res) {}
};

/// Quaternion with complex components u = s + u_k q_k.  The interesting
/// subset are pure-vector elements u_k = a_k + i b_k with a.b = 0, for which
/// a (sign-indefinite) squared norm b^2 - a^2 exists.
struct Biquaternion {
  cplx s{};
  Vec3c v{};

  Biquaternion() = default;
  Biquaternion(cplx scalar, const Vec3c& vect) : s(scalar), v(vect) {}

  /// Pure-vector biquaternion from real and imaginary vector parts.
  static Biquaternion from_parts(const Vec3& a, const Vec3& b) {
    return {cplx{}, {cplx{a[0], b[0]}, cplx{a[1], b[1]}, cplx{a[2], b[2]}}};
  }

  Vec3 real_vector() const { return {v[0].real(), v[1].real(), v[2].real()}; }
  Vec3 imag_vector() const { return {v[0].imag(), v[1].imag(), v[2].imag()}; }

  Biquaternion operator+(const Biquaternion& o) const {
    return {s + o.s, {v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2]}};
  }

  Biquaternion operator*(const Biquaternion& o) const {
    cplx scal = s * o.s;
    for (int k = 0; k < 3; ++k) scal -= v[k] * o.v[k];
    Vec3c vect{};
    for (int n = 0; n < 3; ++n) {
      vect[n] = s * o.v[n] + o.s * v[n];
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) vect[n] += levi_civita(j, k, n) * v[j] * o.v[k];
    }
    return {scal, vect};
  }
};

/// Residual a.b of the "good element" orthogonality predicate.
inline double bq_orthogonality_residual(const Biquaternion& u) {
  return dot(u.real_vector(), u.imag_vector());
}

/// Squared norm b^2 - a^2 of a good pure-vector biquaternion.  Throws
/// NormUndefinedError (with the residual) when a.b != 0 or a scalar part is
/// present, outside the subset where the norm exists.
inline double bq_norm_sq(const Biquaternion& u, double tol = 1e-12) {
  const Vec3 a = u.real_vector(), b = u.imag_vector();
  const double scale = std::max(1.0, std::max(dot(a, a), dot(b, b)));
  if (std::abs(u.s) > tol * std::sqrt(scale))
    throw NormUndefinedError("bq_norm_sq: norm undefined for non-pure-vector element",
                             std::abs(u.s));
  const double residual = dot(a, b);
  if (std::abs(residual) > tol * scale)
    throw NormUndefinedError("bq_norm_sq: norm undefined, a.b != 0", residual);
  return dot(b, b) - dot(a, a);
}

}  // namespace biquat
