#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace biquat {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Vec3c = std::array<cplx, 3>;
using Spinor = std::array<cplx, 2>;    // column 2-vector
using Cospinor = std::array<cplx, 2>;  // row 2-vector

inline double dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline Vec3 operator+(const Vec3& u, const Vec3& v) { return {u[0] + v[0], u[1] + v[1], u[2] + v[2]}; }
inline Vec3 operator-(const Vec3& u, const Vec3& v) { return {u[0] - v[0], u[1] - v[1], u[2] - v[2]}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }
inline Vec3 operator-(const Vec3& v) { return {-v[0], -v[1], -v[2]}; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Small dense square complex matrix with value semantics. Sizes in this
/// library are 2, 3, or 2^n after rank doubling, so nothing here is tuned
/// for large n.
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(static_cast<size_t>(n) * n, cplx{0.0, 0.0}) {}
  Mat(int n, std::initializer_list<cplx> entries) : n_(n), a_(entries) {
    if (a_.size() != static_cast<size_t>(n) * n) throw std::invalid_argument("Mat: bad entry count");
  }

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return n_; }

  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Mat operator*(const Mat& o) const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const cplx aik = (*this)(i, k);
        if (aik == cplx{}) continue;
        for (int j = 0; j < n_; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }
  Mat& operator+=(const Mat& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Mat& operator*=(cplx s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend Mat operator*(cplx s, const Mat& m) {
    Mat r = m;
    r *= s;
    return r;
  }
  friend Mat operator*(const Mat& m, cplx s) { return s * m; }
  friend Mat operator/(const Mat& m, cplx s) { return (1.0 / s) * m; }

  cplx trace() const {
    cplx t{};
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  Mat transpose() const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Mat conj() const {
    Mat r = *this;
    for (auto& x : r.a_) x = std::conj(x);
    return r;
  }

  Mat dagger() const { return conj().transpose(); }

  cplx det() const {
    if (n_ == 1) return a_[0];
    if (n_ == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
    if (n_ == 3) {
      const Mat& m = *this;
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
    // LU with partial pivoting for the rank-doubled sizes.
    Mat lu = *this;
    cplx d = 1.0;
    for (int c = 0; c < n_; ++c) {
      int p = c;
      for (int r = c + 1; r < n_; ++r)
        if (std::abs(lu(r, c)) > std::abs(lu(p, c))) p = r;
      if (std::abs(lu(p, c)) == 0.0) return 0.0;
      if (p != c) {
        for (int j = 0; j < n_; ++j) std::swap(lu(p, j), lu(c, j));
        d = -d;
      }
      d *= lu(c, c);
      for (int r = c + 1; r < n_; ++r) {
        const cplx f = lu(r, c) / lu(c, c);
        for (int j = c; j < n_; ++j) lu(r, j) -= f * lu(c, j);
      }
    }
    return d;
  }

  Mat inverse() const {
    Mat a = *this;
    Mat inv = identity(n_);
    for (int c = 0; c < n_; ++c) {
      int p = c;
      for (int r = c + 1; r < n_; ++r)
        if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
      if (std::abs(a(p, c)) < 1e-300) throw std::domain_error("Mat::inverse: singular matrix");
      if (p != c)
        for (int j = 0; j < n_; ++j) {
          std::swap(a(p, j), a(c, j));
          std::swap(inv(p, j), inv(c, j));
        }
      const cplx piv = a(c, c);
      for (int j = 0; j < n_; ++j) {
        a(c, j) /= piv;
        inv(c, j) /= piv;
      }
      for (int r = 0; r < n_; ++r) {
        if (r == c) continue;
        const cplx f = a(r, c);
        if (f == cplx{}) continue;
        for (int j = 0; j < n_; ++j) {
          a(r, j) -= f * a(c, j);
          inv(r, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
  }

  double max_imag() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x.imag()));
    return m;
  }

 private:
  int n_ = 0;
  std::vector<cplx> a_;
};

inline double max_abs_diff(const Mat& a, const Mat& b) { return (a - b).max_abs(); }

/// sup-norm distance to the identity of M*M^T; zero for complex-orthogonal M.
inline double orthogonality_residual(const Mat& m) {
  return max_abs_diff(m * m.transpose(), Mat::identity(m.dim()));
}

/// Unitary factor of the polar decomposition, by Newton iteration
/// X <- (X + X^-dagger)/2.  For a complex-orthogonal input the result is
/// real orthogonal and the hermitian cofactor carries the boost content.
inline Mat polar_unitary_factor(const Mat& m, int max_iters = 60, double tol = 1e-14) {
  Mat x = m;
  for (int it = 0; it < max_iters; ++it) {
    Mat next = 0.5 * (x + x.inverse().dagger());
    if (max_abs_diff(next, x) < tol) return next;
    x = next;
  }
  return x;
}

// Matrix-vector helpers for spinors (2-component rows/columns).
inline Spinor mul(const Mat& m, const Spinor& v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}
inline Cospinor mul(const Cospinor& w, const Mat& m) {
  return {w[0] * m(0, 0) + w[1] * m(1, 0), w[0] * m(0, 1) + w[1] * m(1, 1)};
}
inline cplx dot(const Cospinor& w, const Spinor& v) { return w[0] * v[0] + w[1] * v[1]; }

/// Outer product psi phi of a column and a row spinor.
inline Mat outer(const Spinor& v, const Cospinor& w) {
  Mat m(2);
  m(0, 0) = v[0] * w[0];
  m(0, 1) = v[0] * w[1];
  m(1, 0) = v[1] * w[0];
  m(1, 1) = v[1] * w[1];
  return m;
}

}  // namespace biquat
