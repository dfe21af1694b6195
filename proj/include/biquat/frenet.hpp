#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "biquat/matrix.hpp"
#include "biquat/transform.hpp"
#include "biquat/triad.hpp"

namespace biquat {

/// Frenet frame of an arclength-parameterized curve, sampled on the
/// interior of the input (two samples clipped at each end for the second
/// derivatives).  R_II is NaN where the curvature is too small to define a
/// normal.
struct FrenetResult {
  size_t first_index = 2;            // index into the input samples
  std::vector<double> r1;            // first curvature R_I
  std::vector<double> r2;            // second curvature R_II; NaN on straight parts
  std::vector<UnitTriad> triads;     // frame realized on the Pauli units
  std::vector<std::array<Vec3, 3>> frames;  // rows tangent, normal, binormal
};

inline FrenetResult frenet_frame(const std::vector<Vec3>& x, double ds,
                                 double arclength_tol = 1e-3, double curvature_floor = 1e-9) {
  if (x.size() < 5) throw std::invalid_argument("frenet_frame: need at least 5 samples");
  if (ds <= 0.0) throw std::invalid_argument("frenet_frame: step must be positive");

  const size_t n = x.size();
  auto tangent = [&](size_t i) { return (1.0 / (2.0 * ds)) * (x[i + 1] - x[i - 1]); };

  for (size_t i = 1; i + 1 < n; ++i) {
    const double speed = norm(tangent(i));
    if (std::abs(speed - 1.0) > arclength_tol)
      throw std::invalid_argument("frenet_frame: curve is not arclength-parameterized (|dx/ds| = " +
                                  std::to_string(speed) + ")");
  }

  FrenetResult out;
  out.first_index = 2;
  const UnitTriad pauli = pauli_triad();
  for (size_t i = 2; i + 2 < n; ++i) {
    const Vec3 t = tangent(i);
    const Vec3 dt = (1.0 / (2.0 * ds)) * (tangent(i + 1) - tangent(i - 1));
    const double r1 = norm(dt);
    out.r1.push_back(r1);
    if (r1 < curvature_floor) {
      out.r2.push_back(std::numeric_limits<double>::quiet_NaN());
      out.frames.push_back({t, Vec3{0, 0, 0}, Vec3{0, 0, 0}});
      out.triads.push_back(pauli);
      continue;
    }
    const Vec3 normal = (1.0 / r1) * dt;
    const Vec3 binormal = cross(t, normal);

    // second curvature from dN/ds projected on the binormal
    const auto normal_at = [&](size_t j) {
      const Vec3 dtj = (1.0 / (2.0 * ds)) * (tangent(j + 1) - tangent(j - 1));
      return (1.0 / norm(dtj)) * dtj;
    };
    double r2 = std::numeric_limits<double>::quiet_NaN();
    if (i >= 3 && i + 3 < n) {
      const Vec3 dn = (1.0 / (2.0 * ds)) * (normal_at(i + 1) - normal_at(i - 1));
      r2 = dot(dn, binormal);
    }
    out.r2.push_back(r2);

    // orthonormalize the frame and realize it on the Q-units
    Vec3 e1 = (1.0 / norm(t)) * t;
    Vec3 e2 = normal - dot(normal, e1) * e1;
    e2 = (1.0 / norm(e2)) * e2;
    const Vec3 e3 = cross(e1, e2);
    out.frames.push_back({e1, e2, e3});
    Mat o(3);
    for (int c = 0; c < 3; ++c) {
      o(0, c) = e1[c];
      o(1, c) = e2[c];
      o(2, c) = e3[c];
    }
    out.triads.push_back(vector_transform(Rotor(o), pauli));
  }
  return out;
}

}  // namespace biquat
