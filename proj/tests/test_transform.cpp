#include "biquat/transform.hpp"

#include <cmath>

#include "biquat/random.hpp"
#include "doctest.h"

using namespace biquat;

namespace {

// exp(theta q3~) = cos(theta) + sin(theta) q3~ on the Pauli triad
SpinorMap spinor_about_axis3(double theta) {
  const UnitTriad p = pauli_triad();
  return SpinorMap(std::cos(theta) * Mat::identity(2) + std::sin(theta) * p.q[2]);
}

SpinorMap random_sl2c(Rng& rng) {
  Mat m(2);
  do {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)};
  } while (std::abs(m.det()) < 0.2);
  return SpinorMap::normalized(m);
}

Rotor random_real_rotor(Rng& rng) {
  return rotor_from_angles(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                           rng.uniform(-1.5, 1.5));
}

Rotor random_complex_rotor(Rng& rng, double imag_scale = 0.5) {
  auto ang = [&] { return cplx{rng.uniform(-1.0, 1.0), imag_scale * rng.uniform(-1.0, 1.0)}; };
  return rotor_from_angles(ang(), ang(), ang());
}

}  // namespace

TEST_SUITE("qtransform") {
  TEST_CASE("identity maps leave a triad untouched") {
    const UnitTriad p = pauli_triad();
    const UnitTriad via_u = spinor_transform(SpinorMap(Mat::identity(2)), p);
    const UnitTriad via_o = vector_transform(Rotor::identity(), p);
    for (int k = 0; k < 3; ++k) {
      CHECK(max_abs_diff(via_u.q[k], p.q[k]) <= 1e-15);
      CHECK(max_abs_diff(via_o.q[k], p.q[k]) <= 1e-15);
    }
  }

  TEST_CASE("spinor transform keeps the scalar unit fixed") {
    Rng rng(31);
    const SpinorMap u = random_sl2c(rng);
    CHECK(max_abs_diff(u.u * Mat::identity(2) * u.inverse(), Mat::identity(2)) <= 1e-12);
  }

  TEST_CASE("half-angle spinor about axis 3 rotates q1 into cos q1 + sin q2") {
    const double alpha = 0.437;
    const UnitTriad p = pauli_triad();
    const UnitTriad rotated = spinor_transform(spinor_about_axis3(alpha / 2), p);
    const Mat expected = std::cos(alpha) * p.q[0] + std::sin(alpha) * p.q[1];
    CHECK(max_abs_diff(rotated.q[0], expected) <= 1e-14);

    // same rotation through the vector route
    const UnitTriad via_rotor = vector_transform(rotor_from_angles(alpha, 0, 0), p);
    for (int k = 0; k < 3; ++k)
      CHECK(max_abs_diff(rotated.q[k], via_rotor.q[k]) <= 1e-14);
  }

  TEST_CASE("form-invariance under random SL(2,C) maps") {
    Rng rng(32);
    for (int it = 0; it < 200; ++it) {
      const UnitTriad t = spinor_transform(random_sl2c(rng), pauli_triad());
      CHECK(verify_triad(t).ok(1e-10));
    }
  }

  TEST_CASE("form-invariance under random SO(3,C) rotors") {
    Rng rng(33);
    for (int it = 0; it < 200; ++it) {
      const UnitTriad t = vector_transform(random_complex_rotor(rng), pauli_triad());
      CHECK(verify_triad(t).ok(1e-10));
    }
  }

  TEST_CASE("non-unimodular or non-orthogonal vector maps are rejected") {
    Mat reflect = Mat::identity(3);
    reflect(2, 2) = -1.0;  // det -1, orthogonal
    CHECK_THROWS_AS(Rotor{reflect}, std::invalid_argument);
    Mat skew = Mat::identity(3);
    skew(0, 1) = 0.3;
    CHECK_THROWS_AS(Rotor{skew}, std::invalid_argument);
    Mat non_invertible(2);
    non_invertible(0, 0) = 1.0;
    CHECK_THROWS_AS(SpinorMap::normalized(non_invertible), std::domain_error);
  }

  TEST_CASE("rotor_from_angles reproduces the elementary matrices") {
    const Rotor id = rotor_from_angles(0, 0, 0);
    CHECK(max_abs_diff(id.o, Mat::identity(3)) == 0.0);

    const double alpha = 0.73;
    const Rotor r = rotor_from_angles(alpha, 0, 0);
    CHECK(r.kind == RotorKind::RealRotation);
    CHECK(std::abs(r.o(0, 0) - std::cos(alpha)) <= 1e-15);
    CHECK(std::abs(r.o(0, 1) - std::sin(alpha)) <= 1e-15);
    CHECK(std::abs(r.o(1, 0) + std::sin(alpha)) <= 1e-15);
    CHECK(std::abs(r.o(2, 2) - 1.0) <= 1e-15);
  }

  TEST_CASE("imaginary angle gives a hyperbolic rotor with sinh entries") {
    const double psi = 0.62;
    const Rotor h = rotor_from_angles(cplx{0, psi}, 0, 0);
    CHECK(h.kind == RotorKind::Hyperbolic);
    CHECK(std::abs(h.o(0, 0) - std::cosh(psi)) <= 1e-15);
    CHECK(std::abs(h.o(0, 1) - cplx{0, std::sinh(psi)}) <= 1e-15);
    CHECK(orthogonality_residual(h.o) <= 1e-14);
  }

  TEST_CASE("rotor_from_xyz basics") {
    CHECK(max_abs_diff(rotor_from_xyz(0, 0, 0).o, Mat::identity(3)) == 0.0);
    const Rotor r = rotor_from_xyz(0.21, -0.13, 0.08);
    CHECK(r.kind == RotorKind::RealRotation);
    CHECK(orthogonality_residual(r.o) <= 1e-12);
    CHECK(std::abs(r.o.det() - 1.0) <= 1e-12);
    CHECK_THROWS_AS(rotor_from_xyz(0.2, 0.1, 1.0), std::domain_error);
  }

  TEST_CASE("rotor_from_xyz matches rotor_from_angles under the substitution") {
    Rng rng(34);
    for (int it = 0; it < 100; ++it) {
      // small angles keep every square root on the principal branch
      const cplx a{rng.uniform(-0.4, 0.4), rng.uniform(-0.2, 0.2)};
      const cplx b{rng.uniform(-0.4, 0.4), rng.uniform(-0.2, 0.2)};
      const cplx g{rng.uniform(-0.4, 0.4), rng.uniform(-0.2, 0.2)};
      const cplx z = std::sin(b);
      const cplx x = -std::sin(a) * std::cos(b);
      const cplx y = -std::sin(g) * std::cos(b);
      const Rotor via_xyz = rotor_from_xyz(x, y, z);
      const Rotor via_angles = rotor_from_angles(a, b, g);
      CHECK(max_abs_diff(via_xyz.o, via_angles.o) <= 1e-12);
    }
  }

  TEST_CASE("u_from_o of the identity is the identity spinor") {
    const SpinorMap u = u_from_o(Rotor::identity());
    CHECK(max_abs_diff(u.u, Mat::identity(2)) <= 1e-15);
  }

  TEST_CASE("u_from_o recovers the half-angle spinor for an axis-3 rotation") {
    const double alpha = 0.9;
    const SpinorMap u = u_from_o(rotor_from_angles(alpha, 0, 0));
    const SpinorMap expected = spinor_about_axis3(alpha / 2);
    const double direct = max_abs_diff(u.u, expected.u);
    const double flipped = max_abs_diff(u.u, -expected.u);
    CHECK(std::min(direct, flipped) <= 1e-14);
  }

  TEST_CASE("o_from_u inverts u_from_o on random rotors") {
    Rng rng(35);
    for (int it = 0; it < 200; ++it) {
      const Rotor r = random_real_rotor(rng);
      if (std::abs(r.o.trace() + 1.0) < 1e-3) continue;  // formula singularity
      const Rotor back = o_from_u(u_from_o(r));
      CHECK(max_abs_diff(back.o, r.o) <= 1e-10);
    }
  }

  TEST_CASE("u_from_o then o_from_u roundtrips on random spinor maps up to sign") {
    Rng rng(36);
    for (int it = 0; it < 1000; ++it) {
      const SpinorMap u = random_sl2c(rng);
      const Rotor o = o_from_u(u);
      if (std::abs(o.o.trace() + 1.0) < 1e-3) continue;
      const SpinorMap back = u_from_o(o);
      const double direct = max_abs_diff(back.u, u.u);
      const double flipped = max_abs_diff(back.u, -u.u);
      CHECK(std::min(direct, flipped) <= 1e-10);
    }
  }

  TEST_CASE("u_from_o raises at the pi-rotation singularity") {
    CHECK_THROWS_AS(u_from_o(rotor_from_angles(M_PI, 0, 0)), std::domain_error);
  }

  TEST_CASE("h_rotation at zero rapidity is the identity") {
    CHECK(max_abs_diff(h_rotation(3, 0.0).o, Mat::identity(3)) == 0.0);
  }

  TEST_CASE("h_rotation about axis 3 maps q1 to the exponential off-diagonal form") {
    const double psi = 0.8;
    const UnitTriad moved = vector_transform(h_rotation(3, psi), pauli_triad());
    Mat expected(2);
    expected(0, 1) = cplx{0, -1} * std::exp(psi);
    expected(1, 0) = cplx{0, -1} * std::exp(-psi);
    CHECK(max_abs_diff(moved.q[0], expected) <= 1e-14);
    CHECK(verify_triad(moved).ok(1e-12));
  }

  TEST_CASE("rapidity is additive for collinear hyperbolic rotations") {
    const double p1 = 0.35, p2 = -0.8;
    for (int axis : {1, 2, 3}) {
      const Rotor composed = h_rotation(axis, p1) * h_rotation(axis, p2);
      CHECK(max_abs_diff(composed.o, h_rotation(axis, p1 + p2).o) <= 1e-14);
    }
  }

  TEST_CASE("Q-vectors are invariant when components co-transform") {
    Rng rng(37);
    const UnitTriad p = pauli_triad();
    for (int it = 0; it < 100; ++it) {
      const Rotor r = random_real_rotor(rng);
      const Vec3 a{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
      const UnitTriad rotated = vector_transform(r, p);
      Vec3 a_rot{};
      for (int k = 0; k < 3; ++k)
        for (int n = 0; n < 3; ++n) a_rot[k] += r.o(k, n).real() * a[n];
      Mat lhs(2), rhs(2);
      for (int k = 0; k < 3; ++k) {
        lhs += a[k] * p.q[k];
        rhs += a_rot[k] * rotated.q[k];
      }
      CHECK(max_abs_diff(lhs, rhs) <= 1e-10);
    }
  }

  TEST_CASE("rotor products stay in the group") {
    Rng rng(38);
    for (int it = 0; it < 100; ++it) {
      const Rotor a = random_complex_rotor(rng), b = random_complex_rotor(rng);
      const Mat prod = a.o * b.o;
      CHECK(orthogonality_residual(prod) <= 1e-10);
      CHECK(std::abs(prod.det() - 1.0) <= 1e-10);
    }
  }

  TEST_CASE("rotor kind is recomputed from the entries") {
    CHECK(rotor_from_angles(0.4, 0.1, -0.2).kind == RotorKind::RealRotation);
    CHECK(h_rotation(2, 0.7).kind == RotorKind::Hyperbolic);
    const Rotor mixed = Rotor(rotor_from_angles(0.4, 0, 0).o * h_rotation(3, 0.5).o);
    CHECK(mixed.kind == RotorKind::GeneralComplex);
  }
}
