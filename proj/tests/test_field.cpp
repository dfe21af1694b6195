#include "biquat/field.hpp"

#include <cmath>

#include "biquat/random.hpp"
#include "doctest.h"

using namespace biquat;

namespace {

// plane wave solving the quaternionic analyticity condition:
// E = (0, cos(z - t), 0), B = (cos(z - t), 0, 0)
EMField analytic_plane_wave() {
  EMField em;
  em.E = [](const Vec3& x, double t) { return Vec3{0.0, std::cos(x[2] - t), 0.0}; };
  em.B = [](const Vec3& x, double t) { return Vec3{std::cos(x[2] - t), 0.0, 0.0}; };
  return em;
}

EMField smooth_random_field() {
  EMField em;
  em.E = [](const Vec3& x, double t) {
    return Vec3{0.3 * std::sin(x[0] + 2.0 * t), 0.2 * x[1] * x[2], 0.4 * std::cos(x[2] - x[0])};
  };
  em.B = [](const Vec3& x, double t) {
    return Vec3{0.1 * x[0] * x[0], 0.5 * std::sin(x[2] + t), 0.2 * std::cos(x[1] * 2.0)};
  };
  return em;
}

SpacetimeGrid small_spacetime(double step = 1e-3) {
  return SpacetimeGrid{{0.3, -0.2, 0.4}, 0.15, step, {3, 3, 3}, 3};
}

}  // namespace

TEST_SUITE("qfield") {
  TEST_CASE("packing and unpacking the field matrix roundtrips") {
    const Vec3 b{0.3, -1.2, 0.7}, e{-0.5, 0.2, 1.1};
    EMField em;
    em.E = [e](const Vec3&, double) { return e; };
    em.B = [b](const Vec3&, double) { return b; };
    const auto [b2, e2] = unpack_h(pack_h(em, {0, 0, 0}, 0.0));
    CHECK(norm(b2 - b) <= 1e-15);
    CHECK(norm(e2 - e) <= 1e-15);
  }

  TEST_CASE("constant fields are analytic") {
    EMField em;
    em.E = [](const Vec3&, double) { return Vec3{0.4, -0.1, 0.2}; };
    em.B = [](const Vec3&, double) { return Vec3{-0.3, 0.8, 0.0}; };
    CHECK(fueter_residual(em, small_spacetime()).max_residual == 0.0);
  }

  TEST_CASE("the analytic plane wave passes the fueter condition") {
    const FueterReport rep = fueter_residual(analytic_plane_wave(), small_spacetime());
    CHECK(rep.max_residual <= 1e-6);
    CHECK(rep.max_div_E <= 1e-6);
    CHECK(rep.max_div_B <= 1e-6);
    CHECK(rep.max_rot_E_minus_dtB <= 1e-6);
    CHECK(rep.max_rot_B_plus_dtE <= 1e-6);
  }

  TEST_CASE("a static divergent field shows up in the named residual") {
    EMField em;
    em.E = [](const Vec3& x, double) { return Vec3{x[0], 0.0, 0.0}; };
    em.B = [](const Vec3&, double) { return Vec3{0.0, 0.0, 0.0}; };
    const FueterReport rep = fueter_residual(em, small_spacetime());
    CHECK(std::abs(rep.max_div_E - 1.0) <= 1e-9);
    CHECK(rep.max_div_B <= 1e-12);
    CHECK(rep.max_rot_E_minus_dtB <= 1e-9);
    CHECK(rep.max_rot_B_plus_dtE <= 1e-9);
  }

  TEST_CASE("fueter decomposition matches vector calculus on shared stencils") {
    const MaxwellEquivalenceReport rep =
        maxwell_equivalence_report(smooth_random_field(), small_spacetime());
    CHECK(rep.max_matching_gap <= 1e-10);
  }

  TEST_CASE("maxwell report on the plane wave and on zero fields") {
    const MaxwellEquivalenceReport wave =
        maxwell_equivalence_report(analytic_plane_wave(), small_spacetime());
    CHECK(wave.fueter.max_residual <= 1e-6);
    CHECK(wave.max_matching_gap <= 1e-10);

    EMField zero;
    zero.E = [](const Vec3&, double) { return Vec3{}; };
    zero.B = [](const Vec3&, double) { return Vec3{}; };
    const MaxwellEquivalenceReport rep = maxwell_equivalence_report(zero, small_spacetime());
    CHECK(rep.fueter.max_residual == 0.0);
    CHECK(rep.max_matching_gap == 0.0);
  }

  TEST_CASE("free particle collapses both hamiltonians onto the laplacian") {
    QuantumSetup setup;
    setup.potential = [](const Vec3&) { return Vec3{}; };
    setup.wavefunction = [](const Vec3& x) {
      const double g = std::exp(-0.5 * dot(x, x));
      return Spinor{g * (1.0 + 0.3 * x[0]), g * cplx{0.2, 0.4} * x[1]};
    };
    const PauliReport rep = pauli_check(setup, SpatialGrid{{0.2, -0.1, 0.3}, 1e-2, {5, 5, 5}});
    CHECK(rep.max_operator_gap <= 1e-10);
  }

  TEST_CASE("uniform field extracts the bohr magneton coefficient") {
    const Vec3 b{0.0, 0.0, 0.8};
    QuantumSetup setup;
    setup.charge = 1.0;
    setup.mass = 1.0;
    setup.hbar = 1.0;
    setup.c_light = 1.0;
    setup.potential = [b](const Vec3& x) { return 0.5 * cross(b, x); };
    setup.wavefunction = [](const Vec3& x) {
      const double g = std::exp(-0.5 * dot(x, x));
      return Spinor{g * (1.0 + 0.2 * x[1]), g * (cplx{0.3, -0.1} + 0.1 * x[2])};
    };
    const PauliReport rep = pauli_check(setup, SpatialGrid{{0.2, -0.1, 0.3}, 5e-4, {5, 5, 5}});
    CHECK(rep.expected_coefficient == doctest::Approx(0.5));
    CHECK(rep.coefficient_gap <= 1e-6);
  }

  TEST_CASE("random smooth potential keeps the operator identity to 1e-6") {
    QuantumSetup setup;
    setup.potential = [](const Vec3& x) {
      return Vec3{0.2 * std::sin(x[1]), 0.3 * x[2] * x[0], 0.25 * std::cos(x[0])};
    };
    setup.wavefunction = [](const Vec3& x) {
      const double g = std::exp(-0.5 * dot(x, x));
      return Spinor{g * (0.8 + 0.3 * x[0] + 0.1 * x[1] * x[2]),
                    g * (cplx{0.2, 0.4} + 0.2 * x[1])};
    };
    const PauliReport rep = pauli_check(setup, SpatialGrid{{0.25, -0.15, 0.35}, 1e-3, {5, 5, 5}});
    CHECK(rep.max_operator_gap <= 1e-6);
  }

  TEST_CASE("pauli identity gap scales quadratically with the step") {
    QuantumSetup setup;
    setup.potential = [](const Vec3& x) {
      return Vec3{0.2 * std::sin(x[1]), 0.3 * x[2] * x[0], 0.25 * std::cos(x[0])};
    };
    setup.wavefunction = [](const Vec3& x) {
      const double g = std::exp(-0.5 * dot(x, x));
      return Spinor{g * (0.8 + 0.3 * x[0]), g * (cplx{0.2, 0.4} + 0.2 * x[1])};
    };
    auto gap = [&](double h) {
      return pauli_check(setup, SpatialGrid{{0.25, -0.15, 0.35}, h, {5, 5, 5}}).max_operator_gap;
    };
    const double ratio = gap(2e-2) / gap(1e-2);
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.5);
  }

  TEST_CASE("pauli check validates the grid") {
    QuantumSetup setup;
    setup.potential = [](const Vec3&) { return Vec3{}; };
    setup.wavefunction = [](const Vec3&) { return Spinor{1.0, 0.0}; };
    CHECK_THROWS_AS(pauli_check(setup, SpatialGrid{{0, 0, 0}, 1e-3, {3, 5, 5}}),
                    std::invalid_argument);
  }

  TEST_CASE("zero connection gives zero strength both ways") {
    const ConnectionFn zero = [](const std::vector<double>&, int) { return Omega3{}; };
    const ParameterGrid grid({Axis{"x", 0, 1e-3, 5}, Axis{"y", 0, 1e-3, 5}, Axis{"z", 0, 1e-3, 5}});
    const YangMillsReport rep = ym_strength_check(zero, grid);
    CHECK(rep.two_way_gap == 0.0);
    CHECK(rep.max_strength == 0.0);
  }

  TEST_CASE("affine connection satisfies the yang-mills identity") {
    const ConnectionFn omega = [](const std::vector<double>& c, int a) {
      Omega3 o{};
      const double f = 0.4 * std::sin(c[0] + 2.0 * c[1]) + 0.2 * c[2] * (a + 1);
      const double g = 0.3 * std::cos(3.0 * c[2]) + 0.1 * c[a];
      const double u = 0.2 * c[0] * c[1] + 0.05 * a;
      o[0][1] = f;
      o[1][0] = -f;
      o[1][2] = g;
      o[2][1] = -g;
      o[0][2] = u;
      o[2][0] = -u;
      return o;
    };
    const ParameterGrid grid(
        {Axis{"x", 0.2, 1e-3, 5}, Axis{"y", -0.1, 1e-3, 5}, Axis{"z", 0.4, 1e-3, 5}});
    const YangMillsReport rep = ym_strength_check(omega, grid);
    CHECK(rep.two_way_gap <= 1e-5);
    CHECK(rep.max_strength > 1e-3);
    CHECK(rep.derivative_order_da_first);
    CHECK(rep.printed_order_gap > rep.two_way_gap);
  }

  TEST_CASE("metric connections have vanishing yang-mills strength") {
    const RotorField rotor = [](const std::vector<double>& c) {
      return rotor_from_angles(0.5 * c[0] + 0.3 * std::sin(c[1]), 0.4 * std::cos(c[2]),
                               0.2 * c[0] * c[2]);
    };
    const ParameterGrid grid(
        {Axis{"x", 0.2, 1e-3, 5}, Axis{"y", -0.1, 1e-3, 5}, Axis{"z", 0.4, 1e-3, 5}});
    const YangMillsReport rep = ym_strength_check(metric_connection(rotor, 1e-3), grid);
    CHECK(rep.max_strength <= 1e-5);
  }
}
