#include "biquat/relativity.hpp"

#include <cmath>

#include "biquat/ephemeris.hpp"
#include "biquat/random.hpp"
#include "doctest.h"

using namespace biquat;

namespace {

std::vector<double> linspace(double t0, double t1, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = t0 + (t1 - t0) * i / (n - 1);
  return out;
}

BQInterval random_good_interval(Rng& rng) {
  const Vec3 dx{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  Vec3 w{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  const double c = dot(w, dx) / dot(dx, dx);
  return {dx, w - c * dx};
}

double arcmin(double radians) { return radians * 180.0 * 60.0 / M_PI; }

}  // namespace

TEST_SUITE("qrel") {
  TEST_CASE("interval squares of the basic displacements") {
    CHECK(interval_square({{0, 0, 0}, {1, 0, 0}}) == doctest::Approx(1.0));
    CHECK(interval_square({{0.6, 0, 0}, {0, 1, 0}}) == doctest::Approx(0.64));
  }

  TEST_CASE("parallel space and time parts have no interval") {
    const BQInterval bad{{1, 0, 0}, {0.5, 0, 0}};
    CHECK_THROWS_AS(interval_square(bad), OrthogonalityError);
    try {
      interval_square(bad);
    } catch (const OrthogonalityError& e) {
      CHECK(e.residual == doctest::Approx(0.5));
    }
  }

  TEST_CASE("zero-rapidity boost is the identity") {
    const RelFrame f = boost(RelFrame::rest_frame(), 3, 0.0);
    CHECK(max_abs_diff(f.history, Mat::identity(3)) == 0.0);
    CHECK(rapidity(f, 3) == 0.0);
  }

  TEST_CASE("boost at V = 0.6 dilates clocks by exactly 1.25") {
    const double psi = std::atanh(0.6);
    const RelFrame f = boost(RelFrame::rest_frame(), 3, psi);
    CHECK(std::abs(clock_factor(f, 3) - 1.25) <= 1e-12);
    CHECK(std::abs(velocity(f, 3) - 0.6) <= 1e-12);
    CHECK(verify_triad(f.sigma).ok(1e-12));
  }

  TEST_CASE("interval square is preserved by boosts and rotations") {
    Rng rng(61);
    for (int it = 0; it < 200; ++it) {
      const BQInterval i0 = random_good_interval(rng);
      const double before = interval_square(i0);
      // random word in rotations and boosts
      BQInterval moved = i0;
      for (int step = 0; step < 4; ++step) {
        const int axis = 1 + static_cast<int>(rng.next() % 3);
        if (rng.next() % 2 == 0)
          moved = transform_interval(h_rotation(axis, rng.uniform(-1, 1)), moved);
        else {
          Mat m = elementary_rotation(axis, rng.uniform(-3, 3));
          moved = transform_interval(Rotor(m), moved);
        }
      }
      CHECK(std::abs(interval_square(moved) - before) <= 1e-12 * std::max(1.0, std::abs(before)));
    }
  }

  TEST_CASE("collinear rapidities add and velocities compose relativistically") {
    const double p1 = 0.4, p2 = 0.35;
    const RelFrame f = boost(boost(RelFrame::rest_frame(), 3, p1), 3, p2);
    CHECK(std::abs(rapidity(f, 3) - (p1 + p2)) <= 1e-12);
    const double v1 = std::tanh(p1), v2 = std::tanh(p2);
    CHECK(std::abs(velocity(f, 3) - (v1 + v2) / (1.0 + v1 * v2)) <= 1e-12);
  }

  TEST_CASE("rapidity extraction rejects mixed histories") {
    RelFrame f = boost(RelFrame::rest_frame(), 3, 0.4);
    f.history = elementary_rotation(3, 0.3) * f.history;
    CHECK_THROWS_AS(rapidity(f, 3), std::domain_error);
  }

  TEST_CASE("circular motion at zero rapidity is trivial") {
    const CircularMotionResult r =
        circular_motion([](double) { return 0.0; }, 2.0, linspace(0, 5, 11));
    for (size_t i = 0; i < r.t_prime.size(); ++i) {
      CHECK(std::abs(r.t[i] - r.t_prime[i]) <= 1e-12);
      CHECK(std::abs(r.alpha[i]) <= 1e-12);
      CHECK(std::abs(r.a_tan[i]) <= 1e-12);
      CHECK(std::abs(r.a_norm[i]) <= 1e-12);
    }
  }

  TEST_CASE("constant rapidity circular motion matches the closed forms") {
    const double psi = 0.5, radius = 3.0;
    const CircularMotionResult r =
        circular_motion([psi](double) { return psi; }, radius, linspace(0, 4, 9));
    const double ch = std::cosh(psi), th = std::tanh(psi);
    for (size_t i = 0; i < r.t_prime.size(); ++i) {
      const double tp = r.t_prime[i];
      CHECK(std::abs(r.t[i] - tp * ch) <= 1e-9 * std::max(1.0, tp * ch));
      CHECK(std::abs(r.alpha[i] - th * tp / radius) <= 1e-9);
      CHECK(std::abs(r.a_tan[i]) <= 1e-12);
      const double dalpha_dt = th / (radius * ch);
      CHECK(std::abs(r.a_norm[i] - radius * dalpha_dt * dalpha_dt) <= 1e-12);
    }
  }

  TEST_CASE("normal acceleration agrees with numeric differentiation of alpha(t)") {
    const double radius = 2.0;
    const auto psi = [](double tp) { return 0.3 + 0.1 * std::tanh(tp); };
    const CircularMotionResult r = circular_motion(psi, radius, linspace(0, 2, 201));
    for (size_t i = 1; i + 1 < r.t.size(); ++i) {
      const double dalpha_dt = (r.alpha[i + 1] - r.alpha[i - 1]) / (r.t[i + 1] - r.t[i - 1]);
      CHECK(std::abs(r.a_norm[i] - radius * dalpha_dt * dalpha_dt) <= 1e-6);
    }
  }

  TEST_CASE("thomas precession vanishes without a boost") {
    CHECK(thomas_simple(2.0, 0.0) == 0.0);
    const ThomasResult r = thomas_general([](double t) { return 1.3 * t; },
                                          [](double) { return 0.0; }, 0.0, 2.0, 201);
    for (size_t i = 0; i < r.theta.size(); ++i)
      CHECK(std::abs(r.theta_prime[i] - r.theta[i]) <= 1e-12);
    for (double w : r.omega_t) CHECK(std::abs(w) <= 1e-10);
  }

  TEST_CASE("small-velocity thomas frequency approaches -omega V^2/2 within V^2") {
    for (double v : {0.05, 0.1, 0.2}) {
      const double omega = 1.7;
      const double exact = thomas_simple(omega, std::atanh(v));
      const double leading = -0.5 * omega * v * v;
      CHECK(std::abs(exact - leading) / std::abs(leading) <= v * v);
    }
    // frozen value: 1 - cosh(atanh(0.1)) = 1 - 1/sqrt(1-0.01)
    CHECK(thomas_simple(1.0, std::atanh(0.1)) ==
          doctest::Approx(1.0 - 1.0 / std::sqrt(0.99)).epsilon(1e-12));
  }

  TEST_CASE("general thomas reduces to the simple formula on circular motion") {
    const double omega = 1.0, psi = 0.3;
    const ThomasResult r = thomas_general([omega](double t) { return omega * t; },
                                          [psi](double) { return psi; }, 0.0, 2.0, 4001);
    const double expected = thomas_simple(omega, psi);
    for (double w : r.omega_t) CHECK(std::abs(w - expected) <= 1e-6);
  }

  TEST_CASE("slowly varying rapidity tracks the adiabatic thomas value") {
    const double omega = 1.0;
    auto run = [omega](double s) {
      const auto psi = [s](double t) { return 0.3 + s * std::sin(0.5 * t); };
      const ThomasResult r =
          thomas_general([omega](double t) { return omega * t; }, psi, 0.0, 4.0, 8001);
      double worst = 0.0;
      for (size_t i = 0; i + 2 < r.t.size(); ++i) {
        const double adiabatic = thomas_simple(omega, psi(r.t[i + 1]));
        worst = std::max(worst, std::abs(r.omega_t[i] - adiabatic));
      }
      return worst;
    };
    const double res1 = run(0.05), res2 = run(0.025);
    // residual scales down roughly linearly with the rapidity rate
    CHECK(res2 <= 0.75 * res1 + 1e-9);
    CHECK(res1 <= 0.05);
  }

  TEST_CASE("satellite deviation is zero at t = 0 and linear in time") {
    CHECK(satellite_deviation(1e-4, 1e-4, 8e-5, 0.0) == 0.0);
    const double one = satellite_deviation(1e-4, 1e-4, 8e-5, 1e9);
    const double two = satellite_deviation(1e-4, 1e-4, 8e-5, 2e9);
    CHECK(two == 2.0 * one);
    CHECK_THROWS_AS(satellite_deviation(-1e-4, 1e-4, 8e-5, 1.0), std::invalid_argument);
  }

  TEST_CASE("phobos deviation lands near twenty arcminutes per century") {
    namespace eph = biquat::ephemeris;
    const double omega = 2.0 * M_PI / eph::phobos_period_s;
    const double dev = satellite_deviation(omega, eph::earth_orbital_speed / eph::speed_of_light,
                                           eph::mars_orbital_speed / eph::speed_of_light,
                                           eph::century_s);
    CHECK(std::abs(arcmin(dev) - 20.0) / 20.0 <= 0.15);
  }

  TEST_CASE("innermost jupiter moon deviation lands near twelve arcminutes per century") {
    namespace eph = biquat::ephemeris;
    const double omega = 2.0 * M_PI / eph::metis_period_s;
    const double dev = satellite_deviation(omega, eph::earth_orbital_speed / eph::speed_of_light,
                                           eph::jupiter_orbital_speed / eph::speed_of_light,
                                           eph::century_s);
    CHECK(std::abs(arcmin(dev) - 12.0) / 12.0 <= 0.15);
  }

  TEST_CASE("hyperbolic motion reproduces the constant-acceleration worldline") {
    const double a = 0.7;
    const HyperbolicMotionResult r = hyperbolic_motion(a, linspace(0, 3, 31));
    for (size_t i = 0; i < r.t_prime.size(); ++i) {
      const double t = r.t[i];
      const double expected_x = (std::sqrt(1.0 + a * a * t * t) - 1.0) / a;
      CHECK(std::abs(r.x[i] - expected_x) <= 1e-8 * std::max(1.0, expected_x));
      CHECK(std::abs(r.t[i] - std::sinh(a * r.t_prime[i]) / a) <= 1e-8 * std::max(1.0, r.t[i]));
      CHECK(std::abs(r.v[i] - std::tanh(a * r.t_prime[i])) <= 1e-10);
    }
  }

  TEST_CASE("boosted good intervals keep their orthogonality") {
    Rng rng(62);
    for (int it = 0; it < 100; ++it) {
      const BQInterval i0 = random_good_interval(rng);
      const BQInterval moved = transform_interval(h_rotation(3, rng.uniform(-1, 1)), i0);
      CHECK(std::abs(dot(moved.dx, moved.dt)) <= 1e-12 * std::max(1.0, norm(moved.dx)));
    }
  }
}
