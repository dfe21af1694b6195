#include "biquat/quaternion.hpp"

#include <array>

#include "biquat/random.hpp"
#include "doctest.h"

using namespace biquat;

namespace {

// Independent oracle: expand the product distributively over the sixteen
// unit products using only Hamilton's table, no vector shortcuts.
Quaternion brute_force_product(const Quaternion& q1, const Quaternion& q2) {
  // basis order 1, i, j, k; table[e1][e2] = (coefficient, basis index)
  struct Term {
    double sign;
    int basis;
  };
  static const Term table[4][4] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  const double c1[4] = {q1.a, q1.b, q1.c, q1.d};
  const double c2[4] = {q2.a, q2.b, q2.c, q2.d};
  double out[4] = {0, 0, 0, 0};
  for (int e1 = 0; e1 < 4; ++e1)
    for (int e2 = 0; e2 < 4; ++e2) {
      const Term t = table[e1][e2];
      out[t.basis] += t.sign * c1[e1] * c2[e2];
    }
  return {out[0], out[1], out[2], out[3]};
}

Quaternion random_quaternion(Rng& rng, double lo = -10.0, double hi = 10.0) {
  return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

double qdist(const Quaternion& a, const Quaternion& b) {
  return norm(a - b);
}

}  // namespace

TEST_SUITE("qcore") {
  TEST_CASE("unit products follow Hamilton's table") {
    const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(qdist(i * j, k) == 0.0);
    CHECK(qdist(j * i, -k) == 0.0);
    CHECK(qdist(j * k, i) == 0.0);
    CHECK(qdist(k * i, j) == 0.0);
    CHECK(qdist(i * i, Quaternion{-1, 0, 0, 0}) == 0.0);
  }

  TEST_CASE("multiplying by the scalar unit is the identity") {
    const Quaternion q{2, 3, 0, 0}, one{1, 0, 0, 0};
    CHECK(qdist(q * one, q) == 0.0);
    CHECK(qdist(one * q, q) == 0.0);
  }

  TEST_CASE("worked product matches the distributive expansion") {
    const Quaternion q1{1, 2, 3, 4}, q2{5, 6, 7, 8};
    const Quaternion expected{-60, 12, 30, 24};
    CHECK(qdist(q1 * q2, expected) <= 1e-12);
    CHECK(qdist(brute_force_product(q1, q2), expected) <= 1e-12);
  }

  TEST_CASE("component and tensor forms of the product agree") {
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
      const Quaternion q1 = random_quaternion(rng), q2 = random_quaternion(rng);
      const Quaternion lhs = q1 * q2, rhs = mul_tensor_form(q1, q2);
      CHECK(qdist(lhs, rhs) <= 1e-12 * std::max(1.0, norm(lhs)));
      CHECK(qdist(lhs, brute_force_product(q1, q2)) <= 1e-12 * std::max(1.0, norm(lhs)));
    }
  }

  TEST_CASE("multiplication is noncommutative but associative") {
    const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0};
    CHECK(qdist(i * j, j * i) > 1.0);
    Rng rng(12);
    for (int it = 0; it < 300; ++it) {
      const Quaternion a = random_quaternion(rng), b = random_quaternion(rng),
                       c = random_quaternion(rng);
      const Quaternion lhs = (a * b) * c, rhs = a * (b * c);
      CHECK(qdist(lhs, rhs) <= 1e-12 * std::max(1.0, norm(lhs)));
    }
  }

  TEST_CASE("norm basics and the four squares identity") {
    CHECK(norm(Quaternion{1, 1, 1, 1}) == doctest::Approx(2.0).epsilon(1e-14));
    const Quaternion q1{1, 2, 3, 4}, q2{5, 6, 7, 8};
    CHECK(norm_sq(q1) == doctest::Approx(30.0));
    CHECK(norm_sq(q2) == doctest::Approx(174.0));
    CHECK(norm_sq(q1 * q2) == doctest::Approx(5220.0).epsilon(1e-13));

    Rng rng(13);
    for (int it = 0; it < 10000; ++it) {
      const Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
      const double lhs = norm_sq(a * b), rhs = norm_sq(a) * norm_sq(b);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
  }

  TEST_CASE("conjugation is an anti-homomorphism and an involution") {
    Rng rng(14);
    for (int it = 0; it < 500; ++it) {
      const Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
      CHECK(qdist(conjugate(a * b), conjugate(b) * conjugate(a)) <=
            1e-12 * std::max(1.0, norm(a) * norm(b)));
      CHECK(qdist(conjugate(conjugate(a)), a) == 0.0);
    }
  }

  TEST_CASE("scalar and vector parts partition a quaternion") {
    const Quaternion q{2, -1, 0.5, 3};
    const Quaternion rebuilt{q.scal(), q.vect()};
    CHECK(qdist(rebuilt, q) == 0.0);
  }

  TEST_CASE("left and right division invert multiplication") {
    Rng rng(15);
    for (int it = 0; it < 100; ++it) {
      const Quaternion q = random_quaternion(rng);
      if (norm(q) < 1e-6) continue;
      CHECK(qdist(divide_left(q, q), Quaternion{1, 0, 0, 0}) <= 1e-13);
      CHECK(qdist(divide_right(q, q), Quaternion{1, 0, 0, 0}) <= 1e-13);
      const Quaternion p = random_quaternion(rng);
      // Q_L solves X q = p in the left-division convention
      CHECK(qdist(divide_left(p, q) * q, p) <= 1e-11 * std::max(1.0, norm(p)));
      CHECK(qdist(q * divide_right(p, q), p) <= 1e-11 * std::max(1.0, norm(p)));
    }
    CHECK_THROWS_AS(divide_left(Quaternion{1, 0, 0, 0}, Quaternion{}), std::domain_error);
    CHECK_THROWS_AS(divide_right(Quaternion{1, 0, 0, 0}, Quaternion{}), std::domain_error);
  }

  TEST_CASE("epsilon-delta contraction holds exhaustively") {
    for (int n = 0; n < 3; ++n)
      for (int m = 0; m < 3; ++m) {
        double sum = 0.0;
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) sum += levi_civita(j, k, n) * levi_civita(j, k, m);
        CHECK(sum == 2.0 * kronecker(n, m));
      }
  }

  TEST_CASE("levi_civita is totally antisymmetric with eps(0,1,2) = 1") {
    CHECK(levi_civita(0, 1, 2) == 1.0);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int n = 0; n < 3; ++n) {
          CHECK(levi_civita(j, k, n) == -levi_civita(k, j, n));
          CHECK(levi_civita(j, k, n) == -levi_civita(j, n, k));
        }
  }

  TEST_CASE("canonical text form") {
    CHECK(to_string(Quaternion{1, 2, -3, 0}) == "1 + 2 i - 3 j + 0 k");
  }

  TEST_CASE("biquaternion norm on good elements") {
    CHECK(bq_norm_sq(Biquaternion::from_parts({0, 0, 0}, {0, 0, 2})) == doctest::Approx(4.0));
    CHECK(bq_norm_sq(Biquaternion::from_parts({1, 0, 0}, {0, 2, 0})) == doctest::Approx(3.0));
  }

  TEST_CASE("biquaternion norm is undefined when a.b != 0") {
    const Biquaternion u = Biquaternion::from_parts({1, 0, 0}, {1, 0, 0});
    CHECK_THROWS_AS(bq_norm_sq(u), NormUndefinedError);
    try {
      bq_norm_sq(u);
    } catch (const NormUndefinedError& e) {
      CHECK(e.residual == doctest::Approx(1.0));
    }
  }

  TEST_CASE("biquaternion norm is undefined with a scalar part") {
    Biquaternion u = Biquaternion::from_parts({0, 0, 0}, {0, 0, 1});
    u.s = cplx{0.5, 0.0};
    CHECK_THROWS_AS(bq_norm_sq(u), NormUndefinedError);
  }

  TEST_CASE("biquaternion product reduces to the real product on real input") {
    Rng rng(16);
    for (int it = 0; it < 50; ++it) {
      const Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
      const Biquaternion ba{cplx{a.a, 0}, {cplx{a.b, 0}, cplx{a.c, 0}, cplx{a.d, 0}}};
      const Biquaternion bb{cplx{b.a, 0}, {cplx{b.b, 0}, cplx{b.c, 0}, cplx{b.d, 0}}};
      const Biquaternion prod = ba * bb;
      const Quaternion want = a * b;
      CHECK(std::abs(prod.s - cplx{want.a, 0}) <= 1e-12 * std::max(1.0, norm(want)));
      CHECK(std::abs(prod.v[0] - cplx{want.b, 0}) <= 1e-12 * std::max(1.0, norm(want)));
      CHECK(std::abs(prod.v[1] - cplx{want.c, 0}) <= 1e-12 * std::max(1.0, norm(want)));
      CHECK(std::abs(prod.v[2] - cplx{want.d, 0}) <= 1e-12 * std::max(1.0, norm(want)));
    }
  }
}
