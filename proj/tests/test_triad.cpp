#include "biquat/triad.hpp"

#include "biquat/random.hpp"
#include "doctest.h"

using namespace biquat;

namespace {

Mat sigma1() {
  Mat m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Mat sigma2() {
  Mat m(2);
  m(0, 1) = cplx{0, -1};
  m(1, 0) = cplx{0, 1};
  return m;
}

Mat sigma3() {
  Mat m(2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Mat random_complex_matrix(Rng& rng, int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return m;
}

}  // namespace

TEST_SUITE("qrep") {
  TEST_CASE("pauli triad is exact") {
    const UnitTriad t = pauli_triad();
    const TriadReport rep = verify_triad(t);
    CHECK(rep.max_rule_deviation == 0.0);
    CHECK(rep.max_det_deviation == 0.0);
    CHECK(rep.max_trace_deviation == 0.0);

    // q3 = -i diag(1,-1)
    CHECK(t.q[2](0, 0) == cplx{0, -1});
    CHECK(t.q[2](1, 1) == cplx{0, 1});
    CHECK(max_abs_diff(t.q[0] * t.q[1], t.q[2]) == 0.0);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(t.q[k].trace()) == 0.0);
  }

  TEST_CASE("triad from the sigma1/sigma2 pair reproduces the Pauli triad") {
    const UnitTriad t = triad_from_traceless({sigma1(), sigma2()});
    const UnitTriad p = pauli_triad();
    for (int k = 0; k < 3; ++k) CHECK(max_abs_diff(t.q[k], p.q[k]) <= 1e-15);
  }

  TEST_CASE("triad from sigma1/sigma3 verifies by brute force") {
    const UnitTriad t = triad_from_traceless({sigma1(), sigma3()});
    // all nine products, rule checked directly
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Mat expected = -kronecker(j, k) * Mat::identity(2);
        for (int n = 0; n < 3; ++n) expected += levi_civita(j, k, n) * t.q[n];
        CHECK(max_abs_diff(t.q[j] * t.q[k], expected) <= 1e-14);
      }
  }

  TEST_CASE("degenerate or incompatible seeds are rejected") {
    Mat singular(2);
    singular(0, 1) = 1.0;  // det 0, traceless
    CHECK_THROWS_AS(triad_from_traceless({singular, sigma2()}), std::domain_error);

    // Tr(AB) != 0: A = sigma1, B = sigma1
    CHECK_THROWS_AS(triad_from_traceless({sigma1(), sigma1()}), std::domain_error);

    Mat with_trace = sigma1();
    with_trace(0, 0) = 0.5;
    CHECK_THROWS_AS(triad_from_traceless({with_trace, sigma2()}), std::invalid_argument);
  }

  TEST_CASE("random traceless pairs always give verified triads") {
    Rng rng(21);
    for (int it = 0; it < 1000; ++it) {
      const TracelessPair p = sample_traceless_pair(rng);
      const UnitTriad t = triad_from_traceless(p);
      CHECK(verify_triad(t).ok(1e-10));
      CHECK(std::abs((t.q[0] * t.q[1]).det() - 1.0) <= 1e-10);
    }
  }

  TEST_CASE("rank doubling the identity gives the identity") {
    CHECK(max_abs_diff(rank_double(Mat::identity(2)), Mat::identity(4)) == 0.0);
  }

  TEST_CASE("rank doubling maps i to the real 2x2 rotation block") {
    Mat just_i(1);
    just_i(0, 0) = cplx{0, 1};
    const Mat d = rank_double(just_i);
    CHECK(d(0, 0) == cplx{0, 0});
    CHECK(d(0, 1) == cplx{1, 0});
    CHECK(d(1, 0) == cplx{-1, 0});
    CHECK(d(1, 1) == cplx{0, 0});
  }

  TEST_CASE("rank doubling is a homomorphism") {
    Rng rng(22);
    for (int it = 0; it < 50; ++it) {
      const Mat x = random_complex_matrix(rng, 2), y = random_complex_matrix(rng, 2);
      CHECK(max_abs_diff(rank_double(x * y), rank_double(x) * rank_double(y)) <= 1e-13);
    }
  }

  TEST_CASE("doubled Pauli triad is real and still verifies") {
    const UnitTriad d = rank_double(pauli_triad());
    CHECK(d.dim() == 4);
    for (int k = 0; k < 3; ++k) CHECK(d.q[k].max_imag() == 0.0);
    CHECK(verify_triad(d).ok(1e-12));
  }

  TEST_CASE("doubling twice gives a real 8x8 triad obeying the rule") {
    const UnitTriad d = rank_double(rank_double(pauli_triad()));
    CHECK(d.dim() == 8);
    for (int k = 0; k < 3; ++k) CHECK(d.q[k].max_imag() == 0.0);
    CHECK(verify_triad(d).ok(1e-12));
  }

  TEST_CASE("verify_triad flags a broken triad") {
    UnitTriad t = pauli_triad();
    t.q[2] = -t.q[2];
    CHECK(verify_triad(t).max_rule_deviation > 1.0);
  }

  TEST_CASE("verify_triad reports deviations on a doubled random triad") {
    Rng rng(23);
    const UnitTriad t = rank_double(triad_from_traceless(sample_traceless_pair(rng)));
    CHECK(verify_triad(t).ok(1e-12));
  }
}
