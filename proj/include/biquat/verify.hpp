#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "biquat/connection.hpp"
#include "biquat/eigenstructure.hpp"
#include "biquat/ephemeris.hpp"
#include "biquat/field.hpp"
#include "biquat/frenet.hpp"
#include "biquat/mechanics.hpp"
#include "biquat/quaternion.hpp"
#include "biquat/random.hpp"
#include "biquat/relativity.hpp"
#include "biquat/transform.hpp"
#include "biquat/triad.hpp"

namespace biquat::verify {

/// One named identity check: pass is value <= threshold unless a window
/// check set it explicitly.
struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

inline Check bound(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, value <= threshold};
}

namespace detail {

inline Quaternion random_quaternion(Rng& rng, double lo = -10.0, double hi = 10.0) {
  return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

inline SpinorMap random_sl2c(Rng& rng) {
  Mat m(2);
  do {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)};
  } while (std::abs(m.det()) < 0.2);
  return SpinorMap::normalized(m);
}

inline Rotor random_complex_rotor(Rng& rng, double imag_scale = 0.5) {
  auto ang = [&] { return cplx{rng.uniform(-1.0, 1.0), imag_scale * rng.uniform(-1.0, 1.0)}; };
  return rotor_from_angles(ang(), ang(), ang());
}

}  // namespace detail

/// Four-squares, associativity, conjugation, tensor-form agreement and the
/// epsilon-delta contraction, on seeded random quaternions.
inline std::vector<Check> algebra_checks(uint64_t seed, int pairs = 10000) {
  Rng rng(seed);
  double four_squares = 0.0, assoc = 0.0, conj_hom = 0.0, tensor = 0.0;
  for (int it = 0; it < pairs; ++it) {
    const Quaternion a = detail::random_quaternion(rng), b = detail::random_quaternion(rng);
    const double scale = std::max(1.0, norm_sq(a) * norm_sq(b));
    four_squares =
        std::max(four_squares, std::abs(norm_sq(a * b) - norm_sq(a) * norm_sq(b)) / scale);
    const double nscale = std::max(1.0, norm(a) * norm(b));
    conj_hom = std::max(conj_hom,
                        norm(conjugate(a * b) - conjugate(b) * conjugate(a)) / nscale);
    tensor = std::max(tensor, norm(a * b - mul_tensor_form(a, b)) / nscale);
    if (it % 10 == 0) {
      const Quaternion c = detail::random_quaternion(rng);
      const Quaternion lhs = (a * b) * c, rhs = a * (b * c);
      assoc = std::max(assoc, norm(lhs - rhs) / std::max(1.0, norm(lhs)));
    }
  }
  double eps_delta = 0.0;
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m) {
      double sum = 0.0;
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) sum += levi_civita(j, k, n) * levi_civita(j, k, m);
      eps_delta = std::max(eps_delta, std::abs(sum - 2.0 * kronecker(n, m)));
    }
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0};
  const double witness = norm(i * j - j * i);  // must be far from zero

  double division = 0.0;
  for (int it = 0; it < 200; ++it) {
    const Quaternion p = detail::random_quaternion(rng), q = detail::random_quaternion(rng);
    if (norm(q) < 1e-3) continue;
    const double scale = std::max(1.0, norm(p));
    division = std::max(division, norm(divide_left(p, q) * q - p) / scale);
    division = std::max(division, norm(q * divide_right(p, q) - p) / scale);
  }

  // good biquaternion norms survive hyperbolic rotations of the components
  double bq_invariance = 0.0;
  const Rotor h3 = h_rotation(3, 0.7);
  for (int it = 0; it < 200; ++it) {
    const Vec3 a{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    Vec3 w{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Vec3 b = w - (dot(w, a) / dot(a, a)) * a;
    const Biquaternion u = Biquaternion::from_parts(a, b);
    Biquaternion moved = u;
    for (int k = 0; k < 3; ++k) {
      moved.v[k] = cplx{};
      for (int n = 0; n < 3; ++n) moved.v[k] += h3.o(k, n) * u.v[n];
    }
    bq_invariance = std::max(bq_invariance, std::abs(bq_norm_sq(moved) - bq_norm_sq(u)));
  }

  return {bound("four-squares identity", four_squares, 1e-12),
          bound("associativity", assoc, 1e-12),
          bound("conjugation anti-homomorphism", conj_hom, 1e-12),
          bound("tensor-form product agreement", tensor, 1e-12),
          bound("epsilon-delta contraction", eps_delta, 0.0),
          bound("left/right division inverts the product", division, 1e-11),
          bound("good biquaternion norm invariance", bq_invariance, 1e-12),
          {"noncommutativity witness |ij - ji|", witness, 2.0, witness == 2.0}};
}

/// Triads from random traceless pairs, plus the rank-doubled checks.
inline std::vector<Check> representation_checks(uint64_t seed, int triads = 1000) {
  Rng rng(seed);
  double rule = 0.0, dets = 0.0, doubled = 0.0;
  for (int it = 0; it < triads; ++it) {
    const UnitTriad t = triad_from_traceless(sample_traceless_pair(rng));
    const TriadReport rep = verify_triad(t);
    rule = std::max(rule, rep.worst());
    dets = std::max(dets, std::abs((t.q[0] * t.q[1]).det() - 1.0));
    if (it % 50 == 0) doubled = std::max(doubled, verify_triad(rank_double(t)).worst());
  }
  doubled = std::max(doubled, verify_triad(rank_double(rank_double(pauli_triad()))).worst());
  return {bound("triad multiplication rule", rule, 1e-10),
          bound("unit determinant products", dets, 1e-10),
          bound("rank-doubled triads over the reals", doubled, 1e-10)};
}

/// Form-invariance under both transformation types, the O/U correlation
/// roundtrip, Q-vector invariance and group closure.
inline std::vector<Check> transform_checks(uint64_t seed, int samples = 300) {
  Rng rng(seed);
  const UnitTriad pauli = pauli_triad();
  double spinor_inv = 0.0, vector_inv = 0.0, roundtrip = 0.0, qvector = 0.0, closure = 0.0;
  for (int it = 0; it < samples; ++it) {
    const SpinorMap u = detail::random_sl2c(rng);
    spinor_inv = std::max(spinor_inv, verify_triad(spinor_transform(u, pauli)).worst());
    const Rotor o = detail::random_complex_rotor(rng);
    vector_inv = std::max(vector_inv, verify_triad(vector_transform(o, pauli)).worst());

    const Rotor from_u = o_from_u(u);
    if (std::abs(from_u.o.trace() + 1.0) > 1e-3) {
      const SpinorMap back = u_from_o(from_u);
      roundtrip = std::max(roundtrip, std::min(max_abs_diff(back.u, u.u),
                                               max_abs_diff(back.u, -u.u)));
    }

    const Rotor r = rotor_from_angles(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                                      rng.uniform(-1.5, 1.5));
    const Vec3 a{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const UnitTriad rotated = vector_transform(r, pauli);
    Mat lhs(2), rhs(2);
    for (int k = 0; k < 3; ++k) {
      lhs += a[k] * pauli.q[k];
      cplx ak{};
      for (int n = 0; n < 3; ++n) ak += r.o(k, n) * a[n];
      rhs += ak * rotated.q[k];
    }
    qvector = std::max(qvector, max_abs_diff(lhs, rhs));

    const Rotor o2 = detail::random_complex_rotor(rng);
    const Mat prod = o.o * o2.o;
    closure = std::max(closure, std::max(orthogonality_residual(prod),
                                         std::abs(prod.det() - 1.0)));
  }
  double xyz_consistency = 0.0;
  for (int it = 0; it < 100; ++it) {
    const cplx a{rng.uniform(-0.4, 0.4), rng.uniform(-0.2, 0.2)};
    const cplx bb{rng.uniform(-0.4, 0.4), rng.uniform(-0.2, 0.2)};
    const cplx g{rng.uniform(-0.4, 0.4), rng.uniform(-0.2, 0.2)};
    const Rotor via_xyz = rotor_from_xyz(-std::sin(a) * std::cos(bb),
                                         -std::sin(g) * std::cos(bb), std::sin(bb));
    xyz_consistency =
        std::max(xyz_consistency, max_abs_diff(via_xyz.o, rotor_from_angles(a, bb, g).o));
  }
  double h_additivity = 0.0;
  for (int axis : {1, 2, 3}) {
    const double p1 = 0.35, p2 = -0.8;
    h_additivity = std::max(h_additivity,
                            max_abs_diff((h_rotation(axis, p1) * h_rotation(axis, p2)).o,
                                         h_rotation(axis, p1 + p2).o));
  }
  return {bound("form-invariance under SL(2,C)", spinor_inv, 1e-10),
          bound("form-invariance under SO(3,C)", vector_inv, 1e-10),
          bound("u/o correlation roundtrip", roundtrip, 1e-10),
          bound("Q-vector invariance", qvector, 1e-10),
          bound("rotor group closure", closure, 1e-10),
          bound("x,y,z parameterization consistency", xyz_consistency, 1e-12),
          bound("hyperbolic rapidity additivity", h_additivity, 1e-12)};
}

/// Eigenvalues, projector algebra, the closed-form invariant and its
/// transport invariance, and eigen-vs-rotor projections.
inline std::vector<Check> eigen_checks(uint64_t seed, int samples = 1000) {
  Rng rng(seed);
  const UnitTriad pauli = pauli_triad();
  double eigen_res = 0.0, projector_res = 0.0, projection = 0.0;
  for (int it = 0; it < samples; ++it) {
    const UnitTriad t = triad_from_traceless(sample_traceless_pair(rng));
    const Mat q = t.q[rng.next() % 3];
    const EigenBundle b = eigen_bundle(q);
    const cplx i{0, 1};
    const Spinor qp = mul(q, b.psi_plus), qm = mul(q, b.psi_minus);
    eigen_res = std::max({eigen_res, std::abs(qp[0] - i * b.psi_plus[0]),
                          std::abs(qp[1] - i * b.psi_plus[1]),
                          std::abs(qm[0] + i * b.psi_minus[0]),
                          std::abs(qm[1] + i * b.psi_minus[1])});
    const Mat cp = projector(b, Parity::Plus), cm = projector(b, Parity::Minus);
    projector_res = std::max({projector_res, max_abs_diff(cp * cp, cp), std::abs(cp.det()),
                              std::abs(cp.trace() - 1.0), (cp * cm).max_abs(),
                              max_abs_diff(cp + cm, Mat::identity(2)),
                              max_abs_diff(reconstruct_unit(cp, Parity::Plus), q)});
    if (it % 10 == 0) {
      const Rotor r = rotor_from_angles(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                                        rng.uniform(-1.5, 1.5));
      const UnitTriad rotated = vector_transform(r, pauli);
      const Vec3 a{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
      for (int jj = 0; jj < 3; ++jj) {
        const EigenBundle bj = eigen_bundle(pauli.q[jj]);
        const cplx via_eigen = project_qvector(a, rotated, bj, Parity::Plus);
        double via_rotor = 0.0;
        for (int k = 0; k < 3; ++k) via_rotor += a[k] * r.o(k, jj).real();
        projection = std::max(projection, std::abs(via_eigen - via_rotor));
      }
    }
  }
  const EigenBundle b1 = eigen_bundle(pauli.q[0]), b2 = eigen_bundle(pauli.q[1]);
  const cplx sigma = invariant_sigma(b1, b2, Parity::Plus);
  const double sigma_err = std::abs(sigma - cplx{0.5, -0.5});
  double transport = 0.0;
  for (int it = 0; it < 100; ++it) {
    const SpinorMap u = detail::random_sl2c(rng);
    transport = std::max(transport,
                         std::abs(invariant_sigma(transform_bundle(b1, u),
                                                  transform_bundle(b2, u), Parity::Plus) -
                                  sigma));
  }
  const auto invariants = enumerate_invariants({b1, b2, eigen_bundle(pauli.q[2])});

  double third = 0.0;
  for (int it = 0; it < 50; ++it) {
    const UnitTriad t = it == 0 ? pauli : triad_from_traceless(sample_traceless_pair(rng));
    const EigenBundle t3 =
        third_eigenfunctions(eigen_bundle(t.q[0]), eigen_bundle(t.q[1]), t.q[0], t.q[1]);
    const Mat q3 = t.q[0] * t.q[1];
    const cplx i{0, 1};
    const Spinor rp = mul(q3, t3.psi_plus), rm = mul(q3, t3.psi_minus);
    third = std::max({third, std::abs(rp[0] - i * t3.psi_plus[0]),
                      std::abs(rp[1] - i * t3.psi_plus[1]),
                      std::abs(rm[0] + i * t3.psi_minus[0]),
                      std::abs(rm[1] + i * t3.psi_minus[1])});
  }
  const ThirdEigenCoefficients tc = third_eigenfunction_coefficients(pauli.q[0], pauli.q[1]);
  const double third_const =
      std::max(std::abs(tc.psi_plus[0] - std::sqrt(cplx{0, 1})),
               std::abs(tc.psi_plus[1] - std::sqrt(cplx{0, -1})));

  return {bound("eigenvalue residual", eigen_res, 1e-10),
          bound("projector algebra", projector_res, 1e-10),
          bound("sigma_12^+ closed form", sigma_err, 1e-12),
          bound("sigma invariance under transport", transport, 1e-10),
          bound("eigen vs rotor projection", projection, 1e-10),
          bound("third eigenfunctions of q1 q2", third, 1e-10),
          bound("third eigenfunction closed-form coefficients", third_const, 1e-12),
          {"invariant count", static_cast<double>(invariants.size()), 24.0,
           invariants.size() == 24}};
}

/// Connection three ways, second-order convergence, curvature of metric
/// connections, and the Frenet helix.
inline std::vector<Check> connection_checks() {
  const SpinorField u_field = [](const std::vector<double>& c) {
    const UnitTriad p = pauli_triad();
    const cplx th1{0.4 * std::sin(c[0]), 0.1 * std::cos(c[0])};
    const double th2 = 0.3 * c[0];
    const Mat u1 = std::cos(th1) * Mat::identity(2) + std::sin(th1) * p.q[0];
    const Mat u2 = std::cos(th2) * Mat::identity(2) + std::sin(th2) * p.q[1];
    return SpinorMap(u1 * u2);
  };
  const RotorField o_field = [&](const std::vector<double>& c) { return o_from_u(u_field(c)); };
  const TriadField basis = [&](const std::vector<double>& c) {
    return spinor_transform(u_field(c), pauli_triad());
  };
  const ParameterGrid grid = ParameterGrid::uniform_1d("t", 0.1, 1e-3, 5);
  const ConnectionField a = connection_from_basis(basis, grid);
  const ConnectionField b = connection_from_spinor(u_field, grid);
  const ConnectionField c = connection_from_rotor(o_field, grid);
  const double three_way = std::max(a.max_diff(b), std::max(a.max_diff(c), b.max_diff(c)));

  auto rate_error = [&o_field](double step) {
    const ParameterGrid g = ParameterGrid::uniform_1d("t", 0.1, step, 5);
    const ConnectionField conn = connection_from_rotor(o_field, g, 1.0);
    // against a much finer evaluation of the same derivative
    double err = 0.0;
    for (size_t p = 0; p < g.num_points(); ++p) {
      const auto coords = g.coords(p);
      const Mat fine =
          central_diff([&](const std::vector<double>& cc) { return o_field(cc).o; }, coords, 0,
                       step / 64.0) *
          o_field(coords).o.transpose();
      Omega3 fo{};
      for (int k = 0; k < 3; ++k)
        for (int n = 0; n < 3; ++n) fo[k][n] = fine(k, n);
      err = std::max(err, max_abs(conn.at(p, 0) - fo));
    }
    return err;
  };
  const double ratio = rate_error(2e-2) / rate_error(1e-2);

  const RotorField surface = [](const std::vector<double>& c) {
    return rotor_from_angles(0.6 * c[0] + 0.4 * std::sin(c[1]),
                             0.3 * std::cos(c[0]) + 0.2 * c[1], 0.25 * c[0] * c[1]);
  };
  const ParameterGrid grid2({Axis{"x", 0.1, 1e-3, 5}, Axis{"y", -0.2, 1e-3, 5}});
  const double metric_curv = curvature(metric_connection(surface, 1e-3), grid2).max_abs();

  const double helix_a = 1.0, helix_b = 0.5, ds = 1e-3;
  const double hc = std::sqrt(helix_a * helix_a + helix_b * helix_b);
  std::vector<Vec3> pts;
  for (int i = 0; i < 13; ++i) {
    const double s = 0.4 + i * ds;
    pts.push_back({helix_a * std::cos(s / hc), helix_a * std::sin(s / hc), helix_b * s / hc});
  }
  const FrenetResult fr = frenet_frame(pts, ds);
  double frenet_err = 0.0;
  for (double r1 : fr.r1) frenet_err = std::max(frenet_err, std::abs(r1 - helix_a / (hc * hc)));
  for (size_t i = 1; i + 1 < fr.r2.size(); ++i)
    frenet_err = std::max(frenet_err, std::abs(fr.r2[i] - helix_b / (hc * hc)));

  // transformation law against the directly transformed basis
  const RotorField law_rotor = [](const std::vector<double>& cc) {
    return rotor_from_angles(0.5 * cc[0], 0.0, 0.2);
  };
  const ConnectionField moved = transform_connection(law_rotor, a);
  const TriadField transformed = [&](const std::vector<double>& cc) {
    return vector_transform(law_rotor(cc), basis(cc));
  };
  const double law = moved.max_diff(connection_from_basis(transformed, grid));

  // qualitative predicates on the metric surface field
  const ConnectionField surface_conn = connection_from_rotor(surface, grid2);
  const QSpaceReport pred =
      qspace_predicates(surface_conn, curvature(metric_connection(surface, 1e-3), grid2));
  const bool predicates_ok = pred.torsion_present && pred.metric_compatible;

  return {bound("connection three-way agreement", three_way, 1e-6),
          {"finite-difference convergence ratio", ratio, 6.0, ratio > 2.5 && ratio < 6.0},
          bound("metric curvature magnitude", metric_curv, 1e-5),
          bound("connection antisymmetry", std::max(a.antisymmetry_residual(),
                                                    b.antisymmetry_residual()), 1e-10),
          bound("frenet helix curvatures", frenet_err, 1e-4),
          bound("transformation law consistency", law, 1e-6),
          {"q-space predicates on a metric field", predicates_ok ? 1.0 : 0.0, 1.0,
           predicates_ok}};
}

/// Rotating-frame integration against the inertial oracle, the oscillator
/// against its closed form, and the regime boundary.
inline std::vector<Check> mechanics_checks() {
  const double omega = 1.3;
  RotatingFrameSpec spec;
  spec.omega = [omega](double) { return Vec3{0, 0, omega}; };
  spec.omega_dot = [](double) { return Vec3{0, 0, 0}; };
  spec.force = [](double, const Vec3&, const Vec3&) { return Vec3{0, 0, 0}; };
  const Vec3 x0{0.8, -0.4, 0.2}, v0_inertial{0.05, 0.12, 0.03};
  const Vec3 v0 = v0_inertial + Vec3{omega * x0[1], -omega * x0[0], 0.0};
  const double t_end = 10.0 * 2.0 * M_PI / omega;
  std::vector<double> times;
  for (int i = 0; i <= 100; ++i) times.push_back(t_end * i / 100.0);
  const Trajectory tr = integrate_rotating_frame(spec, x0, v0, times);
  double frame_err = 0.0;
  for (size_t i = 0; i < tr.t.size(); ++i) {
    const double t = tr.t[i];
    const Vec3 inertial = x0 + t * v0_inertial;
    const double cc = std::cos(omega * t), ss = std::sin(omega * t);
    const Vec3 expect{cc * inertial[0] + ss * inertial[1],
                      -ss * inertial[0] + cc * inertial[1], inertial[2]};
    frame_err = std::max(frame_err, norm(tr.x[i] - expect));
  }

  double osc_err = 0.0;
  for (const auto& [m, k, w, l] : std::vector<std::array<double, 4>>{
           {1.0, 4.0, 1.0, 0.3}, {2.0, 2.0, 1.0, 0.0}, {1.0, 1.0, 1.5, 0.2}}) {
    const OscillatorSolution sol = rotating_oscillator(m, k, w, l, 1.2, -0.3);
    const double period = sol.w > 1e-9 ? 2.0 * M_PI / sol.w : 1.0;
    const double horizon = std::min(10.0 * period, 20.0);
    const OdeRhs rhs = [&, k = k, m = m, w = w, l = l](double, const OdeState& y) {
      return OdeState{y[1], y[0] * w * w - (k / m) * (y[0] - l)};
    };
    std::vector<double> ts;
    for (int i = 0; i <= 40; ++i) ts.push_back(horizon * i / 40.0);
    const OdeSolution num = integrate_ode(rhs, {1.2, -0.3}, ts);
    double scale = 1.0;
    for (size_t i = 0; i < num.times.size(); ++i)
      scale = std::max(scale, std::abs(sol.r(num.times[i])));
    for (size_t i = 0; i < num.times.size(); ++i)
      osc_err = std::max(osc_err, std::abs(num.states[i][0] - sol.r(num.times[i])) / scale);
  }

  const double m = 1.0, k = 4.0, l = 0.2, w_crit = 2.0, eps = 1e-6, horizon = 2.0;
  const double above = rotating_oscillator(m, k, w_crit + eps, l, 1.0, 0.3).r(horizon);
  const double at = rotating_oscillator(m, k, w_crit, l, 1.0, 0.3).r(horizon);
  const double below = rotating_oscillator(m, k, w_crit - eps, l, 1.0, 0.3).r(horizon);
  const bool regimes_ok =
      rotating_oscillator(m, k, w_crit + eps, l, 1, 0).regime == OscillatorRegime::Exponential &&
      rotating_oscillator(m, k, w_crit, l, 1, 0).regime == OscillatorRegime::Polynomial &&
      rotating_oscillator(m, k, w_crit - eps, l, 1, 0).regime == OscillatorRegime::Harmonic;

  return {bound("rotating frame vs inertial oracle", frame_err, 1e-7),
          bound("oscillator analytic vs numeric", osc_err, 1e-8),
          bound("regime boundary continuity",
                std::max(std::abs(above - at), std::abs(below - at)), 1e-4),
          {"regime classification at the boundary", regimes_ok ? 1.0 : 0.0, 1.0, regimes_ok}};
}

/// Headline relativity numbers at desk scale.
inline std::vector<Check> relativity_checks() {
  const double psi6 = std::atanh(0.6);
  const RelFrame f = boost(RelFrame::rest_frame(), 3, psi6);
  const double dilation_err = std::abs(clock_factor(f, 3) - 1.25);

  double small_v = 0.0;
  for (double v : {0.05, 0.1, 0.2}) {
    const double exact = thomas_simple(1.0, std::atanh(v));
    const double leading = -0.5 * v * v;
    small_v = std::max(small_v, std::abs(exact - leading) / (std::abs(leading) * v * v));
  }

  namespace eph = biquat::ephemeris;
  auto arcmin = [](double rad) { return rad * 180.0 * 60.0 / M_PI; };
  const double phobos = arcmin(satellite_deviation(
      2.0 * M_PI / eph::phobos_period_s, eph::earth_orbital_speed / eph::speed_of_light,
      eph::mars_orbital_speed / eph::speed_of_light, eph::century_s));
  const double metis = arcmin(satellite_deviation(
      2.0 * M_PI / eph::metis_period_s, eph::earth_orbital_speed / eph::speed_of_light,
      eph::jupiter_orbital_speed / eph::speed_of_light, eph::century_s));

  const double omega = 1.0, psi = 0.3;
  const ThomasResult tg = thomas_general([omega](double t) { return omega * t; },
                                         [psi](double) { return psi; }, 0.0, 2.0, 4001);
  double reduction = 0.0;
  for (double w : tg.omega_t)
    reduction = std::max(reduction, std::abs(w - thomas_simple(omega, psi)));

  Rng rng(99);
  double interval_inv = 0.0, additivity = 0.0;
  for (int it = 0; it < 200; ++it) {
    const Vec3 dx{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    Vec3 w{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const BQInterval i0{dx, w - (dot(w, dx) / dot(dx, dx)) * dx};
    const double before = interval_square(i0);
    BQInterval moved = i0;
    for (int step = 0; step < 3; ++step) {
      const int axis = 1 + static_cast<int>(rng.next() % 3);
      if (rng.next() % 2 == 0)
        moved = transform_interval(h_rotation(axis, rng.uniform(-1, 1)), moved);
      else
        moved = transform_interval(Rotor(elementary_rotation(axis, rng.uniform(-3, 3))), moved);
    }
    interval_inv = std::max(interval_inv, std::abs(interval_square(moved) - before) /
                                              std::max(1.0, std::abs(before)));
    const double p1 = rng.uniform(-1, 1), p2 = rng.uniform(-1, 1);
    const RelFrame two = boost(boost(RelFrame::rest_frame(), 3, p1), 3, p2);
    additivity = std::max(additivity, std::abs(rapidity(two, 3) - (p1 + p2)));
    const double v1 = std::tanh(p1), v2 = std::tanh(p2);
    additivity = std::max(additivity,
                          std::abs(velocity(two, 3) - (v1 + v2) / (1.0 + v1 * v2)));
  }

  return {bound("time dilation at V = 0.6 vs 1.25", dilation_err, 1e-12),
          bound("thomas small-V limit (relative / V^2)", small_v, 1.0),
          bound("phobos deviation vs 20 arcmin (relative)", std::abs(phobos - 20.0) / 20.0, 0.15),
          bound("jupiter moon deviation vs 12 arcmin (relative)",
                std::abs(metis - 12.0) / 12.0, 0.15),
          bound("thomas general-to-simple reduction", reduction, 1e-6),
          bound("interval invariance", interval_inv, 1e-12),
          bound("rapidity additivity and velocity addition", additivity, 1e-12)};
}

/// The Mercury figure is computed and reported, never tuned; the quoted
/// 2.7 arcsec/century is not reproduced by the precession formula alone.
struct MercuryReport {
  double omega_t = 0.0;                 // rad/s
  double accumulated_arcsec = 0.0;      // per century
  double quoted_arcsec = 2.7;
  bool documented_discrepancy = false;
};

inline MercuryReport mercury_report() {
  namespace eph = biquat::ephemeris;
  MercuryReport rep;
  const double omega = 2.0 * M_PI / eph::mercury_period_s;
  const double v = eph::mercury_orbital_speed / eph::speed_of_light;
  rep.omega_t = thomas_simple(omega, std::atanh(v));
  rep.accumulated_arcsec = std::abs(rep.omega_t) * eph::century_s * 180.0 * 3600.0 / M_PI;
  rep.documented_discrepancy =
      std::abs(rep.accumulated_arcsec - rep.quoted_arcsec) > 0.1 * rep.quoted_arcsec;
  return rep;
}

/// Field coincidences at their declared tolerances.
inline std::vector<Check> field_checks() {
  EMField wave;
  wave.E = [](const Vec3& x, double t) { return Vec3{0.0, std::cos(x[2] - t), 0.0}; };
  wave.B = [](const Vec3& x, double t) { return Vec3{std::cos(x[2] - t), 0.0, 0.0}; };
  const SpacetimeGrid grid{{0.3, -0.2, 0.4}, 0.15, 1e-3, {3, 3, 3}, 3};
  const double fueter_wave = fueter_residual(wave, grid).max_residual;

  EMField smooth;
  smooth.E = [](const Vec3& x, double t) {
    return Vec3{0.3 * std::sin(x[0] + 2.0 * t), 0.2 * x[1] * x[2], 0.4 * std::cos(x[2] - x[0])};
  };
  smooth.B = [](const Vec3& x, double t) {
    return Vec3{0.1 * x[0] * x[0], 0.5 * std::sin(x[2] + t), 0.2 * std::cos(x[1] * 2.0)};
  };
  const double matching = maxwell_equivalence_report(smooth, grid).max_matching_gap;

  QuantumSetup setup;
  setup.potential = [](const Vec3& x) { return 0.5 * cross(Vec3{0, 0, 0.8}, x); };
  setup.wavefunction = [](const Vec3& x) {
    const double g = std::exp(-0.5 * dot(x, x));
    return Spinor{g * (1.0 + 0.2 * x[1]), g * (cplx{0.3, -0.1} + 0.1 * x[2])};
  };
  const PauliReport uniform_b =
      pauli_check(setup, SpatialGrid{{0.2, -0.1, 0.3}, 5e-4, {5, 5, 5}});

  QuantumSetup generic;
  generic.potential = [](const Vec3& x) {
    return Vec3{0.2 * std::sin(x[1]), 0.3 * x[2] * x[0], 0.25 * std::cos(x[0])};
  };
  generic.wavefunction = [](const Vec3& x) {
    const double g = std::exp(-0.5 * dot(x, x));
    return Spinor{g * (0.8 + 0.3 * x[0]), g * (cplx{0.2, 0.4} + 0.2 * x[1])};
  };
  const double pauli_gap =
      pauli_check(generic, SpatialGrid{{0.25, -0.15, 0.35}, 1e-3, {5, 5, 5}}).max_operator_gap;

  const ConnectionFn affine = [](const std::vector<double>& c, int a) {
    Omega3 o{};
    const double f = 0.4 * std::sin(c[0] + 2.0 * c[1]) + 0.2 * c[2] * (a + 1);
    const double g = 0.3 * std::cos(3.0 * c[2]) + 0.1 * c[a];
    o[0][1] = f;
    o[1][0] = -f;
    o[1][2] = g;
    o[2][1] = -g;
    return o;
  };
  const ParameterGrid grid3(
      {Axis{"x", 0.2, 1e-3, 5}, Axis{"y", -0.1, 1e-3, 5}, Axis{"z", 0.4, 1e-3, 5}});
  const YangMillsReport ym = ym_strength_check(affine, grid3);

  const RotorField rotor = [](const std::vector<double>& c) {
    return rotor_from_angles(0.5 * c[0] + 0.3 * std::sin(c[1]), 0.4 * std::cos(c[2]),
                             0.2 * c[0] * c[2]);
  };
  const double metric_strength =
      ym_strength_check(metric_connection(rotor, 1e-3), grid3).max_strength;

  return {bound("fueter residual on the analytic plane wave", fueter_wave, 1e-6),
          bound("fueter/maxwell component matching", matching, 1e-10),
          bound("pauli operator identity gap", pauli_gap, 1e-6),
          bound("bohr magneton coefficient gap", uniform_b.coefficient_gap, 1e-6),
          bound("yang-mills two-way strength gap", ym.two_way_gap, 1e-5),
          bound("metric connection strength", metric_strength, 1e-5)};
}

}  // namespace biquat::verify
