#include <cmath>

#include "doctest.h"
#include "pbh/structures.hpp"

using namespace pbh;

namespace {

Eigen::Matrix4d g0() { return Eigen::Vector4d(1, 1, -1, -1).asDiagonal(); }

Eigen::Matrix4d j1() {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(1, 0) = 1, m(0, 1) = -1, m(3, 2) = 1, m(2, 3) = -1;
  return m;
}

Eigen::Matrix4d j2() {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(2, 0) = 1, m(0, 2) = 1, m(3, 1) = -1, m(1, 3) = -1;
  return m;
}

Eigen::VectorXd pt(double a, double b, double c, double e) {
  Eigen::VectorXd p(4);
  p << a, b, c, e;
  return p;
}

// Conformal rescale e^u g0 with u = sin x1 + 0.3 x2 x3.
Jet conformal_u(const JVec& x) { return sin(x[0]) + 0.3 * x[1] * x[2]; }
JMat conformal_metric(const JVec& x) { return JMat::constant(g0()) * exp(conformal_u(x)); }

}  // namespace

TEST_CASE("torus triple satisfies the split-quaternion table and compatibility") {
  const JMat a = JMat::constant(j1()), b = JMat::constant(j2()), c = a * b;
  CHECK(paraquaternion_defect(a, b, c) == 0.0);
  const JMat g = JMat::constant(g0());
  CHECK(compatibility_defect(g, a, 1.0).max_abs() == 0.0);
  CHECK(compatibility_defect(g, b, -1.0).max_abs() == 0.0);
  CHECK(compatibility_defect(g, c, -1.0).max_abs() == 0.0);
  CHECK(signature(g0()) == std::make_pair(2, 2));
}

TEST_CASE("Nijenhuis tensor: constant structures are integrable, a generic conjugate is not") {
  const JVec x = lift(pt(0.2, -0.4, 0.9, 0.1), 2);
  CHECK(nijenhuis_residual(JMat::constant(j1())) == 0.0);
  JMat A = JMat::identity(4);
  A(0, 1) += cos(x[1]);
  A(1, 0) += x[3];
  A(1, 3) += x[0];
  A(2, 2) += 2.0 * x[2];
  A(3, 0) -= sin(x[0]);
  Eigen::Matrix4d L;
  L << 1, 2, 0, 1, 0, 1, 3, 0, 1, 0, 1, 2, 0, 1, 0, 1;
  const JMat Jlin = JMat::constant(L * j1() * L.inverse());
  CHECK(nijenhuis_residual(Jlin) <= 1e-12);
  // A generic field conjugate of J0 is not integrable; N is nonzero and antisymmetric by construction.
  const JMat Jbad = A * JMat::constant(j1()) * inverse(A);
  CHECK(nijenhuis_residual(Jbad) > 1e-3);
}

TEST_CASE("Lee form of a conformal rescale is du") {
  const Eigen::VectorXd p = pt(0.3, 0.5, -0.2, 0.8);
  const JVec x = lift(p, 2);
  const JMat g = conformal_metric(x);
  const LeeSolution s = lee_form(g, JMat::constant(j1()));
  const JVec du = gradient(conformal_u(x));
  CHECK(max_abs(s.theta.to_covector() - du) <= 1e-12);
  CHECK(s.condition < 1e6);
  // theta ^ F - dF residual
  const Form F = fundamental_form(g, JMat::constant(j1()));
  CHECK((wedge(s.theta, F) - d(F)).max_abs() <= 1e-12);
  // Flat torus: theta = 0
  const LeeSolution flat = lee_form(JMat::constant(g0()), JMat::constant(j1()));
  CHECK(flat.theta.max_abs() == 0.0);
}

TEST_CASE("degenerate F is reported") {
  const JMat z = JMat::constant(Eigen::Matrix4d::Zero());
  CHECK_THROWS_AS(solve_lee(Form::from_matrix(z), Form(4, 3)), DegeneracyError);
}

TEST_CASE("Levi-Civita connection of a conformal metric matches the closed form") {
  const JVec x = lift(pt(0.7, -0.1, 0.4, 0.2), 2);
  const JMat g = conformal_metric(x);
  const Connection lc = levi_civita(g);
  // g = e^u g0: Gamma^k_ij = 1/2 (delta^k_i u_j + delta^k_j u_i - g0_ij g0^kl u_l)
  const JVec du = gradient(conformal_u(x));
  const Eigen::Matrix4d G0 = g0();
  double err = 0.0;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Jet e = 0.0;
        if (k == i) e += 0.5 * du[j];
        if (k == j) e += 0.5 * du[i];
        if (i == j) e -= 0.5 * G0(i, j) * G0(k, k) * du[k];
        err = std::max(err, std::abs((lc.c[k](i, j) - e).value()));
      }
  CHECK(err <= 1e-12);
  CHECK(torsion(lc) == 0.0);
  for (int i = 0; i < 4; ++i) CHECK(covariant_metric(lc, i, g).max_abs() <= 1e-12);
  const Connection flat = levi_civita(JMat::constant(g0()));
  for (const auto& c : flat.c) CHECK(c.max_abs() == 0.0);
}

TEST_CASE("Chern connection preserves g and J; equals Levi-Civita in the Kaehler case") {
  const JVec x = lift(pt(0.1, 0.2, 0.3, 0.4), 2);
  const JMat g = conformal_metric(x);
  const JMat J = JMat::constant(j1());
  const Connection D = chern_connection(g, J);
  for (int i = 0; i < 4; ++i) {
    CHECK(covariant_endo(D, i, J).max_abs() <= 1e-12);
    CHECK(covariant_metric(D, i, g).max_abs() <= 1e-12);
  }
  const JMat gf = JMat::constant(g0());
  const Connection Dk = chern_connection(gf, J), lc = levi_civita(gf);
  for (int k = 0; k < 4; ++k) CHECK((Dk.c[k] - lc.c[k]).max_abs() == 0.0);
}

TEST_CASE("Hermitian covariant-derivative formula three ways") {
  const JVec x = lift(pt(-0.3, 0.6, 0.2, 0.5), 2);
  const JMat g = conformal_metric(x);
  const JMat Jc = JMat::constant(j1());
  const Form F = fundamental_form(g, Jc);
  const Form dF = d(F);
  const auto lhs = nabla_J_lowered(levi_civita(g), g, Jc);
  const auto via_dF = nabla_J_from_dF(Jc, dF);
  const auto via_lee = nabla_J_from_lee(g, Jc, solve_lee(F, dF).theta.to_covector());
  for (int i = 0; i < 4; ++i) {
    CHECK((lhs[i] - via_dF[i]).max_abs() <= 1e-12);
    CHECK((lhs[i] - via_lee[i]).max_abs() <= 1e-12);
  }
  CHECK(lhs[0].max_abs() > 1e-3);
}

TEST_CASE("d^J F has no (3,0)+(0,3) part and vanishes for Kaehler data") {
  const JVec x = lift(pt(0.3, 0.1, -0.4, 0.6), 2);
  CHECK(d_pm_F(JMat::constant(g0()), JMat::constant(j1())).max_abs() == 0.0);
  const JMat g = conformal_metric(x);
  const JMat J = JMat::constant(j1());
  const Form dc = d_pm_F(g, J);
  // Conformal case: d^J F = -J^*(theta ^ F) = -(J^*theta) ^ F.
  const JVec theta = lee_form(g, J).theta.to_covector();
  const Form F = fundamental_form(g, J);
  const Form expect = -wedge(Form::from_covector(covector_times(theta, J)), F);
  CHECK((dc - expect).max_abs() <= 1e-12);
}

TEST_CASE("para-hypercomplex structure from a J- = aJ1 + bJ2 + cJ3 pair") {
  const double a = 1.25, b = 0.75;
  const JMat Jp = JMat::constant(j1());
  const JMat J2 = JMat::constant(j2());
  const JMat Jm = Jp * Jet(a) + J2 * Jet(b);
  const ParaHypercomplex h = build_parahypercomplex(Jp, Jm);
  const JMat id = JMat::identity(4);
  CHECK(h.p.value() == doctest::Approx(-a).epsilon(1e-15));
  CHECK((h.K * h.K - id).max_abs() <= 1e-12);
  CHECK((h.S * h.S - id).max_abs() <= 1e-12);
  CHECK((Jp * h.K - h.S).max_abs() <= 1e-12);
  CHECK(paraquaternion_defect(Jp, h.K, h.S) <= 1e-12);
  CHECK(anticommutator_defect(Jp, Jm) <= 1e-12);
  CHECK(compatibility_defect(JMat::constant(g0()), h.K, -1.0).max_abs() <= 1e-12);
  CHECK_THROWS_AS(build_parahypercomplex(Jp, -Jp), BranchError);
}

TEST_CASE("K and S are integrable with Lee form theta+ on a conformal constant-p pair") {
  const JVec x = lift(pt(0.3, -0.2, 0.5, 0.1), 2);
  const JMat g = conformal_metric(x);
  const JMat Jp = JMat::constant(j1());
  const JMat Jm = Jp * Jet(1.25) + JMat::constant(j2()) * Jet(0.75);
  const ParaHypercomplex h = build_parahypercomplex(Jp, Jm);
  CHECK(nijenhuis_residual(h.K) <= 1e-12);
  CHECK(nijenhuis_residual(h.S) <= 1e-12);
  const JVec tp = lee_form(g, Jp).theta.to_covector();
  CHECK(max_abs(lee_form(g, h.K).theta.to_covector() - tp) <= 1e-12);
  CHECK(max_abs(lee_form(g, h.S).theta.to_covector() - tp) <= 1e-12);
  CHECK(max_abs(p_gradient_residual(g, Jp, Jm)) <= 1e-12);
}

TEST_CASE("pseudo-orthonormal frame") {
  const Eigen::MatrixXd e = pseudo_orthonormal_frame(g0());
  const Eigen::MatrixXd gram = e.transpose() * g0() * e;
  CHECK((gram - Eigen::Matrix4d(Eigen::Vector4d(1, 1, -1, -1).asDiagonal())).norm() <= 1e-14);
}
