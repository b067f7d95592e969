#include <cmath>

#include "doctest.h"
#include "pbh/example2.hpp"

using namespace pbh;

namespace {

Eigen::VectorXd pt(double a, double b, double c, double e) {
  Eigen::VectorXd p(4);
  p << a, b, c, e;
  return p;
}

Jet frame_value(const Form& w, const std::vector<JVec>& frame) { return evaluate(w, frame); }

std::vector<JVec> unit_frame(const Example2Point& e, const JVec& X) {
  return {X, e.Jp * X, e.K * X, e.Sp * X};
}

Form wedge_m(const JMat& a, const JMat& b) { return wedge(Form::from_matrix(a), Form::from_matrix(b)); }

// Real and imaginary parts of (A + iB) ^ (A + iB).
std::pair<Form, Form> complex_square(const Form& A, const Form& B) {
  return {wedge(A, A) - wedge(B, B), wedge(A, B) + wedge(B, A)};
}

}  // namespace

TEST_CASE("torus certifies exactly") {
  const PhkCertificate c = certify_phk(torus_phk(), {64, 42});
  CHECK(c.points == 64);
  CHECK(c.paraquaternion == 0.0);
  CHECK(c.compatibility == 0.0);
  CHECK(c.closedness == 0.0);
  CHECK(c.lattice <= 1e-15);
}

TEST_CASE("Kodaira coframe: only e3^e4 fails to be closed") {
  const JVec x = lift(pt(0.3, 0.6, 0.1, 0.9), 1);
  JVec c1(4), c2(4), c3(4), c4(4);
  c1[0] = Jet(1.0);
  c2[1] = Jet(1.0);
  c3[2] = Jet(1.0);
  c4[3] = Jet(1.0);
  c4[1] = -x[0];
  const Form e1 = Form::from_covector(c1), e2 = Form::from_covector(c2), e3 = Form::from_covector(c3),
             e4 = Form::from_covector(c4);
  CHECK((d(e4) + wedge(e1, e2)).max_abs() <= 1e-12);
  CHECK(d(wedge(e1, e4)).max_abs() <= 1e-12);
  CHECK(d(wedge(e2, e4)).max_abs() <= 1e-12);
  CHECK(d(wedge(e3, e4)).max_abs() > 0.5);
}

TEST_CASE("Kodaira triple search certifies a non-trivial candidate") {
  const auto cands = kodaira_candidates();
  const PhkCertificate naive = certify_phk(kodaira_with_frame(cands[0].first, cands[0].second), {16, 3});
  CHECK(naive.paraquaternion <= 1e-12);
  CHECK(naive.closedness > 1e-3);
  const ModelDescriptor m = kodaira_phk();
  const PhkCertificate c = certify_phk(m, {64, 42});
  CHECK(c.pass(1e-10));
  CHECK(m.construction.find("d1 + d3") != std::string::npos);
}

TEST_CASE("J+ = J1, J- = aJ1 + bJ2 + cJ3: anticommutator and frame table at a = 5/4") {
  const Example2Params p;
  validate(p);
  for (const ModelDescriptor& m : {torus_phk(), kodaira_phk()}) {
    const JVec x = lift(pt(0.2, 0.4, 0.6, 0.8), 0);
    const Example2Point e = example2_at(m, p, x);
    CHECK(anticommutator_defect(e.Jp, e.Jm) <= 1e-12);
    CHECK(anticommutator_scalar(e.Jp, e.Jm).value() == doctest::Approx(-p.a).epsilon(1e-14));
    // Unit vector: first pseudo-orthonormal vector of g.
    const Eigen::VectorXd X0 = pseudo_orthonormal_frame(e.g.value()).col(0);
    const JVec X = constant_vec(X0);
    const auto fr = unit_frame(e, X);
    const Form wp = Form::from_matrix(e.wp), wm = Form::from_matrix(e.wm);
    CHECK(frame_value(wp, {fr[0], fr[1]}).value() == doctest::Approx(-0.75).epsilon(1e-12));
    CHECK(frame_value(wm, {fr[0], fr[1]}).value() == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(frame_value(wp, {fr[0], fr[3]}).value() == doctest::Approx(-(p.a + 1)).epsilon(1e-12));
    CHECK(frame_value(wm, {fr[0], fr[3]}).value() == doctest::Approx(p.a - 1).epsilon(1e-12));
    CHECK(std::abs(frame_value(wp, {fr[0], fr[2]}).value()) <= 1e-12);
    CHECK(frame_value(wedge_m(e.wp, e.wp), fr).value() == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(frame_value(wedge_m(e.wm, e.wm), fr).value() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(frame_value(wedge_m(e.wp, e.wm), fr).value()) <= 1e-12);
    CHECK(frame_value(wedge_m(e.FK, e.FK), fr).value() == doctest::Approx(2.0).epsilon(1e-12));
    // Conditions relating the four forms.
    CHECK(wedge_m(e.FK, e.wp).max_abs() <= 1e-12);
    CHECK(wedge_m(e.FK, e.wm).max_abs() <= 1e-12);
    CHECK(wedge_m(e.wp, e.wm).max_abs() <= 1e-12);
    CHECK((wedge_m(e.wp, e.wp) + wedge_m(e.wm, e.wm) - Jet(4.0) * wedge_m(e.FK, e.FK)).max_abs() <= 1e-12);
    // Closed-form expressions of w+ and w-.
    const double ra = std::sqrt((p.a + 1) / (p.a - 1));
    CHECK((e.wp - (e.Fp - e.Fm) * Jet(ra)).max_abs() <= 1e-12);
    CHECK((e.wm - (e.Fp + e.Fm) * Jet(1.0 / ra)).max_abs() <= 1e-12);
    CHECK(membership_residual(e, p.a, X0) <= 1e-12);
    CHECK(metric_identity_residual(e, p.a, X0, pseudo_orthonormal_frame(e.g.value()).col(2)) <= 1e-12);
  }
}

TEST_CASE("frame table depends only on a") {
  const JVec x = lift(pt(0.1, 0.2, 0.3, 0.4), 0);
  const double r = 0.75;
  std::vector<double> ref;
  for (double phi : {0.0, 0.7, 1.9}) {
    Example2Params p;
    p.b = r * std::cos(phi);
    p.c = r * std::sin(phi);
    const Example2Point e = example2_at(torus_phk(), p, x);
    const JVec X = constant_vec(Eigen::Vector4d(1, 0, 0, 0));
    const auto fr = unit_frame(e, X);
    std::vector<double> vals;
    for (const JMat* w : {&e.wp, &e.wm, &e.FK})
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) vals.push_back(frame_value(Form::from_matrix(*w), {fr[i], fr[j]}).value());
    if (ref.empty()) ref = vals;
    for (size_t k = 0; k < vals.size(); ++k) CHECK(std::abs(vals[k] - ref[k]) <= 1e-10);
  }
}

TEST_CASE("invalid pair parameters are rejected") {
  Example2Params p;
  p.b = 0.7;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  Example2Params q;
  q.a = 1.0;
  q.b = 0.0;
  CHECK_THROWS_AS(validate(q), std::invalid_argument);
  CHECK_THROWS_AS(hamiltonian_by_name("cubic", torus_phk().domain), std::invalid_argument);
}

TEST_CASE("Hamiltonian deformation: trivial cases reproduce beta") {
  const ModelDescriptor m = torus_phk();
  const JVec x = lift(pt(2.0, 2.5, 3.0, 3.5), 2);
  Example2Params p;
  p.t = 0.0;
  DeformedPoint d0 = deformed_at(m, p, x);
  CHECK((d0.gamma1.im - d0.base.beta1().im).max_abs() == 0.0);
  CHECK((d0.gamma2.im - d0.base.beta2().im).max_abs() == 0.0);
  p.t = 0.1;
  p.hamiltonian = "const";
  DeformedPoint d1 = deformed_at(m, p, x);
  CHECK((d1.gamma1.im - d1.base.beta1().im).max_abs() == 0.0);
}

TEST_CASE("Hamiltonian deformation with sin2 at t = 0.1") {
  const ModelDescriptor m = torus_phk();
  Example2Params p;
  p.t = 0.1;
  const Eigen::VectorXd x0 = pt(2.0, 2.5, 3.0, 3.5);
  check_small_t(m, p, x0);
  const DeformedPoint dp = deformed_at(m, p, lift(x0, 2));
  CHECK(dp.symplectic_defect <= 1e-7);
  CHECK(d(dp.gamma1.im).max_abs() <= 1e-6);
  CHECK(d(dp.gamma2.im).max_abs() <= 1e-6);
  CHECK((dp.pulled_w2 - dp.base.w2).max_abs() > 1e-3);
  const auto s1 = complex_square(dp.gamma1.re - dp.gamma2.re, dp.gamma1.im - dp.gamma2.im);
  const auto s2 = complex_square(dp.gamma1.re - dp.gamma2.re, dp.gamma1.im + dp.gamma2.im);
  CHECK(std::max(s1.first.max_abs(), s1.second.max_abs()) <= 1e-6);
  CHECK(std::max(s2.first.max_abs(), s2.second.max_abs()) <= 1e-6);
}

TEST_CASE("flow precondition and escape") {
  const ModelDescriptor m = torus_phk();
  Example2Params p;
  p.t = 5.0;
  CHECK_THROWS_AS(check_small_t(m, p, pt(0.2, 1.0, 1.0, 1.0)), DomainError);
  p.t = 20.0;
  CHECK_THROWS_AS(deformed_at(m, p, lift(pt(0.2, 1.0, 3.1, 3.1), 1)), DomainError);
}
