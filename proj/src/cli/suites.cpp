#include "pbh/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>

#include "pbh/engel.hpp"
#include "pbh/poisson.hpp"

namespace pbh {

namespace {

using K = CheckKind;

const std::vector<SuiteInfo>& catalog_storage() {
  static const std::vector<SuiteInfo> cat = {
      {"parahyperkahler",
       "para-hyperkaehler triple: split-quaternion algebra, metric compatibility, integrability, closed forms",
       {"torus", "kodaira"},
       {{"paraquaternion_relations", "J1^2 = -1, J2^2 = J3^2 = 1, J1J2 = -J2J1 = J3 and the rest of the table", K::upper, 1e-10},
        {"metric_compatibility", "g(J1., J1.) = g and g(Jk., Jk.) = -g for k = 2, 3", K::upper, 1e-10},
        {"nijenhuis_vanish", "Nijenhuis tensors of J1, J2, J3 vanish", K::upper, 1e-10},
        {"fundamental_forms_closed", "d of the three fundamental 2-forms vanishes", K::upper, 1e-10}}},
      {"lemma1",
       "constant-p pair J+ = J1, J- = aJ1 + bJ2 + cJ3: K and S integrable, Lee forms of K, S equal theta+",
       {"torus", "kodaira"},
       {{"nijenhuis_K", "Nijenhuis tensor of K = [J+, J-] / (2 sqrt(p^2 - 1)) vanishes", K::upper, 1e-9},
        {"nijenhuis_S", "Nijenhuis tensor of S = -(J- + pJ+) / sqrt(p^2 - 1) vanishes", K::upper, 1e-9},
        {"para_hypercomplex", "{J+, K, S} satisfies the split-quaternion table", K::upper, 1e-10},
        {"p_constant", "dp = 0 for p defined by J+J- + J-J+ = 2p", K::upper, 1e-12},
        {"lee_K_equals_plus", "theta^K = theta+ on the conformal rescale e^u g, u = sin x1 + 0.3 x2 x3", K::upper, 1e-9},
        {"lee_S_equals_plus", "theta^S = theta+ on the conformal rescale", K::upper, 1e-9},
        {"lee_minus_equals_plus", "theta- = theta+ on the conformal rescale", K::upper, 1e-9},
        {"p_gradient", "2 d(g(J+, J-)) + (theta+ - theta-) o [J+, J-] = 0 on the conformal rescale", K::upper, 1e-9},
        {"lee_norm", "largest component of theta+ on the conformal rescale", K::info, 0.0}}},
      {"gpk-example2",
       "generalized pseudo-Kaehler pair from beta1 = F^K + i w+, beta2 = -F^K + i w- and its Hamiltonian deformation",
       {"torus", "kodaira"},
       {{"anticommutator", "J+J- + J-J+ = -2a Id", K::upper, 1e-10},
        {"bih_conditions", "F^K w+ = F^K w- = w+ w- = w+^2 + w-^2 - 4 (F^K)^2 = 0", K::upper, 1e-9},
        {"frame_table", "on (X, J+X, KX, S+X): w+^2 = 4(a+1), w-^2 = -4(a-1), w+ w- = 0, (F^K)^2 = 2", K::upper, 1e-10},
        {"frame_values", "w+-(X, J+X) = -+sqrt(a^2 - 1) on a unit vector", K::upper, 1e-10},
        {"membership", "sqrt(p^2-1) KU + iJ+U - iaJ-U = 0 and i_U(beta1 - beta2) = 0 for the constructed U", K::upper, 1e-9},
        {"metric_identity", "induced metric on E1 cap E2 equals -Re(beta1 - conj beta2)", K::upper, 1e-9},
        {"beta_closed", "d beta1 = d beta2 = 0", K::upper, 1e-10},
        {"gpk_commute", "[I1, I2] = 0 at t = 0", K::upper, 1e-9},
        {"gpk_clauses", "points where an eigenspace clause of G = I1 I2 fails at t = 0", K::upper, 0.0},
        {"gpk_transversal", "smallest principal angle between the eigenspaces of G and T at t = 0", K::lower, 1e-6},
        {"gpk_pairing", "smallest singular value of the pairing on the eigenspaces of G at t = 0", K::lower, 1e-8},
        {"integrable", "Courant-Nijenhuis tensors of I1 and I2 vanish at t = 0", K::upper, 1e-8},
        {"g_cross_validation", "G from the beta pair equals G from the bihermitian block construction", K::upper, 1e-10},
        {"extraction_roundtrip", "extracted (g, b, J+, J-) = (-sqrt(a^2-1) g, a F^K, -J-, -J+)", K::upper, 1e-10},
        {"hermitian_condition", "d+F+ + d-F- = 0 for the extracted data at t = 0", K::upper, 1e-9},
        {"deformed_symplectic", "H_t^* F^K = F^K", K::upper, 1e-7},
        {"deformed_closed", "d gamma1 = d gamma2 = 0", K::upper, 1e-6},
        {"deformed_squares", "(gamma1 - gamma2)^2 = (gamma1 - conj gamma2)^2 = 0", K::upper, 1e-6},
        {"deformed_distinct", "smallest of |gamma1 - gamma2| and |gamma1 - conj gamma2|", K::lower, 1e-3},
        {"deformed_commute", "[I1, I2] = 0 for the deformed pair", K::upper, 1e-6},
        {"deformed_clauses", "points where an eigenspace clause of the deformed G fails", K::upper, 0.0},
        {"deformed_transversal", "smallest principal angle to T for the deformed G", K::lower, 1e-6},
        {"deformed_pairing", "smallest pairing singular value for the deformed G", K::lower, 1e-8},
        {"deformed_integrable", "Courant-Nijenhuis tensors of the deformed I1, I2 vanish", K::upper, 1e-6},
        {"deformed_hermitian", "d+F+ + d-F- = 0 for the data extracted from the deformed pair", K::upper, 1e-6},
        {"deformed_torsion_db", "d+F+ + db = 0 for the extracted data (H = 0)", K::upper, 1e-6},
        {"rk4_halving", "flow endpoint error ratio when the RK4 step is halved (gauss, steps 0.05 and 0.025)", K::lower, 8.0},
        {"rk4_default_step", "flow endpoint change between the configured step and its half", K::info, 0.0}}},
      {"courant",
       "H-twisted Courant bracket, b-field symmetries and integrability of form-built structures",
       {"torus", "kodaira"},
       {{"antisymmetry", "[A, B]_H + [B, A]_H = 0", K::upper, 1e-10},
        {"b_naturality", "[e^b A, e^b B]_H = e^b [A, B]_{H+db} for random polynomial b", K::upper, 1e-9},
        {"b_wrong_sign_control", "[e^b A, e^b B]_H - e^b [A, B]_{H-db} is nonzero", K::lower, 1e-3},
        {"pairing_preservation", "<IA, IB> = <A, B> for structures built from B + i w", K::upper, 1e-10},
        {"closed_beta_integrable", "Courant-Nijenhuis tensor vanishes for closed beta", K::upper, 1e-8},
        {"nonclosed_beta_control", "Courant-Nijenhuis tensor is nonzero for non-closed beta", K::lower, 1e-3},
        {"b_conjugation", "e^{-b} I e^{b} is integrable for the twist H + db (I symplectic type)", K::upper, 1e-8},
        {"b_conjugation_opposite", "same structure against the twist H - db", K::info, 0.0}}},
      {"poisson",
       "holomorphic Poisson bivector of a generalized pseudo-Kaehler structure",
       {"torus", "kodaira"},
       {{"hermitian_balance", "d+F+ + d-F- = 0 for the input data", K::upper, 1e-8},
        {"q_skew", "Omega = g(Q., .) is skew for Q = [J+, J-]", K::upper, 1e-10},
        {"p_scalar", "J+J- + J-J+ is a multiple of the identity", K::upper, 1e-10},
        {"pi_type20", "J+ Pi = i Pi", K::upper, 1e-10},
        {"omega_11", "Omega has no (1,1) part for J+", K::upper, 1e-10},
        {"projector", "(2,0) projection of Pi equals Pi", K::upper, 1e-12},
        {"q_re_pi", "lowered Re Pi recovers Q", K::upper, 1e-10},
        {"pi_nonzero", "smallest |Pi| over points", K::lower, 1e-6},
        {"chern_holomorphic", "D_m Pi + i D_{J+ d_m} Pi = 0 for the Chern connection", K::upper, 1e-9},
        {"schouten_coordinate", "[Pi, Pi] = 0 by the coordinate formula", K::upper, 1e-9},
        {"schouten_cyclic_sum", "-2 cyclic sum g((nabla_{QX} Q)Y, Z) = 0", K::upper, 1e-9},
        {"routes_agree", "lowered [Re Pi, Re Pi] equals the cyclic-sum expression", K::upper, 1e-9},
        {"reality_bracket", "[conj Pi, Pi] = 0", K::upper, 1e-9},
        {"commuting_pair_control", "Pi = 0 when J- = J+", K::upper, 1e-12},
        {"levi_civita_control", "holomorphicity residual with the Levi-Civita connection in place of Chern", K::info, 0.0}}},
      {"theorem4",
       "flag manifold deformation hypotheses: Xf, Yf chart formulas, dd^c f = 3 lambda w, conditions on X^{1,0}",
       {"flag"},
       {{"xf_closed_vs_jet", "chart formula for Xf against differentiation of f, charts z, u, v", K::upper, 1e-9},
        {"yf_closed_vs_jet", "chart formula for Yf against differentiation of f, charts z, u, v", K::upper, 1e-9},
        {"chart_consistency", "Xf and Yf agree across the three charts", K::upper, 1e-9},
        {"lambda_spread", "relative spread of lambda in dd^c f = 3 lambda w", K::upper, 1e-4},
        {"lambda_mean", "fitted lambda", K::info, 0.0},
        {"proportionality", "dd^c f - 3 lambda w", K::upper, 1e-8},
        {"ddc_lemma", "(X ^ Y) o dd^c f = i dbar((Xf) Y - (Yf) X)", K::upper, 1e-8},
        {"tau_vanishes_near_C", "|tau|^2 at distance 1e-5 from {x0 x1 x2 = 0}", K::upper, 1e-8},
        {"F0_min_singular", "smallest singular value of F0 = a w1 + b w2", K::lower, 1e-6},
        {"fields_commute", "[Z1, Z2] = 0", K::upper, 1e-12},
        {"sigma_holomorphic", "dbar of the components of Z1 ^ Z2 vanishes", K::upper, 1e-12},
        {"condition_i", "(Z1 ^ Z2) o F0 = dbar X^{1,0}", K::upper, 1e-6},
        {"condition_ii", "L_{Re X^{1,0}} Im(Z1 ^ Z2) = 0", K::upper, 1e-8}}},
      {"engel",
       "null distribution Span(X, Y) built from the Lee form: N-endomorphisms, frame identities, rank tower",
       {"torus", "kodaira"},
       {{"tower_normal_form", "points where Span(d_q, d_x + p d_y + q d_p) does not give ranks (2,3,4)", K::upper, 0.0},
        {"tower_integrable", "points where Span(d1, d2) is not integrable", K::upper, 0.0},
        {"tower_other_control", "points where Span(d1, x1 d2 + d3) does not give ranks (2,3,3)", K::upper, 0.0},
        {"n_square", "N+-^2 = 0", K::upper, 1e-10},
        {"n_kernel_image", "Ker N+- = Im N+-", K::upper, 1e-8},
        {"n_kernel_eigen", "Ker N+- is the -+1 eigenspace of K", K::upper, 1e-8},
        {"n_eigen_annihilated", "N+ kills the -1 eigenvectors of K", K::upper, 1e-10},
        {"n_ranks", "points where rank N+- != 2 or Ker N+ + Ker N- != T", K::upper, 0.0},
        {"synthetic_basis", "null relations and g(J+X, Y) = 2(fp - 1)|theta|^2 for a prescribed theta", K::upper, 1e-8},
        {"synthetic_theta", "g(theta, J+J- theta) = p|theta|^2 for a prescribed theta", K::upper, 1e-8},
        {"synthetic_kernel", "X, Y in Ker N for a prescribed theta", K::upper, 1e-9},
        {"synthetic_anticommutator", "NJ+ + J+N = 2(pf - 1) Id", K::upper, 1e-10},
        {"lee_balance", "theta+ + theta- = 0 on the deformed pair", K::upper, 1e-8},
        {"basis", "null relations and g(J+X, Y) = 2(fp - 1)|theta|^2 on the deformed pair", K::upper, 1e-8},
        {"y_identity", "g(theta, J+J- theta) = p|theta|^2 and Y = (-f theta + J+J- theta) / sqrt(p^2 - 1)", K::upper, 1e-8},
        {"kernel", "X, Y in Ker N on the deformed pair", K::upper, 1e-9},
        {"frame_rank", "smallest singular value of (X, Y, J+X, J+Y)", K::lower, 1e-8},
        {"dp_k", "dp = sqrt(p^2 - 1) theta+ o K", K::upper, 1e-8},
        {"x_f", "X(f) = 0", K::upper, 1e-8},
        {"y_f", "Y(f) = -f|theta|^2", K::upper, 1e-8},
        {"nxy_parallel", "N[X, Y] is parallel to Y", K::upper, 1e-8},
        {"nxy_coefficient", "N[X, Y] = f sqrt(p^2 - 1)|theta|^2 Y", K::upper, 1e-8},
        {"nabla_n_yy", "(nabla_Y N) Y = 0", K::upper, 1e-8},
        {"nabla_n_jyy", "2 (nabla_{J+Y} N) Y = 2pf|theta|^2 Y", K::upper, 1e-8},
        {"nabla_n_formula", "nabla N against its Lee-form expression", K::upper, 1e-8},
        {"dichotomy_violated", "points where nabla_Y Y has an X-component but the tower is not (2,3,4)", K::upper, 0.0},
        {"dichotomy_geodesic", "points on the null-geodesic branch", K::info, 0.0},
        {"dichotomy_engel", "points on the Engel branch", K::info, 0.0},
        {"degenerate_lee_inconclusive", "points of the undeformed pair (theta = 0) not reported inconclusive", K::upper, 0.0},
        {"constant_p_vanishing_lee", "|theta+| on the undeformed pair, where p is constant", K::upper, 1e-12}}},
  };
  return cat;
}

// Per-check accumulators, filled in catalog order.
class Recorder {
 public:
  Recorder(const SuiteInfo& info, const std::string& model, const SuiteConfig& c) {
    report_.suite = info.name;
    report_.model = model;
    for (const CheckDef& s : info.checks) {
      CheckRecord r;
      r.name = s.name;
      r.statement = s.statement;
      r.kind = s.kind;
      r.tolerance = s.tolerance;
      for (const std::string& key : {s.name, info.name + "." + s.name})
        if (auto it = c.tol.find(key); it != c.tol.end()) r.tolerance = it->second;
      r.max_residual = s.kind == K::lower ? std::numeric_limits<double>::infinity() : 0.0;
      report_.checks.push_back(r);
    }
  }

  void feed(const std::string& name, double v, int points = 1) {
    CheckRecord& r = at(name);
    if (r.points == 0 && !std::isnan(r.max_residual)) r.max_residual = v;
    else if (std::isnan(v) || std::isnan(r.max_residual)) r.max_residual = std::numeric_limits<double>::quiet_NaN();
    else if (r.kind == K::lower) r.max_residual = std::min(r.max_residual, v);
    else r.max_residual = std::max(r.max_residual, v);
    r.points += points;
  }
  void inconclusive(const std::string& name, int n = 1) { at(name).inconclusive += n; }
  void fail(const std::string& name, const std::string& msg) {
    CheckRecord& r = at(name);
    if (r.error.empty()) r.error = msg;
  }

  // Runs fn; an exception marks every listed check as errored.
  template <class F>
  void stage(std::initializer_list<const char*> names, F&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      for (const char* n : names) fail(n, e.what());
    }
  }

  void certification_failure(const std::string& msg) {
    report_.error = "model certification failed: " + msg;
    certification_failed_ = true;
  }
  bool certification_failed() const { return certification_failed_; }

  SuiteReport finish() {
    for (CheckRecord& r : report_.checks) {
      if (r.error.empty() && r.points == 0)
        r.error = r.inconclusive > 0 ? "no definitive points" : "check was not evaluated";
      if (!r.error.empty()) {
        r.pass = false;
        if (std::isinf(r.max_residual)) r.max_residual = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      switch (r.kind) {
        case K::upper: r.pass = r.max_residual <= r.tolerance; break;
        case K::lower: r.pass = r.max_residual >= r.tolerance; break;
        case K::info: r.pass = true; break;
      }
    }
    return report_;
  }

 private:
  CheckRecord& at(const std::string& name) {
    for (CheckRecord& r : report_.checks)
      if (r.name == name) return r;
    throw std::logic_error("unknown check " + name);
  }

  SuiteReport report_;
  bool certification_failed_ = false;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

ModelDescriptor build_model(const std::string& name) {
  if (name == "torus") return torus_phk();
  if (name == "kodaira") return kodaira_phk();
  throw std::logic_error("no 4-dimensional model named " + name);
}

void certify(const ModelDescriptor& m, const SuiteConfig& c) {
  const PhkCertificate cert = certify_phk(m, {16, c.plan.seed});
  if (!cert.pass(1e-10)) throw ModelError(m.name + " does not certify as para-hyperkaehler");
}

ChartDomain deform_domain(const ModelDescriptor& m) {
  return inner_domain(m.domain, 0.3 * (m.domain.hi - m.domain.lo).minCoeff());
}

Form wedge_m(const JMat& a, const JMat& b) { return wedge(Form::from_matrix(a), Form::from_matrix(b)); }

double complex_square_defect(const ComplexForm& a, const ComplexForm& b, double sign) {
  const Form re = a.re - b.re;
  const Form im = sign > 0 ? a.im - b.im : a.im + b.im;
  return std::max((wedge(re, re) - wedge(im, im)).max_abs(), (wedge(re, im) + wedge(im, re)).max_abs());
}

double complex_norm(const ComplexForm& a, const ComplexForm& b, double sign) {
  const Form re = a.re - b.re;
  const Form im = sign > 0 ? a.im - b.im : a.im + b.im;
  return std::max(re.max_abs(), im.max_abs());
}

void record_gpk(Recorder& r, const GpkPointReport& g, const char* commute, const char* clauses,
                const char* transversal, const char* pairing) {
  r.feed(commute, g.commutator);
  r.feed(clauses, g.failed_clause.empty() ? 0.0 : 1.0);
  r.feed(transversal, std::min(g.transversal_plus, g.transversal_minus));
  r.feed(pairing, std::min(g.pairing_plus, g.pairing_minus));
}

// ---------------------------------------------------------------------------

void run_parahyperkahler(Recorder& r, const SuiteConfig& c, const ModelDescriptor& m) {
  r.stage({"paraquaternion_relations", "metric_compatibility", "nijenhuis_vanish", "fundamental_forms_closed"}, [&] {
    for (const auto& p : sample_points(m.domain, c.plan)) {
      const JVec x = lift(p, 1);
      const JMat g = m.g(x), j1 = m.J1(x), j2 = m.J2(x), j3 = m.J3(x);
      r.feed("paraquaternion_relations", paraquaternion_defect(j1, j2, j3));
      r.feed("metric_compatibility", std::max({compatibility_defect(g, j1, 1.0).max_abs(),
                                               compatibility_defect(g, j2, -1.0).max_abs(),
                                               compatibility_defect(g, j3, -1.0).max_abs()}));
      r.feed("nijenhuis_vanish", std::max({nijenhuis_residual(j1), nijenhuis_residual(j2), nijenhuis_residual(j3)}));
      double closed = 0.0;
      for (const JMat* J : {&j1, &j2, &j3}) closed = std::max(closed, d(fundamental_form(g, *J)).max_abs());
      r.feed("fundamental_forms_closed", closed);
    }
  });
}

void run_lemma1(Recorder& r, const SuiteConfig& c, const ModelDescriptor& m) {
  certify(m, c);
  Example2Params par = c.example2;
  par.t = 0.0;
  r.stage({"nijenhuis_K", "nijenhuis_S", "para_hypercomplex", "p_constant", "lee_K_equals_plus", "lee_S_equals_plus",
           "lee_minus_equals_plus", "p_gradient", "lee_norm"},
          [&] {
            for (const auto& p : sample_points(m.domain, c.plan)) {
              const JVec x = lift(p, 1);
              const Example2Point e = example2_at(m, par, x);
              const ParaHypercomplex h = build_parahypercomplex(e.Jp, e.Jm);
              r.feed("nijenhuis_K", nijenhuis_residual(h.K));
              r.feed("nijenhuis_S", nijenhuis_residual(h.S));
              r.feed("para_hypercomplex", paraquaternion_defect(h.Jp, h.K, h.S));
              r.feed("p_constant", max_abs(gradient(h.p)));
              const JMat gc = e.g * exp(sin(x[0]) + 0.3 * x[1] * x[2]);
              const JVec tp = lee_form(gc, e.Jp).theta.to_covector();
              r.feed("lee_K_equals_plus", max_abs(lee_form(gc, h.K).theta.to_covector() - tp));
              r.feed("lee_S_equals_plus", max_abs(lee_form(gc, h.S).theta.to_covector() - tp));
              r.feed("lee_minus_equals_plus", max_abs(lee_form(gc, e.Jm).theta.to_covector() - tp));
              r.feed("p_gradient", max_abs(p_gradient_residual(gc, e.Jp, e.Jm)));
              r.feed("lee_norm", max_abs(tp));
            }
          });
}

void run_gpk(Recorder& r, const SuiteConfig& c, const ModelDescriptor& m) {
  certify(m, c);
  const double a = c.example2.a;
  const double root = std::sqrt(a * a - 1.0);
  Example2Params par0 = c.example2;
  par0.t = 0.0;
  r.stage({"anticommutator", "bih_conditions", "frame_table", "frame_values", "membership", "metric_identity",
           "beta_closed", "gpk_commute", "gpk_clauses", "gpk_transversal", "gpk_pairing", "integrable",
           "g_cross_validation", "extraction_roundtrip", "hermitian_condition"},
          [&] {
            const Form H(4, 3);
            for (const auto& p : sample_points(m.domain, c.plan)) {
              const JVec x = lift(p, 1);
              const Example2Point e = example2_at(m, par0, x);
              r.feed("anticommutator", std::max(anticommutator_defect(e.Jp, e.Jm),
                                                std::abs(anticommutator_scalar(e.Jp, e.Jm).value() + a)));
              r.feed("bih_conditions",
                     std::max({wedge_m(e.FK, e.wp).max_abs(), wedge_m(e.FK, e.wm).max_abs(),
                               wedge_m(e.wp, e.wm).max_abs(),
                               (wedge_m(e.wp, e.wp) + wedge_m(e.wm, e.wm) - Jet(4.0) * wedge_m(e.FK, e.FK)).max_abs()}));
              const Eigen::MatrixXd frame = pseudo_orthonormal_frame(e.g.value());
              const JVec X = constant_vec(frame.col(0));
              const std::vector<JVec> fr = {X, e.Jp * X, e.K * X, e.Sp * X};
              auto on_frame = [&](const JMat& u, const JMat& v) { return evaluate(wedge_m(u, v), fr).value(); };
              r.feed("frame_table", std::max({std::abs(on_frame(e.wp, e.wp) - 4.0 * (a + 1.0)),
                                              std::abs(on_frame(e.wm, e.wm) + 4.0 * (a - 1.0)),
                                              std::abs(on_frame(e.wp, e.wm)), std::abs(on_frame(e.FK, e.FK) - 2.0)}));
              r.feed("frame_values", std::max(std::abs(evaluate(Form::from_matrix(e.wp), {fr[0], fr[1]}).value() + root),
                                              std::abs(evaluate(Form::from_matrix(e.wm), {fr[0], fr[1]}).value() - root)));
              r.feed("membership", membership_residual(e, a, frame.col(0)));
              r.feed("metric_identity", metric_identity_residual(e, a, frame.col(0), frame.col(2)));
              const ComplexForm b1 = e.beta1(), b2 = e.beta2();
              r.feed("beta_closed", std::max({d(b1.re).max_abs(), d(b1.im).max_abs(), d(b2.re).max_abs(), d(b2.im).max_abs()}));
              const JMat I1 = gcs_from_form(b1), I2 = gcs_from_form(b2);
              record_gpk(r, check_gpk_point(I1.value(), I2.value(), 1e-9), "gpk_commute", "gpk_clauses", "gpk_transversal",
                         "gpk_pairing");
              r.feed("integrable", std::max(gcs_nijenhuis(x, I1, H), gcs_nijenhuis(x, I2, H)));
              const JMat gq = e.g * Jet(-root), bq = e.FK * Jet(a);
              const GenPair built = gualtieri_build(gq, -e.Jm, -e.Jp, bq);
              r.feed("g_cross_validation", (built.I1 * built.I2 - I1 * I2).max_abs());
              const BihermitianExtract ex = extract_bihermitian(I1, I2);
              r.feed("extraction_roundtrip", std::max({(ex.g - gq).max_abs(), (ex.b - bq).max_abs(),
                                                       (ex.Jp + e.Jm).max_abs(), (ex.Jm + e.Jp).max_abs()}));
              r.feed("hermitian_condition", hermitian_defect(ex.g, ex.Jp, ex.Jm));
            }
          });

  r.stage({"deformed_symplectic", "deformed_closed", "deformed_squares", "deformed_distinct", "deformed_commute",
           "deformed_clauses", "deformed_transversal", "deformed_pairing", "deformed_integrable", "deformed_hermitian",
           "deformed_torsion_db"},
          [&] {
            const Form H(4, 3);
            for (const auto& p : sample_points(deform_domain(m), c.plan)) {
              check_small_t(m, c.example2, p);
              const DeformedPoint dp = deformed_at(m, c.example2, lift(p, 2));
              r.feed("deformed_symplectic", dp.symplectic_defect);
              r.feed("deformed_closed", std::max({d(dp.gamma1.re).max_abs(), d(dp.gamma1.im).max_abs(),
                                                  d(dp.gamma2.re).max_abs(), d(dp.gamma2.im).max_abs()}));
              r.feed("deformed_squares", std::max(complex_square_defect(dp.gamma1, dp.gamma2, 1.0),
                                                  complex_square_defect(dp.gamma1, dp.gamma2, -1.0)));
              r.feed("deformed_distinct", std::min(complex_norm(dp.gamma1, dp.gamma2, 1.0),
                                                   complex_norm(dp.gamma1, dp.gamma2, -1.0)));
              const JMat I1 = gcs_from_form(dp.gamma1), I2 = gcs_from_form(dp.gamma2);
              record_gpk(r, check_gpk_point(I1.value(), I2.value(), 1e-6), "deformed_commute", "deformed_clauses",
                         "deformed_transversal", "deformed_pairing");
              const JVec x1 = lift(p, 1);
              r.feed("deformed_integrable", std::max(gcs_nijenhuis(x1, I1, H), gcs_nijenhuis(x1, I2, H)));
              const BihermitianExtract ex = extract_bihermitian(I1, I2);
              r.feed("deformed_hermitian", hermitian_defect(ex.g, ex.Jp, ex.Jm));
              r.feed("deformed_torsion_db", (d_pm_F(ex.g, ex.Jp) + d(Form::from_matrix(ex.b))).max_abs());
            }
          });

  r.stage({"rk4_halving", "rk4_default_step"}, [&] {
    const double t = c.example2.t != 0.0 ? c.example2.t : 0.1;
    const int n = std::min(c.plan.count, 8);
    auto endpoint = [&](const Eigen::VectorXd& p, const std::string& ham, double step) {
      Example2Params q = c.example2;
      q.t = t;
      q.step = step;
      q.hamiltonian = ham;
      return value(hamiltonian_flow(m, q, hamiltonian_by_name(ham, m.domain), lift(p, 1)).phi);
    };
    for (const auto& p : sample_points(deform_domain(m), {n, c.plan.seed})) {
      const double h = 0.05;
      const Eigen::VectorXd ref = endpoint(p, "gauss", h / 32.0);
      const double e1 = (endpoint(p, "gauss", h) - ref).norm();
      const double e2 = (endpoint(p, "gauss", h / 2.0) - ref).norm();
      r.feed("rk4_halving", e1 / e2);
      const double s = c.example2.step;
      r.feed("rk4_default_step", (endpoint(p, c.example2.hamiltonian, s) - endpoint(p, c.example2.hamiltonian, s / 2.0)).norm());
    }
  });
}

// Random polynomial entry of degree <= 2.
Jet poly(const JVec& x, const Eigen::VectorXd& x0, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Jet s(u(rng));
  for (size_t i = 0; i < x.size(); ++i) {
    const Jet xi = x[i] - Jet(x0(i));
    s += u(rng) * xi;
    for (size_t j = i; j < x.size(); ++j) s += 0.5 * u(rng) * xi * (x[j] - Jet(x0(j)));
  }
  return s;
}

JMat random_two_form(const JVec& x, const Eigen::VectorXd& x0, std::mt19937_64& rng) {
  const int n = static_cast<int>(x.size());
  JMat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      b(i, j) = poly(x, x0, rng);
      b(j, i) = -b(i, j);
    }
  return b;
}

GenSection random_section(const JVec& x, const Eigen::VectorXd& x0, std::mt19937_64& rng) {
  JVec s(2 * x.size());
  for (Jet& e : s) e = poly(x, x0, rng);
  return unstack(s);
}

JVec random_covector(const JVec& x, const Eigen::VectorXd& x0, std::mt19937_64& rng) {
  JVec a(x.size());
  for (Jet& e : a) e = poly(x, x0, rng);
  return a;
}

void run_courant(Recorder& r, const SuiteConfig& c, const ModelDescriptor& m) {
  // Constant nondegenerate 2-form for the symplectic parts.
  const Eigen::MatrixXd g0 = torus_metric(), j1 = torus_j1();
  const Eigen::MatrixXd w0 = j1.transpose() * g0;
  const auto pts = sample_points(m.domain, c.plan);
  // Eight b-fields, shared by the points in turn; coefficients are centred at the box centre.
  const Eigen::VectorXd centre = 0.5 * (m.domain.lo + m.domain.hi);
  std::mt19937_64 rng(c.plan.seed);
  std::vector<std::uint64_t> field_seeds(8);
  for (auto& s : field_seeds) s = rng();
  r.stage({"antisymmetry", "b_naturality", "b_wrong_sign_control", "pairing_preservation", "closed_beta_integrable",
           "nonclosed_beta_control", "b_conjugation", "b_conjugation_opposite"},
          [&] {
            const Form H(4, 3);
            for (size_t k = 0; k < pts.size(); ++k) {
              std::mt19937_64 brng(field_seeds[k % 8]);
              std::mt19937_64 srng(c.plan.seed + 1000003ULL * (k + 1));
              const JVec x = lift(pts[k], 3);
              const JMat b = random_two_form(x, centre, brng);
              const Form db = d(Form::from_matrix(b));
              const GenSection A = random_section(x, centre, srng), B = random_section(x, centre, srng);
              r.feed("antisymmetry", max_abs(stack(courant_bracket(A, B, H) + courant_bracket(B, A, H))));
              const JMat eb = b_transform(b);
              const GenSection lhs = courant_bracket(apply(eb, A), apply(eb, B), H);
              r.feed("b_naturality", max_abs(stack(lhs - apply(eb, courant_bracket(A, B, H + db)))));
              r.feed("b_wrong_sign_control", max_abs(stack(lhs - apply(eb, courant_bracket(A, B, H - db)))));

              const JVec x2 = lift(pts[k], 2);
              // Closed beta = d(alpha) + i(w0 + d(alpha')) with small polynomial potentials.
              const Form da = d(Form::from_covector(random_covector(x2, centre, srng)));
              Form wc = Jet(0.1) * d(Form::from_covector(random_covector(x2, centre, srng)));
              wc += Form::from_matrix(JMat::constant(w0));
              const JMat I = gcs_from_form(da.to_matrix(), wc.to_matrix());
              const JVec p0 = lift(pts[k], 0);
              GenSection P = random_section(p0, value(p0), srng), Q = random_section(p0, value(p0), srng);
              const JMat I0 = JMat::constant(I.value());
              r.feed("pairing_preservation", std::max(std::abs((pairing(apply(I0, P), apply(I0, Q)) - pairing(P, Q)).value()),
                                                      orthogonality_defect(I0)));
              r.feed("closed_beta_integrable", gcs_nijenhuis(x2, I, H));
              JMat wn = JMat::constant(w0);
              wn(0, 1) += exp(x2[2]) * Jet(0.5);
              wn(1, 0) = -wn(0, 1);
              r.feed("nonclosed_beta_control", gcs_nijenhuis(x2, gcs_from_form(JMat(4, 4), wn), H));

              const JMat b2 = random_two_form(x2, centre, brng);
              const Form db2 = d(Form::from_matrix(b2));
              const JMat Is = gcs_from_form(JMat(4, 4), JMat::constant(w0));
              const JMat conj = b_transform(-b2) * Is * b_transform(b2);
              r.feed("b_conjugation", gcs_nijenhuis(x2, conj, H + db2));
              r.feed("b_conjugation_opposite", gcs_nijenhuis(x2, conj, H - db2));
            }
          });
}

void run_poisson(Recorder& r, const SuiteConfig& c, const ModelDescriptor& m) {
  certify(m, c);
  r.stage({"hermitian_balance", "q_skew", "p_scalar", "pi_type20", "omega_11", "projector", "q_re_pi", "pi_nonzero",
           "chern_holomorphic", "schouten_coordinate", "schouten_cyclic_sum", "routes_agree", "reality_bracket",
           "commuting_pair_control", "levi_civita_control"},
          [&] {
            for (const auto& p : sample_points(deform_domain(m), c.plan)) {
              check_small_t(m, c.example2, p);
              const BihermitianExtract e = deformed_bihermitian(m, c.example2, lift(p, 2));
              r.feed("hermitian_balance", hermitian_defect(e.g, e.Jp, e.Jm));
              const JMat om = omega_matrix(e.g, e.Jp, e.Jm);
              r.feed("q_skew", (om + om.transpose()).max_abs());
              r.feed("p_scalar", anticommutator_defect(e.Jp, e.Jm));
              const ComplexBivector pi = pi_bivector(e.g, e.Jp, e.Jm);
              r.feed("pi_type20", type20_defect(e.Jp, pi));
              r.feed("omega_11", omega_11_defect(e.g, e.Jp, e.Jm));
              const Eigen::MatrixXcd pv = pi.value();
              r.feed("projector", (type20_projection(e.Jp.value(), pv) - pv).cwiseAbs().maxCoeff());
              r.feed("q_re_pi", q_correspondence_defect(e.g, e.Jp, e.Jm, pi));
              r.feed("pi_nonzero", pv.cwiseAbs().maxCoeff());
              r.feed("chern_holomorphic", holomorphic_residual(chern_connection(e.g, e.Jp), e.Jp, pi));
              const auto [re, im] = schouten(pi);
              r.feed("schouten_coordinate", std::max(re.max_abs(), im.max_abs()));
              const Trivector cyc = cyclic_sum_route(e.g, q_endo(e.Jp, e.Jm));
              r.feed("schouten_cyclic_sum", cyc.max_abs());
              r.feed("routes_agree", (lower(e.g, schouten(pi.re, pi.re)) - cyc).max_abs());
              r.feed("reality_bracket", (schouten(pi.re, pi.re) + schouten(pi.im, pi.im)).max_abs());
              r.feed("commuting_pair_control", pi_bivector(e.g, e.Jp, e.Jp).value().cwiseAbs().maxCoeff());
              r.feed("levi_civita_control", holomorphic_residual(levi_civita(e.g), e.Jp, pi));
            }
          });
}

void run_theorem4(Recorder& r, const SuiteConfig& c) {
  const FlagParams fp = c.flag;
  const Cp2Chart charts[] = {Cp2Chart::z, Cp2Chart::u, Cp2Chart::v};
  const auto cp = sample_points(cp2_domain(0.1), c.plan);
  r.stage({"xf_closed_vs_jet", "yf_closed_vs_jet", "chart_consistency"}, [&] {
    for (const auto& p : cp) {
      std::complex<double> xf0, yf0;
      for (Cp2Chart ch : charts) {
        const JVec x = lift(cp2_transition(Cp2Chart::z, ch, p), 3);
        const auto xf = cp2_Xf_closed(ch, x).value(), yf = cp2_Yf_closed(ch, x).value();
        r.feed("xf_closed_vs_jet", std::abs(xf - cp2_Xf_direct(ch, x).value()));
        r.feed("yf_closed_vs_jet", std::abs(yf - cp2_Yf_direct(ch, x).value()));
        if (ch == Cp2Chart::z) {
          xf0 = xf;
          yf0 = yf;
        } else {
          r.feed("chart_consistency", std::max(std::abs(xf - xf0), std::abs(yf - yf0)));
        }
      }
    }
  });

  double lambda = std::numeric_limits<double>::quiet_NaN();
  r.stage({"lambda_spread", "lambda_mean", "proportionality", "condition_i", "condition_ii"}, [&] {
    std::vector<RicciSample> rs;
    for (const auto& p : cp) rs.push_back(cp2_ricci(lift(p, 4)));
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
    for (const RicciSample& s : rs) {
      lo = std::min(lo, s.lambda());
      hi = std::max(hi, s.lambda());
      sum += s.lambda();
    }
    lambda = sum / static_cast<double>(rs.size());
    r.feed("lambda_spread", (hi - lo) / std::abs(lambda), static_cast<int>(rs.size()));
    r.feed("lambda_mean", lambda, static_cast<int>(rs.size()));
    for (const RicciSample& s : rs) r.feed("proportionality", (s.ddc_f - 3.0 * lambda * s.omega).norm());
  });

  r.stage({"ddc_lemma"}, [&] {
    for (const auto& p : cp) {
      const JVec y = lift(p, 3);
      const CVec z = complex_coords(y);
      r.feed("ddc_lemma",
             ddc_commuting_fields(cp2_X(Cp2Chart::z, z), cp2_Y(Cp2Chart::z, z), CJet(cp2_f(y, false))).residual);
    }
  });

  r.stage({"tau_vanishes_near_C"}, [&] {
    for (const auto& p : cp) {
      for (int a = 0; a < 2; ++a) {
        Eigen::VectorXd q = p;
        const double mod = std::hypot(q(2 * a), q(2 * a + 1));
        q(2 * a) *= 1e-5 / mod;
        q(2 * a + 1) *= 1e-5 / mod;
        r.feed("tau_vanishes_near_C", std::exp(cp2_f(lift(q, 0), false).value()));
      }
    }
  });

  const auto fl = sample_points(flag_domain(0.1), c.plan);
  r.stage({"F0_min_singular", "fields_commute", "sigma_holomorphic", "condition_i", "condition_ii"}, [&] {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& p : fl) {
      const double s = flag_F0_min_singular(fp, p);
      worst = std::min(worst, s);
      r.feed("F0_min_singular", s);
      const CVec z = complex_coords(lift(p, 1));
      const CVec z1 = flag_Z1(z), z2 = flag_Z2(z);
      double comm = 0.0, holo = 0.0;
      for (int a = 0; a < 3; ++a) {
        CJet s2;
        for (int b = 0; b < 3; ++b) s2 = s2 + z1[b] * d_holo(z2[a], b) - z2[b] * d_holo(z1[a], b);
        comm = std::max(comm, std::abs(s2.value()));
        for (int b = 0; b < 3; ++b)
          for (int k = 0; k < 3; ++k) holo = std::max(holo, std::abs(d_antiholo(z1[a] * z2[b] - z2[a] * z1[b], k).value()));
      }
      r.feed("fields_commute", comm);
      r.feed("sigma_holomorphic", holo);
    }
    if (!(worst > 1e-6)) {
      r.certification_failure("F0 is degenerate on the sampled flag points for (a, b) = (" + std::to_string(fp.a) + ", " +
                              std::to_string(fp.b) + ")");
      return;
    }
    if (std::isnan(lambda)) throw std::runtime_error("lambda could not be fitted");
    for (const auto& p : fl) {
      const JVec x = lift(p, 2);
      r.feed("condition_i", flag_condition_i(fp, lambda, x));
      r.feed("condition_ii", flag_condition_ii(fp, lambda, x));
    }
  });
}

std::vector<VectorField> span_fields(int which) {
  auto unit = [](int i) { return [i](const JVec&) { JVec v(4); v[i] = Jet(1.0); return v; }; };
  if (which == 0) return {unit(0), unit(1)};
  return {unit(0), [](const JVec& x) { return JVec{Jet(), x[0], Jet(1.0), Jet()}; }};
}

ChartDomain unit_box() {
  ChartDomain d;
  d.dim = 4;
  d.lo = Eigen::VectorXd::Constant(4, -1.0);
  d.hi = Eigen::VectorXd::Constant(4, 1.0);
  return d;
}

void run_engel(Recorder& r, const SuiteConfig& c, const ModelDescriptor& m) {
  certify(m, c);
  r.stage({"tower_normal_form", "tower_integrable", "tower_other_control"}, [&] {
    for (const auto& t : rank_tower(engel_normal_form(), unit_box(), c.plan))
      r.feed("tower_normal_form", t.verdict == TowerVerdict::engel && t.r1 == 2 && t.r2 == 3 && t.r3 == 4 ? 0.0 : 1.0);
    for (const auto& t : rank_tower(span_fields(0), unit_box(), c.plan))
      r.feed("tower_integrable", t.verdict == TowerVerdict::integrable ? 0.0 : 1.0);
    for (const auto& t : rank_tower(span_fields(1), unit_box(), c.plan))
      r.feed("tower_other_control", t.verdict == TowerVerdict::other && t.r2 == 3 && t.r3 == 3 ? 0.0 : 1.0);
  });

  Example2Params par0 = c.example2;
  par0.t = 0.0;
  const auto pts = sample_points(m.domain, c.plan);
  r.stage({"n_square", "n_kernel_image", "n_kernel_eigen", "n_eigen_annihilated", "n_ranks", "synthetic_basis",
           "synthetic_theta", "synthetic_kernel", "synthetic_anticommutator", "degenerate_lee_inconclusive",
           "constant_p_vanishing_lee"},
          [&] {
            std::mt19937_64 rng(c.plan.seed);
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            for (const auto& p : pts) {
              const Example2Point e = example2_at(m, par0, lift(p, 1));
              const NEndosReport n = check_n_endos(n_endos(e.Jp, e.Jm));
              r.feed("n_square", n.square);
              r.feed("n_kernel_image", n.kernel_image);
              r.feed("n_kernel_eigen", n.kernel_eigen);
              r.feed("n_eigen_annihilated", n.eigen_annihilated);
              r.feed("n_ranks", n.rank_plus == 2 && n.rank_minus == 2 && n.rank_kernels == 4 ? 0.0 : 1.0);

              const Eigen::Vector4d th(u(rng), u(rng), u(rng), u(rng));
              const LeeFields S = lee_fields_with(e.g, e.Jp, e.Jm, constant_vec(th));
              if (S.definitive) {
                const BasisResiduals b = basis_identities(S);
                r.feed("synthetic_basis", std::max(b.null_xy, b.jx_y));
                r.feed("synthetic_theta", b.theta_pp);
                r.feed("synthetic_kernel", b.kernel);
                r.feed("synthetic_anticommutator", b.anticommutator);
              } else {
                for (const char* k : {"synthetic_basis", "synthetic_theta", "synthetic_kernel", "synthetic_anticommutator"})
                  r.inconclusive(k);
              }

              const LeeFields L0 = lee_fields(e.g, e.Jp, e.Jm);
              const bool inconclusive = theorem7_point(L0).branch == Theorem7Branch::inconclusive && !L0.definitive;
              r.feed("degenerate_lee_inconclusive", inconclusive ? 0.0 : 1.0);
              r.feed("constant_p_vanishing_lee", max_abs(L0.theta_p));
            }
          });

  r.stage({"lee_balance", "basis", "y_identity", "kernel", "frame_rank", "dp_k", "x_f", "y_f", "nxy_parallel",
           "nxy_coefficient", "nabla_n_yy", "nabla_n_jyy", "nabla_n_formula", "dichotomy_violated",
           "dichotomy_geodesic", "dichotomy_engel"},
          [&] {
            int geodesic = 0, engel = 0, violated = 0, definitive = 0, undecided = 0;
            for (const auto& p : sample_points(deform_domain(m), c.plan)) {
              check_small_t(m, c.example2, p);
              const BihermitianExtract e = deformed_bihermitian(m, c.example2, lift(p, 4));
              const LeeFields L = lee_fields(e.g, e.Jp, e.Jm);
              if (!L.definitive) {
                ++undecided;
                continue;
              }
              ++definitive;
              r.feed("lee_balance", L.balance);
              const BasisResiduals b = basis_identities(L);
              r.feed("basis", std::max(b.null_xy, b.jx_y));
              r.feed("y_identity", std::max(b.theta_pp, b.y_closed));
              r.feed("kernel", b.kernel);
              r.feed("frame_rank", b.frame_sigma);
              const DerivativeResiduals dr = derivative_identities(L);
              r.feed("dp_k", dr.dp_k);
              r.feed("x_f", dr.x_f);
              r.feed("y_f", dr.y_f);
              r.feed("nxy_parallel", dr.nxy_parallel);
              r.feed("nxy_coefficient", dr.nxy_coeff);
              r.feed("nabla_n_yy", dr.nabla_n_yy);
              r.feed("nabla_n_jyy", dr.nabla_n_jyy);
              r.feed("nabla_n_formula", dr.nabla_n_formula);
              switch (theorem7_point(L).branch) {
                case Theorem7Branch::geodesic: ++geodesic; break;
                case Theorem7Branch::engel: ++engel; break;
                case Theorem7Branch::violated: ++violated; break;
                case Theorem7Branch::inconclusive: ++undecided; --definitive; break;
              }
            }
            for (const char* k : {"lee_balance", "basis", "y_identity", "kernel", "frame_rank", "dp_k", "x_f", "y_f",
                                  "nxy_parallel", "nxy_coefficient", "nabla_n_yy", "nabla_n_jyy", "nabla_n_formula"})
              r.inconclusive(k, undecided);
            for (const char* k : {"dichotomy_violated", "dichotomy_geodesic", "dichotomy_engel"}) r.inconclusive(k, undecided);
            if (definitive > 0) {
              r.feed("dichotomy_violated", violated, definitive);
              r.feed("dichotomy_geodesic", geodesic, definitive);
              r.feed("dichotomy_engel", engel, definitive);
            }
          });
}

SuiteReport run_one(const SuiteInfo& info, const std::string& model, const SuiteConfig& c) {
  Recorder r(info, model, c);
  try {
    if (info.name == "theorem4") {
      run_theorem4(r, c);
    } else {
      const ModelDescriptor m = build_model(model);
      if (info.name == "parahyperkahler") run_parahyperkahler(r, c, m);
      else if (info.name == "lemma1") run_lemma1(r, c, m);
      else if (info.name == "gpk-example2") run_gpk(r, c, m);
      else if (info.name == "courant") run_courant(r, c, m);
      else if (info.name == "poisson") run_poisson(r, c, m);
      else if (info.name == "engel") run_engel(r, c, m);
    }
  } catch (const ModelError& e) {
    r.certification_failure(e.what());
  }
  SuiteReport rep = r.finish();
  if (!rep.error.empty())
    for (CheckRecord& ck : rep.checks)
      if (ck.error.empty() && ck.points == 0) ck.error = "model certification failed";
  return rep;
}

std::string model_for(const SuiteInfo& info, const SuiteConfig& c) {
  const auto& ms = info.models;
  return std::find(ms.begin(), ms.end(), c.model) != ms.end() ? c.model : ms.front();
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() { return catalog_storage(); }

const SuiteInfo& suite_info(const std::string& name) {
  for (const SuiteInfo& s : suite_catalog())
    if (s.name == name) return s;
  throw ConfigError("unknown suite '" + name + "'");
}

std::vector<std::string> model_names() { return {"torus", "kodaira", "flag"}; }

std::vector<std::string> suite_names() {
  std::vector<std::string> r;
  for (const SuiteInfo& s : suite_catalog()) r.push_back(s.name);
  r.push_back("all");
  return r;
}

void validate(const SuiteConfig& c) {
  const auto models = model_names();
  if (std::find(models.begin(), models.end(), c.model) == models.end()) throw ConfigError("unknown model '" + c.model + "'");
  if (c.suite != "all") {
    const SuiteInfo& s = suite_info(c.suite);
    if (std::find(s.models.begin(), s.models.end(), c.model) == s.models.end())
      throw ConfigError("suite '" + c.suite + "' does not run on model '" + c.model + "'");
  }
  if (c.plan.count < 1) throw ConfigError("samples must be positive");
  try {
    validate(c.example2);
    validate(c.flag);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!(c.example2.step > 0.0) || !std::isfinite(c.example2.step)) throw ConfigError("step must be positive");
  if (!std::isfinite(c.example2.t)) throw ConfigError("t must be finite");
  const auto hs = hamiltonian_names();
  if (std::find(hs.begin(), hs.end(), c.example2.hamiltonian) == hs.end())
    throw ConfigError("unknown Hamiltonian '" + c.example2.hamiltonian + "'");

  for (const auto& [key, value] : c.tol) {
    if (!std::isfinite(value) || value < 1e-14) throw ConfigError("tolerance for '" + key + "' must be at least 1e-14");
    bool found = false;
    for (const SuiteInfo& s : suite_catalog())
      for (const CheckDef& ck : s.checks) {
        if (key != ck.name && key != s.name + "." + ck.name) continue;
        found = true;
        if (ck.kind == K::info) throw ConfigError("check '" + key + "' is informational and has no tolerance");
        if (ck.kind == K::upper && value < ck.tolerance)
          throw ConfigError("tolerance for '" + key + "' may only be loosened (default " + num(ck.tolerance) + ")");
        if (ck.kind == K::lower && value > ck.tolerance)
          throw ConfigError("bound for '" + key + "' may only be loosened (default " + num(ck.tolerance) + ")");
      }
    if (!found) throw ConfigError("unknown check '" + key + "' in tolerance override");
  }
}

nlohmann::ordered_json config_echo(const SuiteConfig& c) {
  nlohmann::ordered_json j;
  j["model"] = c.model;
  j["suite"] = c.suite;
  j["samples"] = c.plan.count;
  j["seed"] = c.plan.seed;
  nlohmann::ordered_json tol = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.tol) tol[k] = v;
  j["tol"] = tol;
  j["a"] = c.example2.a;
  j["b"] = c.example2.b;
  j["c"] = c.example2.c;
  j["f_expr"] = c.example2.hamiltonian;
  j["t"] = c.example2.t;
  j["step"] = c.example2.step;
  j["fa"] = c.flag.a;
  j["fb"] = c.flag.b;
  return j;
}

VerificationReport run_suite(const SuiteConfig& c) {
  validate(c);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.engine = kEngineVersion;
  rep.config = config_echo(c);
  bool certification = false;
  for (const SuiteInfo& s : suite_catalog()) {
    if (c.suite != "all" && c.suite != s.name) continue;
    SuiteReport sr = run_one(s, model_for(s, c), c);
    if (!sr.error.empty()) certification = true;
    rep.suites.push_back(std::move(sr));
  }
  rep.exit_code = certification ? 3 : (rep.pass() ? 0 : 1);
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

VerificationReport config_error_report(const SuiteConfig& c, const std::string& message) {
  VerificationReport rep;
  rep.engine = kEngineVersion;
  rep.config = config_echo(c);
  rep.error = message;
  rep.exit_code = 2;
  return rep;
}

}  // namespace pbh
