#include "pbh/engel.hpp"

#include <algorithm>
#include <cmath>

namespace pbh {

namespace {

double max_abs_vec(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

int numerical_rank(const Eigen::MatrixXd& A) {
  if (A.size() == 0) return 0;
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(A).singularValues();
  if (s(0) == 0.0) return 0;
  return static_cast<int>((s.array() > 1e-8 * s(0)).count());
}

Eigen::MatrixXd columns(const std::vector<JVec>& vs) {
  Eigen::MatrixXd m(vs.empty() ? 0 : vs[0].size(), vs.size());
  for (size_t j = 0; j < vs.size(); ++j) m.col(static_cast<int>(j)) = value(vs[j]);
  return m;
}

Eigen::MatrixXd hstack(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd m(a.rows(), a.cols() + b.cols());
  m << a, b;
  return m;
}

}  // namespace

Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& A) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const Eigen::VectorXd s = svd.singularValues();
  const double thr = 1e-8 * std::max(s.size() ? s(0) : 0.0, 1e-300);
  int r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  return svd.matrixV().rightCols(A.cols() - r);
}

Eigen::MatrixXd image_basis(const Eigen::MatrixXd& A) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullU);
  const Eigen::VectorXd s = svd.singularValues();
  const double thr = 1e-8 * std::max(s.size() ? s(0) : 0.0, 1e-300);
  int r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  return svd.matrixU().leftCols(r);
}

double subspace_distance(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  const Eigen::MatrixXd qa = image_basis(A), qb = image_basis(B);
  if (qa.cols() != qb.cols()) return 1.0;
  if (qa.cols() == 0) return 0.0;
  const Eigen::MatrixXd r = qa - qb * (qb.transpose() * qa);
  return Eigen::JacobiSVD<Eigen::MatrixXd>(r).singularValues()(0);
}

NEndos n_endos(const JMat& Jp, const JMat& Jm, double margin) {
  const ParaHypercomplex h = build_parahypercomplex(Jp, Jm, margin);
  return {Jp + Jm * (h.p + h.root), Jp + Jm * (h.p - h.root), h.K, h.p, h.root};
}

NEndosReport check_n_endos(const NEndos& n) {
  const Eigen::MatrixXd Np = n.Np.value(), Nm = n.Nm.value(), K = n.K.value();
  const Eigen::MatrixXd Id = Eigen::MatrixXd::Identity(K.rows(), K.cols());
  NEndosReport r;
  r.square = std::max((Np * Np).cwiseAbs().maxCoeff(), (Nm * Nm).cwiseAbs().maxCoeff());
  const Eigen::MatrixXd kp = kernel_basis(Np), km = kernel_basis(Nm);
  const Eigen::MatrixXd kminus = kernel_basis(K + Id), kplus = kernel_basis(K - Id);
  r.kernel_image = std::max(subspace_distance(kp, Np), subspace_distance(km, Nm));
  r.kernel_eigen = std::max(subspace_distance(kp, kminus), subspace_distance(km, kplus));
  r.eigen_annihilated = kminus.cols() ? (Np * kminus).cwiseAbs().maxCoeff() : 0.0;
  r.rank_plus = numerical_rank(Np);
  r.rank_minus = numerical_rank(Nm);
  r.rank_kernels = numerical_rank(hstack(kp, km));
  return r;
}

LeeFields lee_fields_with(const JMat& g, const JMat& Jp, const JMat& Jm, const JVec& theta_p, double null_tol) {
  const NEndos n = n_endos(Jp, Jm);
  LeeFields L;
  L.g = g;
  L.Jp = Jp;
  L.Jm = Jm;
  L.K = n.K;
  L.p = n.p;
  L.root = n.root;
  L.f = n.p - n.root;
  L.N = n.Nm;
  L.theta_p = theta_p;
  L.theta_m = -theta_p;
  L.theta = inverse(g) * theta_p;
  L.norm2 = dot(theta_p, L.theta);
  L.X = L.N * L.theta;
  L.Y = L.theta + L.K * L.theta;
  L.definitive = std::abs(L.norm2.value()) > null_tol;
  return L;
}

LeeFields lee_fields(const JMat& g, const JMat& Jp, const JMat& Jm, double null_tol) {
  const JVec tp = lee_form(g, Jp).theta.to_covector();
  const JVec tm = lee_form(g, Jm).theta.to_covector();
  LeeFields L = lee_fields_with(g, Jp, Jm, tp, null_tol);
  L.theta_m = tm;
  L.balance = max_abs(tp + tm);
  return L;
}

BasisResiduals basis_identities(const LeeFields& L) {
  BasisResiduals r;
  const JMat& g = L.g;
  const JVec JX = L.Jp * L.X, JY = L.Jp * L.Y;
  auto gv = [&](const JVec& a, const JVec& b) { return std::abs(bilinear(g, a, b).value()); };
  r.null_xy = std::max({gv(L.X, L.X), gv(L.Y, L.Y), gv(L.X, L.Y), gv(L.X, JX), gv(L.Y, JY)});
  const double f = L.f.value(), p = L.p.value(), n2 = L.norm2.value();
  r.jx_y = std::abs(bilinear(g, JX, L.Y).value() - 2.0 * (f * p - 1.0) * n2);
  r.f_square = std::abs((f * f - 1.0) - 2.0 * (f * p - 1.0));
  const JVec jj = L.Jp * (L.Jm * L.theta);
  r.theta_pp = std::abs(bilinear(g, L.theta, jj).value() - p * n2);
  r.y_closed = max_abs(L.Y - inv(L.root) * (jj - L.f * L.theta));
  r.kernel = std::max(max_abs(L.N * L.X), max_abs(L.N * L.Y));
  const int n = g.rows();
  r.anticommutator = (anticommutator(L.N, L.Jp) - JMat::identity(n) * (2.0 * (L.p * L.f - 1.0))).max_abs();
  r.frame_sigma = Eigen::JacobiSVD<Eigen::MatrixXd>(columns({L.X, L.Y, JX, JY})).singularValues().minCoeff();
  return r;
}

DerivativeResiduals derivative_identities(const LeeFields& L) {
  DerivativeResiduals r;
  const int n = L.g.rows();
  const JVec dp = gradient(L.p);
  r.dp_k = max_abs(dp - L.root * covector_times(L.theta_p, L.K));
  r.x_f = std::abs(directional(L.X, L.f).value());
  r.y_f = std::abs((directional(L.Y, L.f) + L.f * L.norm2).value());

  const Eigen::VectorXd v = value(L.N * lie_bracket(L.X, L.Y));
  const Eigen::VectorXd y = value(L.Y);
  const double c = y.dot(v) / y.dot(y);
  r.nxy_parallel = max_abs_vec(v - c * y);
  r.nxy_coeff = std::abs(c - (L.f * L.root * L.norm2).value());

  const Connection lc = levi_civita(L.g);
  r.nabla_n_yy = max_abs(covariant_endo(lc, L.Y, L.N) * L.Y);
  const JVec JY = L.Jp * L.Y;
  r.nabla_n_jyy =
      max_abs(Jet(2.0) * (covariant_endo(lc, JY, L.N) * L.Y) - (2.0 * L.p * L.f * L.norm2) * L.Y);

  // 2(nabla_A N)B = g(A,B) M theta + g(MA,B) theta + theta(MB) A - theta(B) MA + 2 A(f) J- B, M = J+ - f J-.
  const JMat M = L.Jp - L.Jm * L.f;
  const JVec Mt = M * L.theta;
  const JVec df = gradient(L.f);
  for (int a = 0; a < n; ++a) {
    const JMat DN = covariant_endo(lc, a, L.N);
    for (int b = 0; b < n; ++b) {
      JVec lhs(n), rhs(n);
      for (int i = 0; i < n; ++i) {
        lhs[i] = 2.0 * DN(i, b);
        rhs[i] = L.g(a, b) * Mt[i] + (M.transpose() * L.g)(a, b) * L.theta[i] + 2.0 * df[a] * L.Jm(i, b);
      }
      rhs[a] += dot(L.theta_p, M.col(b));
      for (int i = 0; i < n; ++i) rhs[i] -= L.theta_p[b] * M(i, a);
      r.nabla_n_formula = std::max(r.nabla_n_formula, max_abs(lhs - rhs));
    }
  }
  return r;
}

const char* to_string(TowerVerdict v) {
  switch (v) {
    case TowerVerdict::engel: return "engel";
    case TowerVerdict::integrable: return "integrable";
    case TowerVerdict::other: return "other";
  }
  return "?";
}

RankTowerReport rank_tower(const std::vector<JVec>& gens) {
  RankTowerReport r;
  const Eigen::MatrixXd m1 = columns(gens);
  r.r1 = numerical_rank(m1);
  if (r.r1 < static_cast<int>(gens.size())) throw DegeneracyError("rank_tower: generators are linearly dependent");
  std::vector<JVec> level2;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) level2.push_back(lie_bracket(gens[i], gens[j]));
  std::vector<JVec> level3;
  for (const JVec& a : gens)
    for (const JVec& b : level2) level3.push_back(lie_bracket(a, b));
  const Eigen::MatrixXd m2 = hstack(m1, columns(level2));
  r.r2 = numerical_rank(m2);
  r.r3 = numerical_rank(hstack(m2, columns(level3)));
  const int n = static_cast<int>(gens[0].size());
  if (r.r2 == r.r1) r.verdict = TowerVerdict::integrable;
  else if (n == 4 && r.r1 == 2 && r.r2 == 3 && r.r3 == 4) r.verdict = TowerVerdict::engel;
  return r;
}

std::vector<RankTowerReport> rank_tower(const std::vector<VectorField>& gens, const ChartDomain& domain,
                                        const SamplePlan& plan) {
  const auto pts = sample_points(domain, plan);
  std::vector<RankTowerReport> out(pts.size());
  parallel_for(static_cast<int>(pts.size()), [&](int i) {
    const JVec x = lift(pts[i], 2);
    std::vector<JVec> v;
    for (const auto& g : gens) v.push_back(g(x));
    out[i] = rank_tower(v);
  });
  return out;
}

std::vector<VectorField> engel_normal_form() {
  return {[](const JVec&) { return JVec{Jet(), Jet(), Jet(), Jet(1.0)}; },
          [](const JVec& x) { return JVec{Jet(1.0), x[2], x[3], Jet()}; }};
}

const char* to_string(Theorem7Branch b) {
  switch (b) {
    case Theorem7Branch::geodesic: return "geodesic";
    case Theorem7Branch::engel: return "engel";
    case Theorem7Branch::violated: return "violated";
    case Theorem7Branch::inconclusive: return "inconclusive";
  }
  return "?";
}

Theorem7Point theorem7_point(const LeeFields& L, double geodesic_tol) {
  Theorem7Point t;
  if (!L.definitive) return t;
  const JVec JX = L.Jp * L.X, JY = L.Jp * L.Y;
  const Eigen::Vector4d v = value(covariant(levi_civita(L.g), L.Y, L.Y));
  const Eigen::Matrix4d frame = columns({L.X, L.Y, JX, JY});
  const Eigen::Vector4d c = frame.colPivHouseholderQr().solve(v);
  t.x_component = std::abs(c(0)) * value(L.X).norm() / std::max(v.norm(), 1e-300);
  const bool tower_ready = L.X[0].order() >= 2;
  if (tower_ready) t.tower = rank_tower({L.X, L.Y});
  if (t.x_component <= geodesic_tol) t.branch = Theorem7Branch::geodesic;
  else if (tower_ready) t.branch = t.tower.verdict == TowerVerdict::engel ? Theorem7Branch::engel : Theorem7Branch::violated;
  return t;
}

}  // namespace pbh
