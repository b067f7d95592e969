#include "pbh/structures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pbh {

namespace {

// Full antisymmetric array of a 3-form: a[(i * n + j) * n + k] = w(d_i, d_j, d_k).
std::vector<Jet> three_array(const Form& w) {
  const int n = w.dim();
  std::vector<Jet> a(static_cast<size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (i != j && j != k && i != k) a[(i * n + j) * n + k] = w.component({i, j, k});
  return a;
}

}  // namespace

std::pair<int, int> signature(const Eigen::MatrixXd& g, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (g + g.transpose()));
  int pos = 0, neg = 0;
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    if (l > tol * scale) ++pos;
    else if (l < -tol * scale) ++neg;
  }
  return {pos, neg};
}

JMat fundamental_matrix(const JMat& g, const JMat& J) { return J.transpose() * g; }

Form fundamental_form(const JMat& g, const JMat& J) { return Form::from_matrix(fundamental_matrix(g, J)); }

JMat compatibility_defect(const JMat& g, const JMat& A, double s) {
  return A.transpose() * g * A - g * Jet(s);
}

double paraquaternion_defect(const JMat& j1, const JMat& j2, const JMat& j3) {
  const int n = j1.rows();
  const JMat id = JMat::identity(n);
  const JMat checks[] = {j1 * j1 + id, j2 * j2 - id, j3 * j3 - id, j1 * j2 - j3, j2 * j1 + j3,
                         j2 * j3 + j1, j3 * j2 - j1, j3 * j1 - j2, j1 * j3 + j2};
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.max_abs());
  return m;
}

std::vector<JVec> nijenhuis(const JMat& J) {
  const int n = J.rows();
  std::vector<JVec> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const JVec u = J.col(i), v = J.col(j);
      // [Jd_i, d_j] = -d_j(Jd_i), [d_i, Jd_j] = d_i(Jd_j); coordinate fields commute.
      out.push_back(lie_bracket(u, v) + J * derivative(u, j) - J * derivative(v, i));
    }
  return out;
}

double nijenhuis_residual(const JMat& J) {
  double m = 0.0;
  for (const auto& v : nijenhuis(J)) m = std::max(m, max_abs(v));
  return m;
}

LeeSolution solve_lee(const Form& F, const Form& dF) {
  const int n = F.dim();
  if (n != 4) throw std::invalid_argument("Lee form is defined in dimension 4 only");
  JMat M(4, 4);
  for (int i = 0; i < 4; ++i) {
    JVec e(4);
    e[i] = Jet(1.0);
    const Form w = wedge(Form::from_covector(e), F);
    for (int p = 0; p < 4; ++p) M(p, i) = w[p];
  }
  LeeSolution s;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M.value());
  const auto& sv = svd.singularValues();
  s.condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  JVec rhs(4);
  for (int p = 0; p < 4; ++p) rhs[p] = dF[p];
  s.theta = Form::from_covector(inverse(M) * rhs);
  return s;
}

LeeSolution lee_form(const JMat& g, const JMat& J) {
  const Form F = fundamental_form(g, J);
  return solve_lee(F, d(F));
}

Connection levi_civita(const JMat& g) {
  const int n = g.rows();
  const JMat gi = inverse(g);
  std::vector<JMat> dg;
  for (int l = 0; l < n; ++l) dg.push_back(g.derivative(l));
  Connection D;
  D.c.assign(n, JMat(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      JVec low(n);  // Gamma_{l,ij}
      for (int l = 0; l < n; ++l) low[l] = 0.5 * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
      for (int k = 0; k < n; ++k) {
        Jet s;
        for (int l = 0; l < n; ++l) s += gi(k, l) * low[l];
        D.c[k](i, j) = s;
        D.c[k](j, i) = s;
      }
    }
  return D;
}

Connection chern_connection(const JMat& g, const JMat& J) {
  const int n = g.rows();
  Connection D = levi_civita(g);
  const JMat gi = inverse(g);
  const auto a = three_array(d(fundamental_form(g, J)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      JVec low(n);  // dF(J d_i, d_j, d_l)
      for (int l = 0; l < n; ++l) {
        Jet s;
        for (int m = 0; m < n; ++m) s += J(m, i) * a[(m * n + j) * n + l];
        low[l] = s;
      }
      for (int k = 0; k < n; ++k) {
        Jet s;
        for (int l = 0; l < n; ++l) s += gi(k, l) * low[l];
        D.c[k](i, j) -= 0.5 * s;
      }
    }
  return D;
}

JVec covariant(const Connection& D, const JVec& X, const JVec& Y) {
  const int n = D.dim();
  JVec r = directional(X, Y);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[k] += D.c[k](i, j) * X[i] * Y[j];
  return r;
}

JMat connection_slice(const Connection& D, int i) {
  const int n = D.dim();
  JMat c(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) c(k, l) = D.c[k](i, l);
  return c;
}

JMat covariant_endo(const Connection& D, int i, const JMat& A) {
  const JMat c = connection_slice(D, i);
  return A.derivative(i) + c * A - A * c;
}

JMat covariant_endo(const Connection& D, const JVec& X, const JMat& A) {
  const int n = D.dim();
  JMat r(n, n);
  for (int i = 0; i < n; ++i) r += covariant_endo(D, i, A) * X[i];
  return r;
}

JMat covariant_metric(const Connection& D, int i, const JMat& g) {
  const JMat c = connection_slice(D, i);
  return g.derivative(i) - c.transpose() * g - g * c;
}

double torsion(const Connection& D) {
  double m = 0.0;
  for (const auto& c : D.c) m = std::max(m, (c - c.transpose()).max_abs());
  return m;
}

Form d_pm_F(const JMat& J, const Form& dF) { return -pullback_linear(J, dF); }

Form d_pm_F(const JMat& g, const JMat& J) { return d_pm_F(J, d(fundamental_form(g, J))); }

Jet anticommutator_scalar(const JMat& Jp, const JMat& Jm) { return 0.25 * (Jp * Jm).trace(); }

double anticommutator_defect(const JMat& Jp, const JMat& Jm) {
  const Jet p = anticommutator_scalar(Jp, Jm);
  return (anticommutator(Jp, Jm) - JMat::identity(Jp.rows()) * (2.0 * p)).max_abs();
}

ParaHypercomplex build_parahypercomplex(const JMat& Jp, const JMat& Jm, double margin) {
  ParaHypercomplex h;
  h.Jp = Jp;
  h.Jm = Jm;
  h.p = anticommutator_scalar(Jp, Jm);
  if (!(std::abs(h.p.value()) > 1.0 + margin)) {
    std::ostringstream os;
    os << "|p| = " << std::abs(h.p.value()) << " is not above 1 + " << margin;
    throw BranchError(os.str());
  }
  h.root = sqrt(h.p * h.p - 1.0);
  const Jet r = inv(h.root);
  h.K = commutator(Jp, Jm) * (0.5 * r);
  h.S = -(Jm + Jp * h.p) * r;
  return h;
}

JVec p_gradient_residual(const JMat& g, const JMat& Jp, const JMat& Jm) {
  const JVec tp = lee_form(g, Jp).theta.to_covector();
  const JVec tm = lee_form(g, Jm).theta.to_covector();
  const JVec dp = gradient(anticommutator_scalar(Jp, Jm));
  return Jet(-4.0) * dp + covector_times(tp - tm, commutator(Jp, Jm));
}

std::vector<JMat> nabla_J_from_dF(const JMat& J, const Form& dF) {
  const int n = J.rows();
  const auto a = three_array(dF);
  auto at = [&](int i, int j, int k) -> const Jet& { return a[(i * n + j) * n + k]; };
  // A[x](b, c) = dF(J d_x, d_b, d_c).
  std::vector<JMat> A(n, JMat(n, n));
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Jet s;
        for (int m = 0; m < n; ++m) s += J(m, x) * at(m, b, c);
        A[x](b, c) = s;
      }
  std::vector<JMat> T(n, JMat(n, n));
  for (int x = 0; x < n; ++x) {
    // dF(JX, Y, JZ) = (A J)(y, z); dF(JX, JY, Z) = (J^T A)(y, z).
    T[x] = (A[x] * J + J.transpose() * A[x]) * Jet(0.5);
  }
  return T;
}

std::vector<JMat> nabla_J_lowered(const Connection& lc, const JMat& g, const JMat& J) {
  const int n = g.rows();
  std::vector<JMat> T;
  for (int x = 0; x < n; ++x) T.push_back(covariant_endo(lc, x, J).transpose() * g);
  return T;
}

std::vector<JMat> nabla_J_from_lee(const JMat& g, const JMat& J, const JVec& theta) {
  const int n = g.rows();
  const JMat gJ = J.transpose() * g;  // gJ(x, z) = g(J d_x, d_z)
  const JVec tJ = covector_times(theta, J);
  std::vector<JMat> T(n, JMat(n, n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        T[x](y, z) = 0.5 * (g(x, z) * tJ[y] - gJ(x, z) * theta[y] - g(x, y) * tJ[z] + gJ(x, y) * theta[z]);
  return T;
}

Eigen::MatrixXd pseudo_orthonormal_frame(const Eigen::MatrixXd& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (g + g.transpose()));
  const int n = static_cast<int>(g.rows());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return es.eigenvalues()(a) > es.eigenvalues()(b); });
  Eigen::MatrixXd e(n, n);
  for (int i = 0; i < n; ++i) {
    const double l = es.eigenvalues()(order[i]);
    if (std::abs(l) < 1e-14) throw DegeneracyError("degenerate metric has no pseudo-orthonormal frame");
    e.col(i) = es.eigenvectors().col(order[i]) / std::sqrt(std::abs(l));
  }
  return e;
}

}  // namespace pbh
