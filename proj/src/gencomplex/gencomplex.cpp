#include "pbh/gencomplex.hpp"

#include <cmath>
#include <random>

namespace pbh {

JVec stack(const GenSection& a) {
  JVec s(a.v);
  s.insert(s.end(), a.xi.begin(), a.xi.end());
  return s;
}

GenSection unstack(const JVec& s) {
  const size_t n = s.size() / 2;
  return {JVec(s.begin(), s.begin() + n), JVec(s.begin() + n, s.end())};
}

GenSection apply(const JMat& I, const GenSection& a) { return unstack(I * stack(a)); }

GenSection operator+(const GenSection& a, const GenSection& b) { return {a.v + b.v, a.xi + b.xi}; }
GenSection operator-(const GenSection& a, const GenSection& b) { return {a.v - b.v, a.xi - b.xi}; }

Jet pairing(const GenSection& a, const GenSection& b) { return 0.5 * (dot(a.xi, b.v) + dot(b.xi, a.v)); }

Eigen::MatrixXd pairing_matrix(int n) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  p.topRightCorner(n, n) = 0.5 * Eigen::MatrixXd::Identity(n, n);
  p.bottomLeftCorner(n, n) = 0.5 * Eigen::MatrixXd::Identity(n, n);
  return p;
}

GenSection courant_bracket(const GenSection& a, const GenSection& b, const Form& H) {
  const Form xi = Form::from_covector(a.xi), eta = Form::from_covector(b.xi);
  Form c = lie_derivative(a.v, eta) - lie_derivative(b.v, xi);
  Form f(static_cast<int>(a.v.size()), 0);
  f[0] = 0.5 * (dot(a.v, b.xi) - dot(b.v, a.xi));
  c -= d(f);
  if (H.degree() == 3) c += interior(b.v, interior(a.v, H));
  return {lie_bracket(a.v, b.v), c.to_covector()};
}

JMat b_transform(const JMat& b) {
  const int n = b.rows();
  JMat e = JMat::identity(2 * n);
  e.set_block(n, 0, b.transpose());
  return e;
}

double square_defect(const JMat& I) { return (I * I + JMat::identity(I.rows())).max_abs(); }

double orthogonality_defect(const JMat& I) {
  const JMat P = JMat::constant(pairing_matrix(I.rows() / 2));
  return (I.transpose() * P * I - P).max_abs();
}

double gcs_nijenhuis(const JVec& x, const JMat& I, const Form& H, int random_sections, std::uint64_t seed) {
  const int n = static_cast<int>(x.size());
  std::vector<GenSection> secs;
  for (int a = 0; a < 2 * n; ++a) {
    JVec s(2 * n);
    s[a] = Jet(1.0);
    secs.push_back(unstack(s));
  }
  std::mt19937_64 rng(seed);
  auto unit = [&] { return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0; };
  const Eigen::VectorXd x0 = value(x);
  for (int r = 0; r < random_sections; ++r) {
    JVec s(2 * n);
    for (int a = 0; a < 2 * n; ++a) {
      Jet c(unit());
      for (int j = 0; j < n; ++j) c += unit() * (x[j] - x0(j));
      s[a] = c;
    }
    secs.push_back(unstack(s));
  }
  std::vector<GenSection> isecs;
  for (const auto& s : secs) isecs.push_back(apply(I, s));
  double m = 0.0;
  for (size_t i = 0; i < secs.size(); ++i)
    for (size_t j = i + 1; j < secs.size(); ++j) {
      const GenSection t1 = courant_bracket(secs[i], secs[j], H);
      const GenSection t2 = courant_bracket(isecs[i], isecs[j], H);
      const GenSection t3 = apply(I, courant_bracket(isecs[i], secs[j], H) + courant_bracket(secs[i], isecs[j], H));
      const JVec nvec = stack(t1 - t2 + t3);
      m = std::max(m, max_abs(nvec));
    }
  return m;
}

JMat gcs_from_form(const JMat& B, const JMat& w) {
  const int n = B.rows();
  const JMat Bh = B.transpose(), W = w.transpose();
  JMat Wi;
  try {
    Wi = inverse(W);
  } catch (const DegeneracyError&) {
    throw DegeneracyError("imaginary part of the 2-form is degenerate");
  }
  JMat I(2 * n, 2 * n);
  I.set_block(0, 0, -(Wi * Bh));
  I.set_block(0, n, -Wi);
  I.set_block(n, 0, W + Bh * Wi * Bh);
  I.set_block(n, n, Bh * Wi);
  return I;
}

GenPair gualtieri_build(const JMat& g, const JMat& Jp, const JMat& Jm, const JMat& b) {
  const int n = g.rows();
  // Fh = F^T is the map X -> i_X F.
  const JMat Fp = fundamental_matrix(g, Jp).transpose(), Fm = fundamental_matrix(g, Jm).transpose();
  const JMat Fpi = inverse(Fp), Fmi = inverse(Fm);
  auto make = [&](double s) {
    JMat I(2 * n, 2 * n);
    I.set_block(0, 0, (Jp + Jm * Jet(s)) * Jet(0.5));
    I.set_block(0, n, -(Fpi - Fmi * Jet(s)) * Jet(0.5));
    I.set_block(n, 0, (Fp - Fm * Jet(s)) * Jet(0.5));
    I.set_block(n, n, -(Jp.transpose() + Jm.transpose() * Jet(s)) * Jet(0.5));
    return b_transform(b) * I * b_transform(-b);
  };
  return {make(1.0), make(-1.0)};
}

BihermitianExtract extract_bihermitian(const JMat& I1, const JMat& I2) {
  const int n = I1.rows() / 2;
  const JMat G = I1 * I2;
  BihermitianExtract e;
  e.g = -inverse(G.block(0, n, n, n));
  const JMat bh = e.g * G.block(0, 0, n, n);
  e.b = bh.transpose();
  auto transport = [&](const JMat& lower) {
    JMat s(2 * n, n);
    s.set_block(0, 0, JMat::identity(n));
    s.set_block(n, 0, lower);
    return (I1 * s).block(0, 0, n, n);
  };
  e.Jp = transport(bh + e.g);
  e.Jm = transport(bh - e.g);
  return e;
}

namespace {

// Orthonormal basis of ker(G - s Id) with the cluster tolerance relative to |G|.
Eigen::MatrixXd eigenspace(const Eigen::MatrixXd& G, double s) {
  const int m = static_cast<int>(G.rows());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(G - s * Eigen::MatrixXd::Identity(m, m), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double tol = 1e-7 * std::max(1.0, G.norm());
  int k = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= tol) ++k;
  return svd.matrixV().rightCols(k);
}

}  // namespace

GpkPointReport check_gpk_point(const Eigen::MatrixXd& I1, const Eigen::MatrixXd& I2, double commute_tol) {
  GpkPointReport r;
  const int n = static_cast<int>(I1.rows()) / 2;
  r.commutator = (I1 * I2 - I2 * I1).cwiseAbs().maxCoeff();
  const Eigen::MatrixXd G = I1 * I2;
  const Eigen::MatrixXd P = pairing_matrix(n);
  const Eigen::MatrixXd Lp = eigenspace(G, 1.0), Lm = eigenspace(G, -1.0);
  r.dim_plus = static_cast<int>(Lp.cols());
  r.dim_minus = static_cast<int>(Lm.cols());
  auto transversal = [&](const Eigen::MatrixXd& L) {
    if (L.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(L.bottomRows(n));
    return svd.singularValues().minCoeff();
  };
  auto gram = [&](const Eigen::MatrixXd& L, std::pair<int, int>& sig) {
    if (L.cols() == 0) return 0.0;
    const Eigen::MatrixXd m = L.transpose() * P * L;
    sig = signature(m, 1e-10);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues().minCoeff();
  };
  r.transversal_plus = transversal(Lp);
  r.transversal_minus = transversal(Lm);
  r.pairing_plus = gram(Lp, r.signature_plus);
  r.pairing_minus = gram(Lm, r.signature_minus);
  if (r.commutator > commute_tol) r.failed_clause = "commute";
  else if (r.dim_plus != n || r.dim_minus != n) r.failed_clause = "eigenspace dimension";
  else if (r.transversal_plus <= std::sin(1e-6) || r.transversal_minus <= std::sin(1e-6)) r.failed_clause = "transversal to T";
  else if (r.pairing_plus <= 1e-8 || r.pairing_minus <= 1e-8) r.failed_clause = "pairing rank";
  return r;
}

}  // namespace pbh
