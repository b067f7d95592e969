#include "pbh/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pbh/models.hpp"

namespace pbh {

namespace {

const std::complex<double> I(0.0, 1.0);

double max_abs(const std::vector<JMat>& ms) {
  double m = 0.0;
  for (const JMat& x : ms) m = std::max(m, x.max_abs());
  return m;
}

}  // namespace

Eigen::MatrixXcd ComplexBivector::value() const {
  return re.value().cast<std::complex<double>>() + I * im.value().cast<std::complex<double>>();
}

double Trivector::max_abs() const {
  double m = 0.0;
  for (const Jet& x : c_) m = std::max(m, std::abs(x.value()));
  return m;
}

Trivector Trivector::operator+(const Trivector& o) const {
  Trivector r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Trivector Trivector::operator-(const Trivector& o) const {
  Trivector r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Trivector Trivector::scaled(double s) const {
  Trivector r(*this);
  for (Jet& x : r.c_) x *= Jet(s);
  return r;
}

JMat q_endo(const JMat& Jp, const JMat& Jm) { return commutator(Jp, Jm); }

JMat omega_matrix(const JMat& g, const JMat& Jp, const JMat& Jm) { return q_endo(Jp, Jm).transpose() * g; }

ComplexBivector pi_bivector(const JMat& g, const JMat& Jp, const JMat& Jm) {
  const JMat gi = inverse(g);
  const JMat w = omega_matrix(g, Jp, Jm);
  return {gi * w * gi, gi * (w * Jp) * gi};
}

double type20_defect(const JMat& J, const ComplexBivector& pi) {
  // J(A + iB) - i(A + iB) = (JA + B) + i(JB - A)
  return std::max((J * pi.re + pi.im).max_abs(), (J * pi.im - pi.re).max_abs());
}

Eigen::MatrixXcd type20_projection(const Eigen::MatrixXd& J, const Eigen::MatrixXcd& pi) {
  const Eigen::MatrixXcd p =
      0.5 * (Eigen::MatrixXcd::Identity(J.rows(), J.cols()) - I * J.cast<std::complex<double>>());
  return p * pi * p.transpose();
}

double omega_11_defect(const JMat& g, const JMat& Jp, const JMat& Jm) {
  const JMat w = omega_matrix(g, Jp, Jm);
  return 0.5 * (w + Jp.transpose() * w * Jp).max_abs();
}

double q_correspondence_defect(const JMat& g, const JMat& Jp, const JMat& Jm, const ComplexBivector& pi) {
  const JMat low = g * pi.re * g;
  return (inverse(g) * low.transpose() - q_endo(Jp, Jm)).max_abs();
}

double hermitian_defect(const JMat& g, const JMat& Jp, const JMat& Jm) {
  return (d_pm_F(g, Jp) + d_pm_F(g, Jm)).max_abs();
}

JMat covariant_bivector(const Connection& D, int i, const JMat& P) {
  const JMat c = connection_slice(D, i);
  return P.derivative(i) + c * P + P * c.transpose();
}

double holomorphic_residual(const Connection& D, const JMat& J, const ComplexBivector& pi) {
  const int n = D.dim();
  std::vector<JMat> da, db;
  for (int i = 0; i < n; ++i) {
    da.push_back(covariant_bivector(D, i, pi.re));
    db.push_back(covariant_bivector(D, i, pi.im));
  }
  double worst = 0.0;
  for (int m = 0; m < n; ++m) {
    // D_m Pi + i sum_l J^l_m D_l Pi
    JMat re = da[m], im = db[m];
    for (int l = 0; l < n; ++l) {
      re -= db[l] * J(l, m);
      im += da[l] * J(l, m);
    }
    worst = std::max({worst, re.max_abs(), im.max_abs()});
  }
  return worst;
}

Trivector schouten(const JMat& P, const JMat& Q) {
  const int n = P.rows();
  std::vector<JMat> dP, dQ;
  for (int l = 0; l < n; ++l) {
    dP.push_back(P.derivative(l));
    dQ.push_back(Q.derivative(l));
  }
  auto term = [&](int i, int j, int k) {
    Jet s;
    for (int l = 0; l < n; ++l) s += P(l, i) * dQ[l](j, k) + Q(l, i) * dP[l](j, k);
    return s;
  };
  Trivector t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t(i, j, k) = term(i, j, k) + term(j, k, i) + term(k, i, j);
  return t;
}

std::pair<Trivector, Trivector> schouten(const ComplexBivector& pi) {
  return {schouten(pi.re, pi.re) - schouten(pi.im, pi.im), schouten(pi.re, pi.im).scaled(2.0)};
}

Trivector lower(const JMat& g, const Trivector& t) {
  const int n = t.dim();
  Trivector a(n), b(n), c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) a(i, j, k) += g(i, m) * t(m, j, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) b(i, j, k) += g(j, m) * a(i, m, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) c(i, j, k) += g(k, m) * b(i, j, m);
  return c;
}

Trivector cyclic_sum_route(const JMat& g, const JMat& Q) {
  const int n = g.rows();
  const Connection lc = levi_civita(g);
  // L[a](b, c) = g((nabla_{Q d_a} Q) d_b, d_c)
  std::vector<JMat> L;
  for (int a = 0; a < n; ++a) L.push_back((covariant_endo(lc, Q.col(a), Q)).transpose() * g);
  Trivector t(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t(a, b, c) = -2.0 * (L[a](b, c) + L[b](c, a) + L[c](a, b));
  return t;
}

DdcResidual ddc_commuting_fields(const CVec& U, const CVec& V, const CJet& phi) {
  const int n = static_cast<int>(U.size());
  for (int a = 0; a < n; ++a) {
    CJet s;
    for (int b = 0; b < n; ++b) s = s + U[b] * d_holo(V[a], b) - V[b] * d_holo(U[a], b);
    if (std::abs(s.value()) > 1e-9) throw std::invalid_argument("ddc_commuting_fields: [U, V] != 0");
  }
  CVec grad(n);
  for (int g = 0; g < n; ++g) grad[g] = d_holo(phi, g);
  CJet Uphi, Vphi;
  for (int g = 0; g < n; ++g) {
    Uphi = Uphi + U[g] * grad[g];
    Vphi = Vphi + V[g] * grad[g];
  }
  DdcResidual r;
  for (int b = 0; b < n; ++b) {
    // dd^c phi (W, d/dzbar_b) = i W^g phi_{g bbar}
    CJet fu, fv;
    for (int g = 0; g < n; ++g) {
      const CJet h = d_antiholo(grad[g], b);
      fu = fu + U[g] * h;
      fv = fv + V[g] * h;
    }
    for (int a = 0; a < n; ++a) {
      const std::complex<double> lhs = (I * (fu * V[a] - fv * U[a])).value();
      const std::complex<double> rhs = (I * d_antiholo(Uphi * V[a] - Vphi * U[a], b)).value();
      r.lhs_max = std::max(r.lhs_max, std::abs(lhs));
      r.residual = std::max(r.residual, std::abs(lhs - rhs));
    }
  }
  return r;
}

Theorem4Report theorem4_hypotheses(const FlagParams& p, const SamplePlan& plan) {
  validate(p);
  Theorem4Report r;
  const auto cp = sample_points(cp2_domain(0.1), plan);
  std::vector<RicciSample> rs(cp.size());
  parallel_for(static_cast<int>(cp.size()), [&](int i) { rs[i] = cp2_ricci(lift(cp[i], 4)); });
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
  for (const RicciSample& s : rs) {
    const double l = s.lambda();
    lo = std::min(lo, l);
    hi = std::max(hi, l);
    sum += l;
  }
  r.lambda_mean = sum / static_cast<double>(rs.size());
  r.lambda_spread = (hi - lo) / std::abs(r.lambda_mean);
  if (!(r.lambda_spread <= 1e-4))
    throw ModelError("dd^c ln|tau|^2 is not a constant multiple of omega: relative spread " +
                     std::to_string(r.lambda_spread));
  for (const RicciSample& s : rs)
    r.proportionality = std::max(r.proportionality, (s.ddc_f - 3.0 * r.lambda_mean * s.omega).norm());

  const auto fp = sample_points(flag_domain(0.1), plan);
  r.points = static_cast<int>(fp.size());
  std::vector<double> ci(fp.size()), cii(fp.size()), sv(fp.size());
  parallel_for(r.points, [&](int i) {
    const JVec x = lift(fp[i], 2);
    ci[i] = flag_condition_i(p, r.lambda_mean, x);
    cii[i] = flag_condition_ii(p, r.lambda_mean, x);
    sv[i] = flag_F0_min_singular(p, fp[i]);
  });
  r.condition_i = *std::max_element(ci.begin(), ci.end());
  r.condition_ii = *std::max_element(cii.begin(), cii.end());
  r.min_singular_F0 = *std::min_element(sv.begin(), sv.end());
  return r;
}

}  // namespace pbh
