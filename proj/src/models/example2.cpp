#include "pbh/example2.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace pbh {

void validate(const Example2Params& p) {
  if (std::abs(p.a * p.a - p.b * p.b - p.c * p.c - 1.0) > 1e-12)
    throw std::invalid_argument("pair parameters need a^2 - b^2 - c^2 = 1");
  if (!(p.a >= 1.0 + 1e-6)) throw std::invalid_argument("pair parameters need a > 1");
  if (!(p.step > 0.0)) throw std::invalid_argument("flow step must be positive");
}

ComplexForm Example2Point::beta1() const { return {Form::from_matrix(FK), Form::from_matrix(wp)}; }
ComplexForm Example2Point::beta2() const { return {Form::from_matrix(-FK), Form::from_matrix(wm)}; }

namespace {

struct PairK {
  JMat g, K;
};

PairK k_at(const ModelDescriptor& m, const Example2Params& p, const JVec& x) {
  const JMat J1 = m.J1(x), J2 = m.J2(x), J3 = m.J3(x);
  const JMat Jm = J1 * Jet(p.a) + J2 * Jet(p.b) + J3 * Jet(p.c);
  const double r = std::sqrt(p.a * p.a - 1.0);
  return {m.g(x), commutator(J1, Jm) * Jet(0.5 / r)};
}

}  // namespace

Example2Point example2_at(const ModelDescriptor& m, const Example2Params& p, const JVec& x) {
  Example2Point e;
  e.g = m.g(x);
  const JMat J1 = m.J1(x), J2 = m.J2(x), J3 = m.J3(x);
  e.Jp = J1;
  e.Jm = J1 * Jet(p.a) + J2 * Jet(p.b) + J3 * Jet(p.c);
  const Jet r(std::sqrt(p.a * p.a - 1.0));
  const Jet ri = inv(r);
  e.K = commutator(e.Jp, e.Jm) * (0.5 * ri);
  e.Sp = -(e.Jm - e.Jp * Jet(p.a)) * ri;
  e.Sm = (e.Jp - e.Jm * Jet(p.a)) * ri;
  e.Fp = fundamental_matrix(e.g, e.Jp);
  e.Fm = fundamental_matrix(e.g, e.Jm);
  e.FK = fundamental_matrix(e.g, e.K);
  e.w1 = fundamental_matrix(e.g, e.Sp);
  e.w2 = fundamental_matrix(e.g, e.Sm);
  e.wp = e.w1 + e.w2;
  e.wm = e.w1 - e.w2;
  return e;
}

std::vector<std::string> hamiltonian_names() { return {"const", "sin2", "gauss"}; }

Hamiltonian hamiltonian_by_name(const std::string& name, const ChartDomain& domain) {
  if (name == "const")
    return {name, [](const JVec&) { return Jet(1.0); }, [](const JVec& x) { return JVec(x.size()); }};
  if (name == "sin2")
    return {name, [](const JVec& x) { return sin(x[0]) * sin(x[1]); },
            [](const JVec& x) {
              JVec g(x.size());
              g[0] = cos(x[0]) * sin(x[1]);
              g[1] = sin(x[0]) * cos(x[1]);
              return g;
            }};
  if (name == "gauss") {
    const Eigen::VectorXd c = 0.5 * (domain.lo + domain.hi);
    auto f = [c](const JVec& x) {
      Jet r2;
      for (size_t i = 0; i < x.size(); ++i) r2 += square(x[i] - c(i));
      return exp(-0.5 * r2);
    };
    return {name, f, [c, f](const JVec& x) {
              const Jet v = f(x);
              JVec g(x.size());
              for (size_t i = 0; i < x.size(); ++i) g[i] = -(x[i] - c(i)) * v;
              return g;
            }};
  }
  throw std::invalid_argument("unknown Hamiltonian '" + name + "' (expected const, sin2 or gauss)");
}

JVec hamiltonian_field(const JMat& FK, const JVec& df) { return inverse(FK.transpose()) * df; }

FlowResult hamiltonian_flow(const ModelDescriptor& m, const Example2Params& p, const Hamiltonian& h, const JVec& x) {
  const int n = static_cast<int>(x.size());
  JVec y = x;
  const int steps = p.t == 0.0 ? 0 : std::max(1, static_cast<int>(std::lround(std::abs(p.t) / p.step)));
  const double dt = steps ? p.t / steps : 0.0;
  auto field = [&](const JVec& z) {
    const PairK pk = k_at(m, p, z);
    return hamiltonian_field(fundamental_matrix(pk.g, pk.K), h.grad(z));
  };
  for (int s = 0; s < steps; ++s) {
    const JVec k1 = field(y);
    const JVec k2 = field(y + Jet(0.5 * dt) * k1);
    const JVec k3 = field(y + Jet(0.5 * dt) * k2);
    const JVec k4 = field(y + Jet(dt) * k3);
    y = y + Jet(dt / 6.0) * (k1 + Jet(2.0) * k2 + Jet(2.0) * k3 + k4);
    if (!m.domain.in_box(value(y))) {
      std::ostringstream os;
      os << "Hamiltonian flow left the chart box at step " << s + 1;
      throw DomainError(os.str());
    }
  }
  FlowResult r;
  r.phi = y;
  r.jacobian = JMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.jacobian(i, j) = y[i].derivative(j);
  return r;
}

DeformedPoint deformed_at(const ModelDescriptor& m, const Example2Params& p, const JVec& x) {
  DeformedPoint dp;
  dp.base = example2_at(m, p, x);
  const Hamiltonian h = hamiltonian_by_name(p.hamiltonian, m.domain);
  const FlowResult fl = hamiltonian_flow(m, p, h, x);
  const Example2Point at_phi = example2_at(m, p, fl.phi);
  const JMat& D = fl.jacobian;
  dp.pulled_w2 = D.transpose() * at_phi.w2 * D;
  dp.pulled_FK = D.transpose() * at_phi.FK * D;
  dp.symplectic_defect = (dp.pulled_FK - dp.base.FK).max_abs();
  dp.gamma1 = {Form::from_matrix(dp.base.FK), Form::from_matrix(dp.base.w1 + dp.pulled_w2)};
  dp.gamma2 = {Form::from_matrix(-dp.base.FK), Form::from_matrix(dp.base.w1 - dp.pulled_w2)};
  return dp;
}

BihermitianExtract deformed_bihermitian(const ModelDescriptor& m, const Example2Params& p, const JVec& x) {
  const DeformedPoint dp = deformed_at(m, p, x);
  return extract_bihermitian(gcs_from_form(dp.gamma1), gcs_from_form(dp.gamma2));
}

void check_small_t(const ModelDescriptor& m, const Example2Params& p, const Eigen::VectorXd& x0) {
  const Hamiltonian h = hamiltonian_by_name(p.hamiltonian, m.domain);
  const JVec x = lift(x0, 0);
  const Example2Point e = example2_at(m, p, x);
  const double speed = value(hamiltonian_field(e.FK, h.grad(x))).norm();
  const double dist = std::min((x0 - m.domain.lo).minCoeff(), (m.domain.hi - x0).minCoeff());
  if (std::abs(p.t) * speed > 0.25 * dist) {
    std::ostringstream os;
    os << "t |X_f| = " << std::abs(p.t) * speed << " exceeds a quarter of the box margin " << dist;
    throw DomainError(os.str());
  }
}

}  // namespace pbh

namespace pbh {

namespace {

Eigen::VectorXcd member_vector(const Example2Point& e, double a, const Eigen::VectorXd& X) {
  const double r = std::sqrt(a * a - 1.0);
  const Eigen::VectorXd Y = (e.Sp.value() * X - a * e.Sm.value() * X) / r;
  return 0.5 * (X.cast<std::complex<double>>() + std::complex<double>(0, 1) * Y.cast<std::complex<double>>());
}

Eigen::MatrixXcd cmat(const Eigen::MatrixXd& re, const Eigen::MatrixXd& im) {
  return re.cast<std::complex<double>>() + std::complex<double>(0, 1) * im.cast<std::complex<double>>();
}

}  // namespace

double membership_residual(const Example2Point& e, double a, const Eigen::VectorXd& X) {
  const std::complex<double> i(0, 1);
  const Eigen::VectorXcd U = member_vector(e, a, X);
  const double r = std::sqrt(a * a - 1.0);
  const Eigen::MatrixXcd K = e.K.value().cast<std::complex<double>>();
  const Eigen::MatrixXcd Jp = e.Jp.value().cast<std::complex<double>>();
  const Eigen::MatrixXcd Jm = e.Jm.value().cast<std::complex<double>>();
  const double eq = (r * K * U + i * Jp * U - i * a * Jm * U).cwiseAbs().maxCoeff();
  // i_U beta has components (i_U beta)_j = U^i beta_ij.
  const Eigen::MatrixXcd diff = cmat(2.0 * e.FK.value(), (e.wp - e.wm).value());
  const double contraction = (diff.transpose() * U).cwiseAbs().maxCoeff();
  return std::max(eq, contraction);
}

double metric_identity_residual(const Example2Point& e, double a, const Eigen::VectorXd& X, const Eigen::VectorXd& Z) {
  const Eigen::VectorXcd U = member_vector(e, a, X), V = member_vector(e, a, Z);
  const Eigen::MatrixXcd b1 = cmat(e.FK.value(), e.wp.value());
  const Eigen::MatrixXcd b2 = cmat(-e.FK.value(), e.wm.value());
  // A + conj A = 2 Re U - 2 Re(i_U beta1) as a real section.
  const Eigen::VectorXd av = 2.0 * U.real(), bv = 2.0 * V.real();
  const Eigen::VectorXd axi = -2.0 * (b1.transpose() * U).real(), bxi = -2.0 * (b1.transpose() * V).real();
  const double lhs = 0.5 * (axi.dot(bv) + bxi.dot(av));
  const std::complex<double> rhs = U.transpose() * (b1 - b2.conjugate()) * V.conjugate();
  return std::abs(lhs + rhs.real());
}

}  // namespace pbh
