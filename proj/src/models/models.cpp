#include "pbh/models.hpp"

#include <cmath>
#include <numbers>

namespace pbh {

Eigen::Matrix4d torus_metric() { return Eigen::Vector4d(1, 1, -1, -1).asDiagonal(); }

Eigen::Matrix4d torus_j1() {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(1, 0) = 1, m(0, 1) = -1, m(3, 2) = 1, m(2, 3) = -1;
  return m;
}

Eigen::Matrix4d torus_j2() {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(2, 0) = 1, m(0, 2) = 1, m(3, 1) = -1, m(1, 3) = -1;
  return m;
}

ChartDomain inner_domain(const ChartDomain& d, double margin) {
  ChartDomain r = d;
  r.lo = d.lo.array() + margin;
  r.hi = d.hi.array() - margin;
  return r;
}

namespace {

ChartDomain box(double lo, double hi) {
  ChartDomain d;
  d.dim = 4;
  d.lo = Eigen::VectorXd::Constant(4, lo);
  d.hi = Eigen::VectorXd::Constant(4, hi);
  return d;
}

LatticeMap shift(const std::string& name, int i, double s) {
  LatticeMap m{name, Eigen::MatrixXd::Identity(4, 4), Eigen::VectorXd::Zero(4)};
  m.shift(i) = s;
  return m;
}

// Largest defect of pullback invariance at p: phi^*T(p) - T(p) for g and the J's.
double lattice_defect(const ModelDescriptor& m, const Eigen::VectorXd& p) {
  double worst = 0.0;
  for (const auto& l : m.lattice) {
    const Eigen::VectorXd q = l(p);
    const JVec xp = lift(p, 0), xq = lift(q, 0);
    const Eigen::MatrixXd A = l.linear;
    const Eigen::MatrixXd Ai = A.inverse();
    const Eigen::MatrixXd gp = m.g(xp).value(), gq = m.g(xq).value();
    worst = std::max(worst, (A.transpose() * gq * A - gp).cwiseAbs().maxCoeff());
    for (const EndoField* J : {&m.J1, &m.J2, &m.J3}) {
      const Eigen::MatrixXd jp = (*J)(xp).value(), jq = (*J)(xq).value();
      worst = std::max(worst, (Ai * jq * A - jp).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace

PhkCertificate certify_phk(const ModelDescriptor& m, const SamplePlan& plan) {
  PhkCertificate c;
  for (const auto& p : sample_points(m.domain, plan)) {
    const JVec x = lift(p, 1);
    const JMat g = m.g(x), a = m.J1(x), b = m.J2(x), e = m.J3(x);
    c.paraquaternion = std::max(c.paraquaternion, paraquaternion_defect(a, b, e));
    c.compatibility = std::max({c.compatibility, compatibility_defect(g, a, 1.0).max_abs(),
                                compatibility_defect(g, b, -1.0).max_abs(), compatibility_defect(g, e, -1.0).max_abs()});
    for (const JMat* J : {&a, &b, &e}) c.closedness = std::max(c.closedness, d(fundamental_form(g, *J)).max_abs());
    c.lattice = std::max(c.lattice, lattice_defect(m, p));
    ++c.points;
  }
  return c;
}

ModelDescriptor torus_phk() {
  ModelDescriptor m;
  m.name = "torus";
  m.domain = box(0.0, 2 * std::numbers::pi);
  m.g = [](const JVec&) { return JMat::constant(torus_metric()); };
  m.J1 = [](const JVec&) { return JMat::constant(torus_j1()); };
  m.J2 = [](const JVec&) { return JMat::constant(torus_j2()); };
  m.J3 = [](const JVec&) { return JMat::constant(torus_j1() * torus_j2()); };
  for (int i = 0; i < 4; ++i) m.lattice.push_back(shift("x" + std::to_string(i + 1) + " + 2pi", i, 2 * std::numbers::pi));
  m.construction = "constant split-quaternion triple on the flat neutral torus";
  return m;
}

std::vector<std::pair<std::string, Eigen::Matrix4d>> kodaira_candidates() {
  std::vector<std::pair<std::string, Eigen::Matrix4d>> out;
  out.emplace_back("E = (d1, d2, d3, d4)", Eigen::Matrix4d::Identity());
  for (int s3 : {1, -1})
    for (int s4 : {1, -1}) {
      Eigen::Matrix4d e = Eigen::Matrix4d::Identity();
      e(0, 2) = 1;
      e(2, 2) = s3;
      e(1, 3) = 1;
      e(3, 3) = s4;
      const std::string sign3 = s3 > 0 ? "+" : "-", sign4 = s4 > 0 ? "+" : "-";
      out.emplace_back("E = (d1, d2, d1 " + sign3 + " d3, d2 " + sign4 + " d4)", e);
    }
  return out;
}

ModelDescriptor kodaira_with_frame(const std::string& label, const Eigen::Matrix4d& frame) {
  ModelDescriptor m;
  m.name = "kodaira";
  m.domain = box(0.0, 1.0);
  // Left-invariant frame: eps1 = d1, eps2 = d2 + x1 d4, eps3 = d3, eps4 = d4. The linear
  // isomorphism Phi sends the torus-basis vector E_a to eps_a: Phi = [eps] E^-1.
  const Eigen::Matrix4d Ei = frame.inverse();
  auto phi = [Ei](const JVec& x) {
    JMat eps = JMat::identity(4);
    eps(3, 1) = x[0];
    return eps * JMat::constant(Ei);
  };
  auto phi_inv = [frame](const JVec& x) {
    JMat epsi = JMat::identity(4);
    epsi(3, 1) = -x[0];
    return JMat::constant(frame) * epsi;
  };
  m.g = [phi_inv](const JVec& x) {
    const JMat pi = phi_inv(x);
    return pi.transpose() * JMat::constant(torus_metric()) * pi;
  };
  auto transport = [phi, phi_inv](Eigen::Matrix4d j) {
    return [phi, phi_inv, j](const JVec& x) { return phi(x) * JMat::constant(j) * phi_inv(x); };
  };
  m.J1 = transport(torus_j1());
  m.J2 = transport(torus_j2());
  m.J3 = transport(torus_j1() * torus_j2());
  LatticeMap a{"(x1 + 1, x2, x3, x4 + x2)", Eigen::MatrixXd::Identity(4, 4), Eigen::VectorXd::Zero(4)};
  a.shift(0) = 1.0;
  a.linear(3, 1) = 1.0;
  m.lattice.push_back(a);
  for (int i = 1; i < 4; ++i) m.lattice.push_back(shift("x" + std::to_string(i + 1) + " + 1", i, 1.0));
  m.construction = "torus triple transported by frame " + label + " onto the left-invariant frame";
  return m;
}

ModelDescriptor kodaira_phk(const SamplePlan& plan, double tol) {
  std::string tried;
  for (const auto& [label, frame] : kodaira_candidates()) {
    ModelDescriptor m = kodaira_with_frame(label, frame);
    if (certify_phk(m, plan).pass(tol)) return m;
    tried += (tried.empty() ? "" : "; ") + label;
  }
  throw ModelError("no candidate triple on the Kodaira nilmanifold certifies (tried " + tried + ")");
}

}  // namespace pbh
