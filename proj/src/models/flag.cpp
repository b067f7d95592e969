#include "pbh/flag.hpp"

#include <cmath>
#include <stdexcept>

namespace pbh {

namespace {

const std::complex<double> I(0.0, 1.0);

// Linear coefficients k_a of a diagonal holomorphic field sum_a k_a zeta_a d/dzeta_a.
std::array<double, 2> x_coeffs(Cp2Chart c) {
  switch (c) {
    case Cp2Chart::z: return {-2.0, -1.0};
    case Cp2Chart::u: return {2.0, 1.0};
    case Cp2Chart::v: return {1.0, -1.0};
  }
  return {};
}

std::array<double, 2> y_coeffs(Cp2Chart c) {
  switch (c) {
    case Cp2Chart::z: return {0.0, -1.0};
    case Cp2Chart::u: return {0.0, -1.0};
    case Cp2Chart::v: return {1.0, 1.0};
  }
  return {};
}

CVec diag_field(const std::array<double, 2>& k, const CVec& zeta) {
  return {Jet(k[0]) * zeta[0], Jet(k[1]) * zeta[1]};
}

// Chart formula sum k_a + sum k_a zeta_a dlnG/dzeta_a with lnG = -3 ln(1 + |zeta|^2):
// dlnG/dzeta_a = -3 conj(zeta_a) / (1 + |zeta|^2), so the value is real.
Jet closed_form(const std::array<double, 2>& k, const CVec& zeta) {
  const Jet s = 1.0 + zeta[0].norm2() + zeta[1].norm2();
  return (k[0] + k[1]) - 3.0 * (k[0] * zeta[0].norm2() + k[1] * zeta[1].norm2()) / s;
}

CJet apply_holo(const CVec& field, const Jet& f) {
  CJet r;
  const CJet F(f);
  for (size_t a = 0; a < field.size(); ++a) r = r + field[a] * d_holo(F, static_cast<int>(a));
  return r;
}

Eigen::Vector3cd homogeneous(Cp2Chart c, const Eigen::VectorXd& p) {
  const std::complex<double> a(p(0), p(1)), b(p(2), p(3));
  switch (c) {
    case Cp2Chart::z: return {1.0, a, b};
    case Cp2Chart::u: return {a, 1.0, b};
    case Cp2Chart::v: return {a, b, 1.0};
  }
  return {};
}

}  // namespace

const char* chart_name(Cp2Chart c) {
  switch (c) {
    case Cp2Chart::z: return "z";
    case Cp2Chart::u: return "u";
    case Cp2Chart::v: return "v";
  }
  return "?";
}

Jet fs_potential(const CVec& zeta) { return log(1.0 + zeta[0].norm2() + zeta[1].norm2()); }

Jet fs_det_closed(const CVec& zeta) { return pow(1.0 + zeta[0].norm2() + zeta[1].norm2(), -3.0); }

Jet fs_det_jet(const JVec& x) {
  const CJet K(fs_potential(complex_coords(x)));
  CJet h[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) h[a][b] = d_antiholo(d_holo(K, a), b);
  return (h[0][0] * h[1][1] - h[0][1] * h[1][0]).re;
}

CVec cp2_X(Cp2Chart c, const CVec& zeta) { return diag_field(x_coeffs(c), zeta); }
CVec cp2_Y(Cp2Chart c, const CVec& zeta) { return diag_field(y_coeffs(c), zeta); }

Jet cp2_f(const JVec& x, bool jet_det) {
  const CVec z = complex_coords(x);
  const Jet G = jet_det ? fs_det_jet(x) : fs_det_closed(z);
  return log(4.0 * z[0].norm2() * z[1].norm2() * G);
}

CJet cp2_Xf_closed(Cp2Chart c, const JVec& x) { return closed_form(x_coeffs(c), complex_coords(x)); }
CJet cp2_Yf_closed(Cp2Chart c, const JVec& x) { return closed_form(y_coeffs(c), complex_coords(x)); }
CJet cp2_Xf_direct(Cp2Chart c, const JVec& x) { return apply_holo(cp2_X(c, complex_coords(x)), cp2_f(x, true)); }
CJet cp2_Yf_direct(Cp2Chart c, const JVec& x) { return apply_holo(cp2_Y(c, complex_coords(x)), cp2_f(x, true)); }

Eigen::VectorXd cp2_transition(Cp2Chart from, Cp2Chart to, const Eigen::VectorXd& p) {
  const Eigen::Vector3cd h = homogeneous(from, p);
  std::complex<double> a, b;
  switch (to) {
    case Cp2Chart::z: a = h(1) / h(0), b = h(2) / h(0); break;
    case Cp2Chart::u: a = h(0) / h(1), b = h(2) / h(1); break;
    case Cp2Chart::v: a = h(0) / h(2), b = h(1) / h(2); break;
  }
  Eigen::VectorXd q(4);
  q << a.real(), a.imag(), b.real(), b.imag();
  return q;
}

ChartDomain cp2_domain(double margin) {
  ChartDomain d;
  d.dim = 4;
  d.lo = Eigen::VectorXd::Constant(4, -2.0);
  d.hi = Eigen::VectorXd::Constant(4, 2.0);
  for (int a = 0; a < 2; ++a)
    d.excluded.push_back({"zeta" + std::to_string(a + 1) + " = 0",
                          [a](const Eigen::VectorXd& p) { return std::hypot(p(2 * a), p(2 * a + 1)); }, margin});
  return d;
}

RicciSample cp2_ricci(const JVec& x) {
  const CJet f(cp2_f(x, true));
  const CJet K(fs_potential(complex_coords(x)));
  RicciSample r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      r.ddc_f(a, b) = I * d_antiholo(d_holo(f, a), b).value();
      r.omega(a, b) = I * d_antiholo(d_holo(K, a), b).value();
    }
  return r;
}

void validate(const FlagParams& p) {
  if (!(p.a * p.b < 0)) throw std::invalid_argument("flag parameters need ab < 0");
  if (p.a + p.b == 0) throw std::invalid_argument("flag parameters need a + b != 0");
}

ChartDomain flag_domain(double margin) {
  ChartDomain d;
  d.dim = 6;
  d.lo = Eigen::VectorXd::Constant(6, -1.5);
  d.hi = Eigen::VectorXd::Constant(6, 1.5);
  auto modulus = [](int a) {
    return [a](const Eigen::VectorXd& p) { return std::hypot(p(2 * a), p(2 * a + 1)); };
  };
  d.excluded.push_back({"x1 = 0", modulus(0), margin});
  d.excluded.push_back({"x2 = 0", modulus(1), margin});
  d.excluded.push_back({"y1 = 0", modulus(2), margin});
  d.excluded.push_back({"y0 = 0",
                        [](const Eigen::VectorXd& p) {
                          const std::complex<double> z1(p(0), p(1)), z2(p(2), p(3)), w(p(4), p(5));
                          return std::abs(-z1 * w - z2);
                        },
                        margin});
  return d;
}

CVec flag_y(const CVec& c) { return {-(c[0] * c[2]) - c[1], c[2]}; }
CVec flag_Z1(const CVec& c) { return {Jet(-2.0) * c[0], -c[1], c[2]}; }
CVec flag_Z2(const CVec& c) { return {CJet(), -c[1], -c[2]}; }

HermitianJets flag_F0(const FlagParams& p, const JVec& x) {
  const CVec c = complex_coords(x);
  const CJet phi(p.a * fs_potential({c[0], c[1]}) + p.b * fs_potential(flag_y(c)));
  HermitianJets h;
  h.h.resize(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) h.h[3 * a + b] = d_antiholo(d_holo(phi, a), b);
  return h;
}

double flag_F0_min_singular(const FlagParams& p, const Eigen::VectorXd& pt) {
  const HermitianJets h = flag_F0(p, lift(pt, 2));
  Eigen::Matrix3cd m;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m(a, b) = h(a, b).value();
  return Eigen::JacobiSVD<Eigen::Matrix3cd>(m).singularValues().minCoeff();
}

CVec flag_X10(const FlagParams& p, double lambda, const JVec& x) {
  const CVec c = complex_coords(x);
  const CVec zeta{c[0], c[1]}, v = flag_y(c);
  const Jet cx = p.a * closed_form(x_coeffs(Cp2Chart::z), zeta) - p.b * closed_form(x_coeffs(Cp2Chart::v), v);
  const Jet cy = p.a * closed_form(y_coeffs(Cp2Chart::z), zeta) - p.b * closed_form(y_coeffs(Cp2Chart::v), v);
  const CVec z1 = flag_Z1(c), z2 = flag_Z2(c);
  const std::complex<double> k = I / (3.0 * lambda);
  CVec out(3);
  for (int a = 0; a < 3; ++a) out[a] = k * (cx * z2[a] - cy * z1[a]);
  return out;
}

double flag_condition_i(const FlagParams& p, double lambda, const JVec& x) {
  const CVec c = complex_coords(x);
  const HermitianJets h = flag_F0(p, x);
  const CVec z1 = flag_Z1(c), z2 = flag_Z2(c);
  const CVec X = flag_X10(p, lambda, x);
  double worst = 0.0;
  for (int b = 0; b < 3; ++b) {
    // F0(Z, d/dzbar_b) = i Z^g h_gb
    CJet f1, f2;
    for (int g = 0; g < 3; ++g) {
      f1 = f1 + z1[g] * h(g, b);
      f2 = f2 + z2[g] * h(g, b);
    }
    f1 = I * f1;
    f2 = I * f2;
    for (int a = 0; a < 3; ++a) {
      const CJet lhs = f1 * z2[a] - f2 * z1[a];
      const CJet rhs = d_antiholo(X[a], b);
      worst = std::max(worst, std::abs((lhs - rhs).value()));
    }
  }
  return worst;
}

double flag_condition_ii(const FlagParams& p, double lambda, const JVec& x) {
  const CVec c = complex_coords(x);
  const JVec v = real_part_field(flag_X10(p, lambda, x));
  const CBivector s = wedge_holo(flag_Z1(c), flag_Z2(c));
  return lie_derivative(v, s.im).max_abs();
}

}  // namespace pbh
