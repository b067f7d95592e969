#pragma once

#include <string>

#include "pbh/cjet.hpp"
#include "pbh/fields.hpp"

namespace pbh {

// Affine charts of CP^2: z = (x1/x0, x2/x0), u = (x0/x1, x2/x1), v = (x0/x2, x1/x2).
enum class Cp2Chart { z, u, v };
const char* chart_name(Cp2Chart c);

// Fubini-Study potential K = ln(1 + |zeta|^2) and G = det(d_a dbar_b K) = (1 + |zeta|^2)^-3.
Jet fs_potential(const CVec& zeta);
Jet fs_det_closed(const CVec& zeta);
// G computed from jets of K (consumes two orders).
Jet fs_det_jet(const JVec& x);

// Holomorphic fields of the torus action x -> (e^t x0, e^-t x1, x2) (X) and
// x -> (x0, x1, e^-t x2) (Y) in the given chart.
CVec cp2_X(Cp2Chart c, const CVec& zeta);
CVec cp2_Y(Cp2Chart c, const CVec& zeta);

// f = ln ||tau||^2 = ln(4 |zeta1 zeta2|^2 G) for tau = X ^ Y.
Jet cp2_f(const JVec& x, bool jet_det);
// Xf and Yf from the chart formulas (constant plus zeta_a dlnG/dzeta_a terms) with closed-form G.
CJet cp2_Xf_closed(Cp2Chart c, const JVec& x);
CJet cp2_Yf_closed(Cp2Chart c, const JVec& x);
// Xf and Yf by applying the holomorphic field to f with jet-computed G.
CJet cp2_Xf_direct(Cp2Chart c, const JVec& x);
CJet cp2_Yf_direct(Cp2Chart c, const JVec& x);

// Chart transition of a point given in chart `from`.
Eigen::VectorXd cp2_transition(Cp2Chart from, Cp2Chart to, const Eigen::VectorXd& p);

ChartDomain cp2_domain(double margin = 0.05);

// Coefficient matrices of dd^c f and omega (dd^c = i d dbar, omega = i d dbar K) at a point,
// with f built from the jet determinant; dd^c f = 3 lambda omega fixes lambda.
struct RicciSample {
  Eigen::Matrix2cd ddc_f, omega;
  double lambda() const { return (ddc_f.trace() / omega.trace()).real() / 3.0; }
};
RicciSample cp2_ricci(const JVec& x);

struct FlagParams {
  int a = 1, b = -2;
};
void validate(const FlagParams& p);

// Flag manifold {x0y0 + x1y1 + x2y2 = 0} in the chart (z1, z2, w):
// x = [1 : z1 : z2], y = [-z1 w - z2 : w : 1]. Real coordinates interleaved (6 reals).
ChartDomain flag_domain(double margin = 0.05);
CVec flag_y(const CVec& c);  // (v1, v2) = (-z1 w - z2, w), the v-chart of the second factor
CVec flag_Z1(const CVec& c);
CVec flag_Z2(const CVec& c);

// Hermitian matrix h_ab = d_a dbar_b (a K(x-part) + b K(y-part)); F0 = i h_ab dz^a ^ dzbar^b.
struct HermitianJets {
  std::vector<CJet> h;  // row-major 3 x 3
  const CJet& operator()(int i, int j) const { return h[3 * i + j]; }
};
HermitianJets flag_F0(const FlagParams& p, const JVec& x);
double flag_F0_min_singular(const FlagParams& p, const Eigen::VectorXd& pt);

// X^{1,0} = i/(3 lambda) {[a Xf(p1) - b Xf(p2)] Z2 - [a Yf(p1) - b Yf(p2)] Z1}.
CVec flag_X10(const FlagParams& p, double lambda, const JVec& x);

// Largest modulus of (Z1 ^ Z2) o F0 - dbar X^{1,0} over all components.
double flag_condition_i(const FlagParams& p, double lambda, const JVec& x);
// Largest entry of L_{Re X^{1,0}} (Im Z1 ^ Z2).
double flag_condition_ii(const FlagParams& p, double lambda, const JVec& x);

}  // namespace pbh
