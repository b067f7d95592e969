#pragma once

#include <string>

#include "pbh/gencomplex.hpp"
#include "pbh/models.hpp"

namespace pbh {

struct Example2Params {
  double a = 1.25, b = 0.75, c = 0.0;
  std::string hamiltonian = "sin2";
  double t = 0.0;
  double step = 1e-3;
};

// Throws std::invalid_argument unless a^2 - b^2 - c^2 = 1 (to 1e-12) and a >= 1 + 1e-6.
void validate(const Example2Params& p);

// J+ = J1, J- = aJ1 + bJ2 + cJ3 and everything derived from them at one jet point.
// Two-forms are stored as antisymmetric matrices M(i, j) = w(d_i, d_j).
struct Example2Point {
  JMat g, Jp, Jm, K, Sp, Sm;
  JMat Fp, Fm, FK, w1, w2, wp, wm;  // F+, F-, F^K, w', w'', w+ = w' + w'', w- = w' - w''
  ComplexForm beta1() const;        // F^K + i w+
  ComplexForm beta2() const;        // -F^K + i w-
};

Example2Point example2_at(const ModelDescriptor& m, const Example2Params& p, const JVec& x);

// Shipped Hamiltonians with closed-form gradients, so the flow can be evaluated at
// jet points that are not the identity lift.
struct Hamiltonian {
  std::string name;
  std::function<Jet(const JVec&)> f;
  std::function<JVec(const JVec&)> grad;
};
// `const`, `sin2` (sin x1 sin x2), `gauss` (exp(-|x - c|^2 / 2) around the box center).
Hamiltonian hamiltonian_by_name(const std::string& name, const ChartDomain& domain);
std::vector<std::string> hamiltonian_names();

// Hamiltonian vector field X with i_X F^K = df.
JVec hamiltonian_field(const JMat& FK, const JVec& df);

// Flow of the F^K-Hamiltonian field by fixed-step RK4 on the jet state. The returned jets
// carry the flow map's derivatives (variational equations) to the order of x.
struct FlowResult {
  JVec phi;
  JMat jacobian;  // order(x) - 1
};
FlowResult hamiltonian_flow(const ModelDescriptor& m, const Example2Params& p, const Hamiltonian& h, const JVec& x);

// Deformed forms gamma1 = F^K + i(w' + H_t^* w''), gamma2 = -F^K + i(w' - H_t^* w'') at x,
// plus the symplectic defect H_t^* F^K - F^K. Jet order drops by one.
struct DeformedPoint {
  Example2Point base;
  JMat pulled_w2, pulled_FK;
  ComplexForm gamma1, gamma2;
  double symplectic_defect = 0.0;
};
DeformedPoint deformed_at(const ModelDescriptor& m, const Example2Params& p, const JVec& x);

// Bihermitian data (g, b, J+, J-) recovered from the generalized complex pair built from
// gamma1 and gamma2. At t = 0 this is (-sqrt(a^2-1) g, a F^K, -J-, -J+).
BihermitianExtract deformed_bihermitian(const ModelDescriptor& m, const Example2Params& p, const JVec& x);

// Small-t precondition: throws DomainError unless t |X_f(x0)| <= 1/4 of the distance from x0
// to the boundary of the chart box.
void check_small_t(const ModelDescriptor& m, const Example2Params& p, const Eigen::VectorXd& x0);

}  // namespace pbh

namespace pbh {

// Algebraic identities of the E1 cap E2 description, evaluated on constant values.
// For real X: U = (X + iY)/2 with sqrt(a^2-1) Y = S+X - aS-X. Returns the larger of
// |sqrt(a^2-1)KU + iJ+U - iaJ-U| and |i_U(beta1 - beta2)|.
double membership_residual(const Example2Point& e, double a, const Eigen::VectorXd& X);
// <A + conj A, B + conj B> + Re{(beta1 - conj beta2)(U, conj V)} for A = U - i_U beta1, B = V - i_V beta1.
double metric_identity_residual(const Example2Point& e, double a, const Eigen::VectorXd& X, const Eigen::VectorXd& Z);

}  // namespace pbh
