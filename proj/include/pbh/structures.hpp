#pragma once

#include <utility>
#include <vector>

#include "pbh/fields.hpp"

namespace pbh {

class BranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Field-level bundles. All value-level functions below take matrices already
// evaluated at a jet point; each derivative they take consumes one jet order.
struct HermitianPair {
  MetricField g;
  EndoField J;
};

struct ParaHyperTriple {
  MetricField g;
  EndoField J1, J2, J3;  // J1^2 = -Id, J2^2 = J3^2 = Id, J1 J2 = J3
};

// (positive, negative) eigenvalue counts of a symmetric matrix.
std::pair<int, int> signature(const Eigen::MatrixXd& g, double tol = 1e-12);

// F(X, Y) = g(JX, Y), i.e. F_ij = (J^T g)_ij.
JMat fundamental_matrix(const JMat& g, const JMat& J);
Form fundamental_form(const JMat& g, const JMat& J);

// g(AX, AY) - s g(X, Y) as a matrix; s = 1 for compatible, s = -1 for anti-compatible.
JMat compatibility_defect(const JMat& g, const JMat& A, double s);

// Largest entry over the nine products of the split-quaternion table
// J1^2 = -1, J2^2 = J3^2 = 1, J1J2 = -J2J1 = J3, J2J3 = -J3J2 = -J1, J3J1 = -J1J3 = J2.
double paraquaternion_defect(const JMat& j1, const JMat& j2, const JMat& j3);

// N(d_i, d_j) for i < j in lexicographic order; requires order >= 1.
std::vector<JVec> nijenhuis(const JMat& J);
double nijenhuis_residual(const JMat& J);

// Unique theta with theta ^ F = dF in dimension 4 (exact 4x4 solve).
struct LeeSolution {
  Form theta;
  double condition = 0.0;  // 2-norm condition number of theta -> theta ^ F at the base point
};
LeeSolution solve_lee(const Form& F, const Form& dF);
LeeSolution lee_form(const JMat& g, const JMat& J);

// Connection coefficients C[k](i, j) = C^k_ij, so (D_X Y)^k = X(Y^k) + C^k_ij X^i Y^j.
struct Connection {
  std::vector<JMat> c;
  int dim() const { return static_cast<int>(c.size()); }
};

Connection levi_civita(const JMat& g);
// g(D_X Y, Z) = g(nabla_X Y, Z) - 1/2 dF(JX, Y, Z).
Connection chern_connection(const JMat& g, const JMat& J);

JVec covariant(const Connection& D, const JVec& X, const JVec& Y);
// C_i(k, l) = C^k_il, so D_i Y = d_i Y + C_i Y.
JMat connection_slice(const Connection& D, int i);
// (D_i A)^k_j.
JMat covariant_endo(const Connection& D, int i, const JMat& A);
JMat covariant_endo(const Connection& D, const JVec& X, const JMat& A);
// (D_i g)_jk.
JMat covariant_metric(const Connection& D, int i, const JMat& g);
// Torsion C^k_ij - C^k_ji, largest entry.
double torsion(const Connection& D);

// d^J F (X, Y, Z) = -dF(JX, JY, JZ).
Form d_pm_F(const JMat& g, const JMat& J);
Form d_pm_F(const JMat& J, const Form& dF);

// The almost para-hypercomplex structure {J+, K, S} determined by a pair with |p| > 1:
// p = tr(J+ J-)/4, K = [J+, J-]/(2 sqrt(p^2-1)), S = -(J- + p J+)/sqrt(p^2-1).
struct ParaHypercomplex {
  JMat Jp, Jm, K, S;
  Jet p, root;  // root = sqrt(p^2 - 1)
};
ParaHypercomplex build_parahypercomplex(const JMat& Jp, const JMat& Jm, double margin = 0.05);

// p from J+J- + J-J+ = 2p Id; the anticommutator defect is returned separately.
Jet anticommutator_scalar(const JMat& Jp, const JMat& Jm);
double anticommutator_defect(const JMat& Jp, const JMat& Jm);

// 2 d(g(J+, J-)) + (theta+ - theta-) o [J+, J-] with g(J+, J-) = -2p.
JVec p_gradient_residual(const JMat& g, const JMat& Jp, const JMat& Jm);

// Right side of the Hermitian formula
// g((nabla_X J)Y, Z) = 1/2 (dF(JX, Y, JZ) + dF(JX, JY, Z)), as the tensor T[x](y, z).
std::vector<JMat> nabla_J_from_dF(const JMat& J, const Form& dF);
// Left side g((nabla_x J) d_y, d_z).
std::vector<JMat> nabla_J_lowered(const Connection& lc, const JMat& g, const JMat& J);
// Lee-form version, theta with dF = theta ^ F:
// 2 g((nabla_X J)Y, Z) = g(X,Z)theta(JY) - g(JX,Z)theta(Y) - g(X,Y)theta(JZ) + g(JX,Y)theta(Z).
std::vector<JMat> nabla_J_from_lee(const JMat& g, const JMat& J, const JVec& theta);

// Pseudo-orthonormal basis of a constant nondegenerate metric (columns), positive vectors first.
Eigen::MatrixXd pseudo_orthonormal_frame(const Eigen::MatrixXd& g);

}  // namespace pbh
