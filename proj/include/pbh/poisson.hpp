#pragma once

#include "pbh/cjet.hpp"
#include "pbh/flag.hpp"
#include "pbh/structures.hpp"

namespace pbh {

// Complex bivector with components P^ij = re(i, j) + i im(i, j).
struct ComplexBivector {
  JMat re, im;
  Eigen::MatrixXcd value() const;
};

// Totally antisymmetric 3-vector (or 3-form after lowering) with all n^3 components stored.
class Trivector {
 public:
  explicit Trivector(int n = 0) : n_(n), c_(n * n * n) {}
  int dim() const { return n_; }
  Jet& operator()(int i, int j, int k) { return c_[(i * n_ + j) * n_ + k]; }
  const Jet& operator()(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }
  double max_abs() const;
  Trivector operator+(const Trivector& o) const;
  Trivector operator-(const Trivector& o) const;
  Trivector scaled(double s) const;

 private:
  int n_;
  std::vector<Jet> c_;
};

// Q = [J+, J-].
JMat q_endo(const JMat& Jp, const JMat& Jm);

// Omega(X, Y) = g(QX, Y) and Pi with g-lowered form Omega + i Omega(., J+ .).
JMat omega_matrix(const JMat& g, const JMat& Jp, const JMat& Jm);
ComplexBivector pi_bivector(const JMat& g, const JMat& Jp, const JMat& Jm);

// |J Pi - i Pi|, zero iff Pi is of type (2,0) for J.
double type20_defect(const JMat& J, const ComplexBivector& pi);
// (1 - iJ)/2 Pi (1 - iJ)^T / 2.
Eigen::MatrixXcd type20_projection(const Eigen::MatrixXd& J, const Eigen::MatrixXcd& pi);
// |Omega + J+^T Omega J+| / 2, the (1,1)-part of Omega.
double omega_11_defect(const JMat& g, const JMat& Jp, const JMat& Jm);
// |g^-1 (g Re Pi g)^T - Q|.
double q_correspondence_defect(const JMat& g, const JMat& Jp, const JMat& Jm, const ComplexBivector& pi);
// |d+F+ + d-F-|.
double hermitian_defect(const JMat& g, const JMat& Jp, const JMat& Jm);

// (D_i P)^jk for a contravariant 2-tensor.
JMat covariant_bivector(const Connection& D, int i, const JMat& P);
// Largest entry of D_{d_m + i J d_m} Pi over coordinate directions m.
double holomorphic_residual(const Connection& D, const JMat& J, const ComplexBivector& pi);

// Coordinate Schouten-Nijenhuis bracket of two bivectors:
// [P, Q]^ijk = cyclic sum over ijk of P^li d_l Q^jk + Q^li d_l P^jk.
Trivector schouten(const JMat& P, const JMat& Q);
// [Pi, Pi] = [A, A] - [B, B] + 2i [A, B] for Pi = A + iB.
std::pair<Trivector, Trivector> schouten(const ComplexBivector& pi);
// T_abc = g_ai g_bj g_ck T^ijk.
Trivector lower(const JMat& g, const Trivector& t);
// -2 times the cyclic sum of g((nabla_{Q d_a} Q) d_b, d_c), equal to the lowered [R, R]
// for the bivector R = g^-1 Q^T of a g-skew endomorphism Q.
Trivector cyclic_sum_route(const JMat& g, const JMat& Q);

// For holomorphic U, V on a complex chart: largest modulus of
// (U ^ V) o dd^c phi - i dbar((U phi) V - (V phi) U), with (U ^ V) o F = F(U, .) V - F(V, .) U.
// Throws std::invalid_argument when |[U, V]| > 1e-9.
struct DdcResidual {
  double residual = 0.0;
  double lhs_max = 0.0;  // largest modulus of the left side
};
DdcResidual ddc_commuting_fields(const CVec& U, const CVec& V, const CJet& phi);

// Hypotheses of the deformation theorem on the flag model: lambda fitted on CP^2 points,
// then sigma o F0 = dbar X^{1,0} and [Re X^{1,0}, Im sigma] = 0 on flag points.
struct Theorem4Report {
  double lambda_mean = 0.0, lambda_spread = 0.0;  // spread = (max - min) / |mean|
  double proportionality = 0.0;                   // |dd^c f - 3 lambda omega|
  double condition_i = 0.0, condition_ii = 0.0;
  double min_singular_F0 = 0.0;
  int points = 0;
};
Theorem4Report theorem4_hypotheses(const FlagParams& p, const SamplePlan& plan);

}  // namespace pbh
