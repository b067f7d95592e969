#pragma once

#include <string>

#include "pbh/structures.hpp"

namespace pbh {

// N+- = J+ + (p +- sqrt(p^2 - 1)) J-, with p from J+J- + J-J+ = 2p Id.
struct NEndos {
  JMat Np, Nm, K;
  Jet p, root;
};
NEndos n_endos(const JMat& Jp, const JMat& Jm, double margin = 0.05);

struct NEndosReport {
  double square = 0.0;           // |N+-^2|, both are nilpotent
  double kernel_image = 0.0;     // subspace distance Ker N+- to Im N+-
  double kernel_eigen = 0.0;     // subspace distance Ker N+- to the -+1 eigenspace of K
  double eigen_annihilated = 0.0;  // |N+ v| over unit v with Kv = -v
  int rank_plus = 0, rank_minus = 0;
  int rank_kernels = 0;          // dim(Ker N+ + Ker N-)
};
NEndosReport check_n_endos(const NEndos& n);

// sin of the largest principal angle between column spans.
double subspace_distance(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);
// Orthonormal basis of the numerical kernel / image (relative threshold 1e-8).
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& A);
Eigen::MatrixXd image_basis(const Eigen::MatrixXd& A);

// X = (J+ + f J-) theta, Y = (1 + K) theta with theta the g-dual of theta+, f = p - sqrt(p^2 - 1).
struct LeeFields {
  JMat g, Jp, Jm, K, N;
  JVec theta_p, theta_m;  // covectors
  JVec theta;             // vector dual to theta+
  Jet p, root, f, norm2;  // norm2 = g(theta, theta)
  JVec X, Y;
  double balance = 0.0;   // |theta+ + theta-|
  bool definitive = false;
};
// Lee forms computed from the data (consumes one order).
LeeFields lee_fields(const JMat& g, const JMat& Jp, const JMat& Jm, double null_tol = 1e-10);
// Prescribed Lee form theta+ = -theta- (algebraic mode).
LeeFields lee_fields_with(const JMat& g, const JMat& Jp, const JMat& Jm, const JVec& theta_p,
                          double null_tol = 1e-10);

// Pointwise algebraic identities of the null frame; each entry is an absolute residual.
struct BasisResiduals {
  double null_xy = 0.0;      // g(X,X), g(Y,Y), g(X,Y), g(X,J+X), g(Y,J+Y)
  double jx_y = 0.0;         // g(J+X, Y) - 2(fp - 1)|theta|^2
  double f_square = 0.0;     // (f^2 - 1) - 2(fp - 1)
  double theta_pp = 0.0;     // g(theta, J+J- theta) - p|theta|^2
  double y_closed = 0.0;     // Y - (-f theta + J+J- theta)/sqrt(p^2 - 1)
  double kernel = 0.0;       // |N X|, |N Y|
  double anticommutator = 0.0;  // N J+ + J+ N - 2(pf - 1) Id
  double frame_sigma = 0.0;  // smallest singular value of (X, Y, J+X, J+Y)
};
BasisResiduals basis_identities(const LeeFields& L);

// Identities involving derivatives; LeeFields must carry order >= 1 in X and Y.
struct DerivativeResiduals {
  double dp_k = 0.0;           // dp - sqrt(p^2 - 1) theta+ o K
  double x_f = 0.0;            // X(f)
  double y_f = 0.0;            // Y(f) + f|theta|^2
  double nxy_parallel = 0.0;   // part of N[X,Y] off the Y direction
  double nxy_coeff = 0.0;      // Y-coefficient of N[X,Y] minus f sqrt(p^2-1)|theta|^2
  double nabla_n_yy = 0.0;     // (nabla_Y N) Y
  double nabla_n_jyy = 0.0;    // 2(nabla_{J+Y} N) Y - 2pf|theta|^2 Y
  double nabla_n_formula = 0.0;  // jet nabla N against the Lee-form expression, all coordinate pairs
};
DerivativeResiduals derivative_identities(const LeeFields& L);

enum class TowerVerdict { engel, integrable, other };
const char* to_string(TowerVerdict v);

struct RankTowerReport {
  int r1 = 0, r2 = 0, r3 = 0;  // ranks of D, D + [D,D], D + [D,D] + [D,[D,D]]
  TowerVerdict verdict = TowerVerdict::other;
};
// Generators as jets of order >= 2 at one point. Throws DegeneracyError on rank-deficient generators.
RankTowerReport rank_tower(const std::vector<JVec>& gens);
std::vector<RankTowerReport> rank_tower(const std::vector<VectorField>& gens, const ChartDomain& domain,
                                        const SamplePlan& plan);

// Canonical Engel distribution on (x, y, p, q): Span(d_q, d_x + p d_y + q d_p).
std::vector<VectorField> engel_normal_form();

enum class Theorem7Branch { geodesic, engel, violated, inconclusive };
const char* to_string(Theorem7Branch b);

struct Theorem7Point {
  Theorem7Branch branch = Theorem7Branch::inconclusive;
  double x_component = 0.0;  // X-coefficient of nabla_Y Y in the frame (X, Y, J+X, J+Y), times |X| / |nabla_Y Y|
  RankTowerReport tower;
};
// Needs LeeFields with X, Y of order >= 2 when the tower is required.
Theorem7Point theorem7_point(const LeeFields& L, double geodesic_tol = 1e-8);

}  // namespace pbh
