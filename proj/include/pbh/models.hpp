#pragma once

#include <string>
#include <vector>

#include "pbh/gencomplex.hpp"

namespace pbh {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Affine deck transformation x -> linear * x + shift of a quotient model.
struct LatticeMap {
  std::string name;
  Eigen::MatrixXd linear;
  Eigen::VectorXd shift;
  Eigen::VectorXd operator()(const Eigen::VectorXd& x) const { return linear * x + shift; }
};

struct ModelDescriptor {
  std::string name;
  ChartDomain domain;
  MetricField g;
  EndoField J1, J2, J3;  // para-hypercomplex triple, J1 complex
  std::vector<LatticeMap> lattice;
  std::string construction;  // human-readable description of how the triple was obtained
};

struct PhkCertificate {
  double paraquaternion = 0.0;  // split-quaternion table
  double compatibility = 0.0;   // g(J1.,J1.) = g, g(Jk.,Jk.) = -g for k = 2, 3
  double closedness = 0.0;      // d Omega_k
  double lattice = 0.0;         // pullback invariance under the deck maps
  int points = 0;
  bool pass(double tol) const {
    return paraquaternion <= tol && compatibility <= tol && closedness <= tol && lattice <= tol;
  }
};

PhkCertificate certify_phk(const ModelDescriptor& m, const SamplePlan& plan);

// Flat torus R^4 / (2 pi Z)^4 with g = diag(1, 1, -1, -1) and constant triple.
ModelDescriptor torus_phk();
Eigen::Matrix4d torus_metric();
Eigen::Matrix4d torus_j1();
Eigen::Matrix4d torus_j2();

// Kodaira-Thurston nilmanifold in global coordinates, coframe e4 = dx4 - x1 dx2. The triple
// is the torus triple transported by a constant frame change chosen from a small candidate
// family; the first candidate that certifies at `plan` is used, otherwise ModelError.
ModelDescriptor kodaira_phk(const SamplePlan& plan = {16, 7}, double tol = 1e-10);
// Candidate frames E_a (columns, in the torus basis) mapped to the left-invariant frame.
std::vector<std::pair<std::string, Eigen::Matrix4d>> kodaira_candidates();
ModelDescriptor kodaira_with_frame(const std::string& label, const Eigen::Matrix4d& frame);

// Domain shrunk by `margin` on every side.
ChartDomain inner_domain(const ChartDomain& d, double margin);

}  // namespace pbh
