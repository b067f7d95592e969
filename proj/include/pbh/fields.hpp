#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pbh/forms.hpp"

namespace pbh {

// Fields are pure maps from a jet-lifted chart point to component jets. A field
// evaluated at the identity lift of order k returns the Taylor expansion of its
// components; differential operators read derivatives off those jets, so each
// derivative consumes one order.
using ScalarField = std::function<Jet(const JVec&)>;
using VectorField = std::function<JVec(const JVec&)>;
using FormField = std::function<Form(const JVec&)>;
using EndoField = std::function<JMat(const JVec&)>;
using MetricField = EndoField;
using BivectorField = EndoField;  // antisymmetric P(i, j) = P^{ij}

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExcludedLocus {
  std::string name;
  std::function<double(const Eigen::VectorXd&)> predicate;
  double margin = 0.05;
};

struct ChartDomain {
  int dim = 0;
  Eigen::VectorXd lo, hi;
  std::vector<ExcludedLocus> excluded;

  bool in_box(const Eigen::VectorXd& p, double slack = 0.0) const;
  bool clear_of_loci(const Eigen::VectorXd& p) const;
  bool contains(const Eigen::VectorXd& p) const { return in_box(p) && clear_of_loci(p); }
  void validate() const;
};

struct SamplePlan {
  int count = 64;
  std::uint64_t seed = 42;
};

// Deterministic uniform samples in the box, rejecting points near excluded loci.
std::vector<Eigen::VectorXd> sample_points(const ChartDomain& domain, const SamplePlan& plan);

// Identity lift x0 + h with jets of the given order.
JVec lift(const Eigen::VectorXd& p, int order);

template <class F>
auto lift_to_jets(const F& field, const ChartDomain& domain, const Eigen::VectorXd& p, int order = 3) {
  if (!domain.in_box(p)) throw DomainError("point outside chart box");
  if (!domain.clear_of_loci(p)) throw DomainError("point inside an excluded locus margin");
  return field(lift(p, order));
}

// Vector calculus on jet values.
Jet directional(const JVec& x, const Jet& f);           // X(f)
JVec directional(const JVec& x, const JVec& v);         // componentwise X(v^i)
JVec lie_bracket(const JVec& x, const JVec& y);         // [X, Y]
Form lie_derivative(const JVec& x, const Form& w);      // L_X w = i_X dw + d i_X w
// Contravariant 2-tensors: (L_V P)^ij = V(P^ij) - P^kj d_k V^i - P^ik d_k V^j.
JMat lie_derivative(const JVec& v, const JMat& p);
JVec gradient(const Jet& f);                            // df as a covector

// Field-level wrappers.
FormField exterior_derivative(FormField w);
VectorField lie_bracket(VectorField x, VectorField y);

// Runs fn(i) for i in [0, n) on a fixed pool of threads; fn writes to its own slot.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace pbh
