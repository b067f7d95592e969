#pragma once

#include <vector>

#include "pbh/jmat.hpp"

namespace pbh {

// Bitmask helpers for strictly increasing index sets.
std::vector<unsigned> combinations(int n, int k);
int popcount(unsigned m);

// Differential k-form on an n-dimensional chart, stored by increasing index sets.
class Form {
 public:
  Form() = default;
  Form(int n, int k);

  int dim() const { return n_; }
  int degree() const { return k_; }
  int size() const { return static_cast<int>(c_.size()); }
  const std::vector<unsigned>& masks() const;

  Jet& operator[](int pos) { return c_[pos]; }
  const Jet& operator[](int pos) const { return c_[pos]; }
  Jet& at_mask(unsigned mask);
  const Jet& at_mask(unsigned mask) const;
  // Component for an arbitrary index tuple, including the permutation sign.
  Jet component(const std::vector<int>& idx) const;

  static Form from_covector(const JVec& xi);
  JVec to_covector() const;
  // 2-forms as antisymmetric matrices M(i, j) = w(d_i, d_j).
  static Form from_matrix(const JMat& m);
  JMat to_matrix() const;

  double max_abs() const;
  Form derivative(int k) const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Jet& s);
  Form operator-() const;

 private:
  int n_ = 0, k_ = 0;
  std::vector<Jet> c_;
};

Form operator+(Form a, const Form& b);
Form operator-(Form a, const Form& b);
Form operator*(const Jet& s, Form a);

// Exterior derivative from jet partials; requires jet order >= 1.
Form d(const Form& w);
// Determinant-convention wedge product; empty (all-zero) form when k+l > n.
Form wedge(const Form& a, const Form& b);
Form interior(const JVec& x, const Form& w);
// w(v_1, ..., v_k).
Jet evaluate(const Form& w, const std::vector<JVec>& vs);
// (A^* w)(v_1, ..., v_k) = w(A v_1, ..., A v_k).
Form pullback_linear(const JMat& a, const Form& w);

struct ComplexForm {
  Form re, im;
};

}  // namespace pbh
