#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pbh/jet.hpp"

namespace pbh {

using JVec = std::vector<Jet>;

class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense matrix of jets. For endomorphisms A(i, j) = A^i_j, so column j is the image of d/dx^j.
class JMat {
 public:
  JMat() = default;
  JMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static JMat zeros(int rows, int cols) { return JMat(rows, cols); }
  static JMat identity(int n);
  static JMat constant(const Eigen::MatrixXd& m);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Jet& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Jet& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Eigen::MatrixXd value() const;
  JMat transpose() const;
  JMat derivative(int k) const;
  JVec col(int j) const;
  JMat block(int i0, int j0, int rows, int cols) const;
  void set_block(int i0, int j0, const JMat& b);
  Jet trace() const;
  double max_abs() const;
  int order() const;

  JMat& operator+=(const JMat& o);
  JMat& operator-=(const JMat& o);
  JMat& operator*=(const Jet& s);
  JMat operator-() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Jet> a_;
};

JMat operator+(JMat a, const JMat& b);
JMat operator-(JMat a, const JMat& b);
JMat operator*(const JMat& a, const JMat& b);
JMat operator*(JMat a, const Jet& s);
JMat operator*(const Jet& s, JMat a);
JVec operator*(const JMat& a, const JVec& v);
JMat commutator(const JMat& a, const JMat& b);
JMat anticommutator(const JMat& a, const JMat& b);
// Gauss-Jordan elimination with partial pivoting on the values.
JMat inverse(const JMat& a);
Jet determinant(const JMat& a);

JVec operator+(const JVec& a, const JVec& b);
JVec operator-(const JVec& a, const JVec& b);
JVec operator*(const Jet& s, const JVec& v);
JVec operator-(const JVec& a);
JVec zeros_vec(int n);
JVec constant_vec(const Eigen::VectorXd& v);
Eigen::VectorXd value(const JVec& v);
JVec derivative(const JVec& v, int k);
double max_abs(const JVec& v);
// Bilinear form x^T m y.
Jet bilinear(const JMat& m, const JVec& x, const JVec& y);
Jet dot(const JVec& x, const JVec& y);
// Covector times endomorphism: (xi o A)_j = xi_i A^i_j.
JVec covector_times(const JVec& xi, const JMat& a);
// Row-stacked n x m matrix from columns.
JMat from_columns(const std::vector<JVec>& cols);

}  // namespace pbh
