#include "pbh/jmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pbh {

JMat JMat::identity(int n) {
  JMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Jet(1.0);
  return m;
}

JMat JMat::constant(const Eigen::MatrixXd& m) {
  JMat r(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < r.r_; ++i)
    for (int j = 0; j < r.c_; ++j) r(i, j) = Jet(m(i, j));
  return r;
}

Eigen::MatrixXd JMat::value() const {
  Eigen::MatrixXd m(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j).value();
  return m;
}

JMat JMat::transpose() const {
  JMat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

JMat JMat::derivative(int k) const {
  JMat d(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) d.a_[i] = a_[i].derivative(k);
  return d;
}

JVec JMat::col(int j) const {
  JVec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

JMat JMat::block(int i0, int j0, int rows, int cols) const {
  JMat b(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
  return b;
}

void JMat::set_block(int i0, int j0, const JMat& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

Jet JMat::trace() const {
  Jet t;
  for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

double JMat::max_abs() const {
  double m = 0.0;
  for (const Jet& x : a_) m = std::max(m, std::abs(x.value()));
  return m;
}

int JMat::order() const {
  int k = kMaxOrder;
  for (const Jet& x : a_)
    if (x.dim() != 0) k = std::min(k, x.order());
  return k;
}

JMat& JMat::operator+=(const JMat& o) {
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

JMat& JMat::operator-=(const JMat& o) {
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

JMat& JMat::operator*=(const Jet& s) {
  for (Jet& x : a_) x *= s;
  return *this;
}

JMat JMat::operator-() const {
  JMat r(*this);
  for (Jet& x : r.a_) x = -x;
  return r;
}

JMat operator+(JMat a, const JMat& b) { return a += b; }
JMat operator-(JMat a, const JMat& b) { return a -= b; }
JMat operator*(JMat a, const Jet& s) { return a *= s; }
JMat operator*(const Jet& s, JMat a) { return a *= s; }

JMat operator*(const JMat& a, const JMat& b) {
  JMat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Jet s;
      for (int k = 0; k < a.cols(); ++k) {
        const Jet& x = a(i, k);
        const Jet& y = b(k, j);
        if ((x.dim() == 0 && x.value() == 0.0) || (y.dim() == 0 && y.value() == 0.0)) continue;
        s += x * y;
      }
      r(i, j) = s;
    }
  return r;
}

JVec operator*(const JMat& a, const JVec& v) {
  JVec r(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Jet s;
    for (int k = 0; k < a.cols(); ++k) {
      const Jet& x = a(i, k);
      if (x.dim() == 0 && x.value() == 0.0) continue;
      s += x * v[k];
    }
    r[i] = s;
  }
  return r;
}

JMat commutator(const JMat& a, const JMat& b) { return a * b - b * a; }
JMat anticommutator(const JMat& a, const JMat& b) { return a * b + b * a; }

JMat inverse(const JMat& a) {
  const int n = a.rows();
  JMat m(a);
  JMat inv = JMat::identity(n);
  double scale = std::max(a.max_abs(), std::numeric_limits<double>::min());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(m(i, col).value()) > std::abs(m(piv, col).value())) piv = i;
    if (std::abs(m(piv, col).value()) <= 1e-13 * scale) throw DegeneracyError("singular jet matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const Jet p = pbh::inv(m(col, col));
    for (int j = 0; j < n; ++j) {
      m(col, j) *= p;
      inv(col, j) *= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const Jet f = m(i, col);
      if (f.dim() == 0 && f.value() == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Jet determinant(const JMat& a) {
  const int n = a.rows();
  JMat m(a);
  Jet det(1.0);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(m(i, col).value()) > std::abs(m(piv, col).value())) piv = i;
    if (m(piv, col).value() == 0.0) {
      // Rank-deficient at the base point; fall back to expansion by minors for the jet.
      if (n == 1) return m(0, 0);
      Jet s;
      for (int j = 0; j < n; ++j) {
        JMat minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r)
          for (int c = 0, cc = 0; c < n; ++c)
            if (c != j) minor(r - 1, cc++) = a(r, c);
        const Jet t = a(0, j) * determinant(minor);
        if (j % 2) s -= t;
        else s += t;
      }
      return s;
    }
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Jet p = pbh::inv(m(col, col));
    for (int i = col + 1; i < n; ++i) {
      const Jet f = m(i, col) * p;
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

JVec operator+(const JVec& a, const JVec& b) {
  JVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

JVec operator-(const JVec& a, const JVec& b) {
  JVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

JVec operator*(const Jet& s, const JVec& v) {
  JVec r(v);
  for (Jet& x : r) x = s * x;
  return r;
}

JVec operator-(const JVec& a) {
  JVec r(a);
  for (Jet& x : r) x = -x;
  return r;
}

JVec zeros_vec(int n) { return JVec(n); }

JVec constant_vec(const Eigen::VectorXd& v) {
  JVec r(v.size());
  for (int i = 0; i < v.size(); ++i) r[i] = Jet(v(i));
  return r;
}

Eigen::VectorXd value(const JVec& v) {
  Eigen::VectorXd r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r(i) = v[i].value();
  return r;
}

JVec derivative(const JVec& v, int k) {
  JVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].derivative(k);
  return r;
}

double max_abs(const JVec& v) {
  double m = 0.0;
  for (const Jet& x : v) m = std::max(m, std::abs(x.value()));
  return m;
}

Jet bilinear(const JMat& m, const JVec& x, const JVec& y) { return dot(x, m * y); }

Jet dot(const JVec& x, const JVec& y) {
  Jet s;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

JVec covector_times(const JVec& xi, const JMat& a) {
  JVec r(a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    Jet s;
    for (int i = 0; i < a.rows(); ++i) s += xi[i] * a(i, j);
    r[j] = s;
  }
  return r;
}

JMat from_columns(const std::vector<JVec>& cols) {
  const int n = static_cast<int>(cols.empty() ? 0 : cols[0].size());
  JMat m(n, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < n; ++i) m(i, static_cast<int>(j)) = cols[j][i];
  return m;
}

}  // namespace pbh
