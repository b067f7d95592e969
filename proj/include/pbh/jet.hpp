#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace pbh {

constexpr int kMaxDim = 6;
constexpr int kMaxOrder = 4;
constexpr int kJetCapacity = 84;

using MultiIndex = std::array<int, kMaxDim>;

// Number of monomials of total degree <= order in dim variables.
int jet_size(int dim, int order);
// Highest order that fits the coefficient capacity in the given dimension.
int max_order_for_dim(int dim);

// Multi-index bookkeeping shared by all jets of one dimension. Coefficients are
// stored in graded order, so the coefficients of order <= k form a prefix.
struct JetTables {
  struct Term {
    std::uint8_t i, j, l;
  };
  int dim = 0;
  int max_order = 0;
  std::vector<MultiIndex> alpha;
  std::vector<int> degree;
  std::vector<double> factorial;   // alpha!
  std::vector<int> size_upto;      // size_upto[d] = #monomials of degree <= d
  std::vector<Term> mul;           // product terms sorted by degree of l
  std::vector<int> mul_upto;       // mul_upto[d] = #terms with deg(l) <= d
  std::vector<int> succ;           // succ[idx*dim+i] = index of alpha+e_i, -1 past max order

  int index_of(const MultiIndex& a) const;
};

const JetTables& jet_tables(int dim);

class OrderExhausted : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Truncated multivariate Taylor polynomial f(x0 + h) = sum_a c_a h^a.
// A jet of dimension 0 is an exact constant and combines with any other jet.
class Jet {
 public:
  Jet() : n_(0), k_(kMaxOrder), size_(1) { c_[0] = 0.0; }
  Jet(double v) : n_(0), k_(kMaxOrder), size_(1) { c_[0] = v; }  // NOLINT
  Jet(const Jet& o) : n_(o.n_), k_(o.k_), size_(o.size_) { copy_from(o); }
  Jet& operator=(const Jet& o) {
    n_ = o.n_;
    k_ = o.k_;
    size_ = o.size_;
    copy_from(o);
    return *this;
  }

  static Jet zero(int dim, int order);
  static Jet constant(int dim, int order, double v);
  static Jet variable(int dim, int order, int i, double v);

  int dim() const { return n_; }
  int order() const { return k_; }
  int size() const { return size_; }
  double value() const { return c_[0]; }
  double coeff(int idx) const { return idx < size_ ? c_[idx] : 0.0; }
  double& coeff_ref(int idx) { return c_[idx]; }

  // Mixed partial derivative d^a f(x0) = a! c_a.
  double partial(const MultiIndex& a) const;
  double partial(std::initializer_list<int> a) const;
  // Jet of the partial derivative in coordinate i; order drops by one.
  Jet derivative(int i) const;
  Jet truncated(int order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(double v) {
    c_[0] += v;
    return *this;
  }
  Jet& operator-=(double v) {
    c_[0] -= v;
    return *this;
  }
  Jet& operator*=(double v) {
    for (int i = 0; i < size_; ++i) c_[i] *= v;
    return *this;
  }
  Jet& operator/=(double v) { return *this *= (1.0 / v); }
  Jet operator-() const {
    Jet r(*this);
    for (int i = 0; i < size_; ++i) r.c_[i] = -r.c_[i];
    return r;
  }

  friend Jet operator*(const Jet& a, const Jet& b);
  // phi(a) given the Taylor coefficients phi^(m)(a0)/m!, m = 0..order.
  friend Jet compose(const Jet& a, const double* taylor);

 private:
  void copy_from(const Jet& o) {
    for (int i = 0; i < size_; ++i) c_[i] = o.c_[i];
  }
  void resize_to(int dim, int order);

  std::uint8_t n_;
  std::uint8_t k_;
  std::uint8_t size_;
  double c_[kJetCapacity];
};

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator/(Jet a, const Jet& b) { return a /= b; }
inline Jet operator+(Jet a, double b) { return a += b; }
inline Jet operator-(Jet a, double b) { return a -= b; }
inline Jet operator*(Jet a, double b) { return a *= b; }
inline Jet operator/(Jet a, double b) { return a /= b; }
inline Jet operator+(double b, Jet a) { return a += b; }
inline Jet operator-(double b, const Jet& a) { return (-a) += b; }
inline Jet operator*(double b, Jet a) { return a *= b; }
Jet operator/(double b, const Jet& a);

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet pow(const Jet& a, double r);
Jet inv(const Jet& a);
Jet square(const Jet& a);

}  // namespace pbh
