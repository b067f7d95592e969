#include "pbh/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pbh {

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All multi-indices of dim variables with |a| == d, in lexicographically decreasing order.
void monomials_of_degree(int dim, int d, int pos, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos == dim - 1) {
    cur[pos] = d;
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int v = d; v >= 0; --v) {
    cur[pos] = v;
    monomials_of_degree(dim, d - v, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

JetTables build_tables(int dim) {
  JetTables t;
  t.dim = dim;
  t.max_order = max_order_for_dim(dim);
  t.size_upto.assign(t.max_order + 1, 0);
  for (int d = 0; d <= t.max_order; ++d) {
    if (dim == 0) {
      if (d == 0) t.alpha.push_back(MultiIndex{});
    } else {
      MultiIndex cur{};
      monomials_of_degree(dim, d, 0, cur, t.alpha);
    }
    t.size_upto[d] = static_cast<int>(t.alpha.size());
  }
  const int n = static_cast<int>(t.alpha.size());
  t.degree.resize(n);
  t.factorial.resize(n);
  for (int i = 0; i < n; ++i) {
    int deg = 0;
    double f = 1.0;
    for (int v = 0; v < kMaxDim; ++v) {
      deg += t.alpha[i][v];
      for (int m = 2; m <= t.alpha[i][v]; ++m) f *= m;
    }
    t.degree[i] = deg;
    t.factorial[i] = f;
  }
  t.succ.assign(static_cast<size_t>(n) * std::max(dim, 1), -1);
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < dim; ++v) {
      if (t.degree[i] + 1 > t.max_order) continue;
      MultiIndex a = t.alpha[i];
      a[v] += 1;
      t.succ[i * dim + v] = t.index_of(a);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (t.degree[i] + t.degree[j] > t.max_order) continue;
      MultiIndex a{};
      for (int v = 0; v < kMaxDim; ++v) a[v] = t.alpha[i][v] + t.alpha[j][v];
      t.mul.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
                       static_cast<std::uint8_t>(t.index_of(a))});
    }
  }
  std::stable_sort(t.mul.begin(), t.mul.end(), [&](const JetTables::Term& x, const JetTables::Term& y) {
    return t.degree[x.l] < t.degree[y.l];
  });
  t.mul_upto.assign(t.max_order + 1, 0);
  for (int d = 0; d <= t.max_order; ++d) {
    t.mul_upto[d] = static_cast<int>(
        std::count_if(t.mul.begin(), t.mul.end(), [&](const JetTables::Term& x) { return t.degree[x.l] <= d; }));
  }
  return t;
}

}  // namespace

int jet_size(int dim, int order) { return static_cast<int>(binom(dim + order, order)); }

int max_order_for_dim(int dim) {
  int k = 0;
  while (k < kMaxOrder && jet_size(dim, k + 1) <= kJetCapacity) ++k;
  return k;
}

int JetTables::index_of(const MultiIndex& a) const {
  int deg = 0;
  for (int v = 0; v < kMaxDim; ++v) deg += a[v];
  if (deg > max_order) return -1;
  const int start = deg == 0 ? 0 : size_upto[deg - 1];
  for (int i = start; i < size_upto[deg]; ++i)
    if (alpha[i] == a) return i;
  return -1;
}

const JetTables& jet_tables(int dim) {
  static const std::array<JetTables, kMaxDim + 1> tables = [] {
    std::array<JetTables, kMaxDim + 1> t;
    for (int d = 0; d <= kMaxDim; ++d) t[d] = build_tables(d);
    return t;
  }();
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("jet dimension out of range");
  return tables[dim];
}

void Jet::resize_to(int dim, int order) {
  const int old = size_;
  n_ = static_cast<std::uint8_t>(dim);
  k_ = static_cast<std::uint8_t>(order);
  size_ = static_cast<std::uint8_t>(dim == 0 ? 1 : jet_size(dim, order));
  for (int i = old; i < size_; ++i) c_[i] = 0.0;
}

Jet Jet::zero(int dim, int order) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("jet dimension out of range");
  if (order < 0 || order > max_order_for_dim(dim))
    throw std::invalid_argument("jet order " + std::to_string(order) + " unsupported in dimension " +
                                std::to_string(dim));
  Jet r;
  r.resize_to(dim, order);
  return r;
}

Jet Jet::constant(int dim, int order, double v) {
  Jet r = zero(dim, order);
  r.c_[0] = v;
  return r;
}

Jet Jet::variable(int dim, int order, int i, double v) {
  Jet r = constant(dim, order, v);
  if (order >= 1) {
    MultiIndex a{};
    a[i] = 1;
    r.c_[jet_tables(dim).index_of(a)] = 1.0;
  }
  return r;
}

double Jet::partial(const MultiIndex& a) const {
  const JetTables& t = jet_tables(n_);
  int deg = 0;
  for (int v = 0; v < kMaxDim; ++v) {
    if (v >= n_ && a[v] != 0) return 0.0;
    deg += a[v];
  }
  if (deg > k_) throw OrderExhausted("partial derivative beyond jet order");
  const int idx = t.index_of(a);
  return idx < 0 ? 0.0 : t.factorial[idx] * coeff(idx);
}

double Jet::partial(std::initializer_list<int> a) const {
  MultiIndex m{};
  int v = 0;
  for (int x : a) m[v++] = x;
  return partial(m);
}

Jet Jet::derivative(int i) const {
  if (n_ == 0) return Jet(0.0);
  if (k_ == 0) throw OrderExhausted("derivative of an order-0 jet");
  const JetTables& t = jet_tables(n_);
  Jet r = zero(n_, k_ - 1);
  for (int b = 0; b < r.size_; ++b) {
    const int s = t.succ[b * n_ + i];
    r.c_[b] = (t.alpha[b][i] + 1) * c_[s];
  }
  return r;
}

Jet Jet::truncated(int order) const {
  if (n_ == 0 || order >= k_) return *this;
  Jet r = zero(n_, order);
  for (int i = 0; i < r.size_; ++i) r.c_[i] = c_[i];
  return r;
}

namespace {
int joint_dim(const Jet& a, const Jet& b) {
  if (a.dim() == 0) return b.dim();
  if (b.dim() == 0 || a.dim() == b.dim()) return a.dim();
  throw std::invalid_argument("jets of different dimensions combined");
}
}  // namespace

Jet& Jet::operator+=(const Jet& o) {
  if (o.n_ == 0) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (n_ == 0) {
    const double v = c_[0];
    *this = o;
    c_[0] += v;
    return *this;
  }
  joint_dim(*this, o);
  if (o.k_ < k_) {
    k_ = o.k_;
    size_ = static_cast<std::uint8_t>(jet_size(n_, k_));
  }
  for (int i = 0; i < size_; ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  if (o.n_ == 0) {
    c_[0] -= o.c_[0];
    return *this;
  }
  if (n_ == 0) {
    const double v = c_[0];
    *this = -o;
    c_[0] += v;
    return *this;
  }
  joint_dim(*this, o);
  if (o.k_ < k_) {
    k_ = o.k_;
    size_ = static_cast<std::uint8_t>(jet_size(n_, k_));
  }
  for (int i = 0; i < size_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  if (a.n_ == 0) {
    Jet r(b);
    r *= a.c_[0];
    return r;
  }
  if (b.n_ == 0) {
    Jet r(a);
    r *= b.c_[0];
    return r;
  }
  const int dim = joint_dim(a, b);
  const int order = std::min<int>(a.k_, b.k_);
  Jet r = Jet::zero(dim, order);
  const JetTables& t = jet_tables(dim);
  const int nt = t.mul_upto[order];
  const JetTables::Term* term = t.mul.data();
  for (int q = 0; q < nt; ++q) r.c_[term[q].l] += a.c_[term[q].i] * b.c_[term[q].j];
  return r;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }

Jet& Jet::operator/=(const Jet& o) {
  if (o.n_ == 0) return *this *= (1.0 / o.c_[0]);
  return *this = *this * inv(o);
}

Jet operator/(double b, const Jet& a) { return b * inv(a); }

Jet compose(const Jet& a, const double* taylor) {
  if (a.n_ == 0 || a.k_ == 0) {
    Jet r(a);
    r.c_[0] = taylor[0];
    return r;
  }
  Jet h(a);
  h.c_[0] = 0.0;
  Jet r = Jet::constant(a.n_, a.k_, taylor[a.k_]);
  for (int m = a.k_ - 1; m >= 0; --m) {
    r = r * h;
    r.c_[0] += taylor[m];
  }
  return r;
}

namespace {
using Coeffs = std::array<double, kMaxOrder + 1>;

double inv_factorial(int m) {
  static const double f[] = {1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0};
  return f[m];
}
}  // namespace

Jet sin(const Jet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  const double cyc[4] = {s, c, -s, -c};
  Coeffs t{};
  for (int m = 0; m <= kMaxOrder; ++m) t[m] = cyc[m % 4] * inv_factorial(m);
  return compose(a, t.data());
}

Jet cos(const Jet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  const double cyc[4] = {c, -s, -c, s};
  Coeffs t{};
  for (int m = 0; m <= kMaxOrder; ++m) t[m] = cyc[m % 4] * inv_factorial(m);
  return compose(a, t.data());
}

Jet exp(const Jet& a) {
  const double e = std::exp(a.value());
  Coeffs t{};
  for (int m = 0; m <= kMaxOrder; ++m) t[m] = e * inv_factorial(m);
  return compose(a, t.data());
}

Jet log(const Jet& a) {
  const double x = a.value();
  if (!(x > 0.0)) throw std::domain_error("log of a non-positive jet");
  Coeffs t{};
  t[0] = std::log(x);
  double p = 1.0;
  for (int m = 1; m <= kMaxOrder; ++m) {
    p *= x;
    t[m] = ((m % 2) ? 1.0 : -1.0) / (m * p);
  }
  return compose(a, t.data());
}

Jet pow(const Jet& a, double r) {
  const double x = a.value();
  if (!(x > 0.0)) throw std::domain_error("non-integer power of a non-positive jet");
  Coeffs t{};
  double binom_c = 1.0;
  for (int m = 0; m <= kMaxOrder; ++m) {
    t[m] = binom_c * std::pow(x, r - m);
    binom_c *= (r - m) / (m + 1);
  }
  return compose(a, t.data());
}

Jet sqrt(const Jet& a) { return pow(a, 0.5); }

Jet inv(const Jet& a) {
  const double x = a.value();
  if (x == 0.0) throw std::domain_error("division by a jet with zero value");
  Coeffs t{};
  double p = 1.0 / x;
  for (int m = 0; m <= kMaxOrder; ++m) {
    t[m] = ((m % 2) ? -1.0 : 1.0) * p;
    p /= x;
  }
  return compose(a, t.data());
}

Jet square(const Jet& a) { return a * a; }

}  // namespace pbh
