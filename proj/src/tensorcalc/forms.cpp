#include "pbh/forms.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace pbh {

int popcount(unsigned m) { return std::popcount(m); }

namespace {

struct ComboTable {
  std::vector<unsigned> masks;
  std::array<int, 64> pos{};
};

ComboTable build_combos(int n, int k) {
  ComboTable t;
  t.pos.fill(-1);
  // Lexicographic order of sorted index tuples.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return t;
  while (true) {
    unsigned m = 0;
    for (int i : idx) m |= 1u << i;
    t.pos[m] = static_cast<int>(t.masks.size());
    t.masks.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return t;
}

const ComboTable& combo_table(int n, int k) {
  static const auto tables = [] {
    std::array<std::array<ComboTable, kMaxDim + 2>, kMaxDim + 1> t;
    for (int n = 0; n <= kMaxDim; ++n)
      for (int k = 0; k <= kMaxDim + 1; ++k) t[n][k] = build_combos(n, k);
    return t;
  }();
  if (n < 0 || n > kMaxDim || k < 0 || k > kMaxDim + 1) throw std::invalid_argument("form degree out of range");
  return tables[n][k];
}

// Number of elements of b smaller than i.
int below(unsigned b, int i) { return std::popcount(b & ((1u << i) - 1u)); }

// Sign of the shuffle that sorts the concatenation (sorted a, sorted b).
int shuffle_sign(unsigned a, unsigned b) {
  int inv = 0;
  for (unsigned m = a; m; m &= m - 1) inv += below(b, std::countr_zero(m));
  return (inv % 2) ? -1 : 1;
}

}  // namespace

std::vector<unsigned> combinations(int n, int k) { return combo_table(n, k).masks; }

Form::Form(int n, int k) : n_(n), k_(k), c_(combo_table(n, k).masks.size()) {}

const std::vector<unsigned>& Form::masks() const { return combo_table(n_, k_).masks; }

Jet& Form::at_mask(unsigned mask) { return c_[combo_table(n_, k_).pos[mask]]; }
const Jet& Form::at_mask(unsigned mask) const { return c_[combo_table(n_, k_).pos[mask]]; }

Jet Form::component(const std::vector<int>& idx) const {
  std::vector<int> s(idx);
  int sign = 1;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) return Jet(0.0);
      if (s[i] > s[j]) sign = -sign;
    }
  unsigned m = 0;
  for (int i : s) m |= 1u << i;
  const Jet& c = at_mask(m);
  return sign > 0 ? c : -c;
}

Form Form::from_covector(const JVec& xi) {
  Form f(static_cast<int>(xi.size()), 1);
  for (size_t i = 0; i < xi.size(); ++i) f.at_mask(1u << i) = xi[i];
  return f;
}

JVec Form::to_covector() const {
  if (k_ != 1) throw std::invalid_argument("to_covector on a form of degree != 1");
  JVec v(n_);
  for (int i = 0; i < n_; ++i) v[i] = at_mask(1u << i);
  return v;
}

Form Form::from_matrix(const JMat& m) {
  Form f(m.rows(), 2);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.rows(); ++j) f.at_mask((1u << i) | (1u << j)) = m(i, j);
  return f;
}

JMat Form::to_matrix() const {
  if (k_ != 2) throw std::invalid_argument("to_matrix on a form of degree != 2");
  JMat m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      m(i, j) = at_mask((1u << i) | (1u << j));
      m(j, i) = -m(i, j);
    }
  return m;
}

double Form::max_abs() const {
  double m = 0.0;
  for (const Jet& x : c_) m = std::max(m, std::abs(x.value()));
  return m;
}

Form Form::derivative(int k) const {
  Form r(n_, k_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i].derivative(k);
  return r;
}

Form& Form::operator+=(const Form& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Form& Form::operator-=(const Form& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Form& Form::operator*=(const Jet& s) {
  for (Jet& x : c_) x *= s;
  return *this;
}

Form Form::operator-() const {
  Form r(*this);
  for (Jet& x : r.c_) x = -x;
  return r;
}

Form operator+(Form a, const Form& b) { return a += b; }
Form operator-(Form a, const Form& b) { return a -= b; }
Form operator*(const Jet& s, Form a) { return a *= s; }

Form d(const Form& w) {
  const int n = w.dim(), k = w.degree();
  Form r(n, k + 1);
  if (k + 1 > n) return r;
  std::vector<Form> partials;
  partials.reserve(n);
  for (int i = 0; i < n; ++i) partials.push_back(w.derivative(i));
  const auto& masks = r.masks();
  for (int p = 0; p < r.size(); ++p) {
    const unsigned m = masks[p];
    Jet s;
    int pos = 0;
    for (unsigned b = m; b; b &= b - 1, ++pos) {
      const int i = std::countr_zero(b);
      const Jet& c = partials[i].at_mask(m & ~(1u << i));
      if (pos % 2) s -= c;
      else s += c;
    }
    r[p] = s;
  }
  return r;
}

Form wedge(const Form& a, const Form& b) {
  const int n = a.dim(), k = a.degree(), l = b.degree();
  Form r(n, k + l);
  if (k + l > n) return r;
  const auto& masks = r.masks();
  const auto& amasks = a.masks();
  for (int p = 0; p < r.size(); ++p) {
    const unsigned m = masks[p];
    Jet s;
    for (int q = 0; q < a.size(); ++q) {
      const unsigned am = amasks[q];
      if ((am & m) != am) continue;
      const unsigned bm = m & ~am;
      const Jet t = a[q] * b.at_mask(bm);
      if (shuffle_sign(am, bm) > 0) s += t;
      else s -= t;
    }
    r[p] = s;
  }
  return r;
}

Form interior(const JVec& x, const Form& w) {
  const int n = w.dim(), k = w.degree();
  if (k == 0) return Form(n, 0);
  Form r(n, k - 1);
  const auto& masks = r.masks();
  for (int p = 0; p < r.size(); ++p) {
    const unsigned m = masks[p];
    Jet s;
    for (int i = 0; i < n; ++i) {
      if (m & (1u << i)) continue;
      if (x[i].dim() == 0 && x[i].value() == 0.0) continue;
      const Jet t = x[i] * w.at_mask(m | (1u << i));
      if (below(m, i) % 2) s -= t;
      else s += t;
    }
    r[p] = s;
  }
  return r;
}

Jet evaluate(const Form& w, const std::vector<JVec>& vs) {
  Form cur = w;
  for (const JVec& v : vs) cur = interior(v, cur);
  return cur[0];
}

Form pullback_linear(const JMat& a, const Form& w) {
  const int n = w.dim(), k = w.degree();
  Form r(n, k);
  const auto& masks = r.masks();
  for (int p = 0; p < r.size(); ++p) {
    std::vector<JVec> cols;
    for (unsigned b = masks[p]; b; b &= b - 1) cols.push_back(a.col(std::countr_zero(b)));
    r[p] = evaluate(w, cols);
  }
  return r;
}

}  // namespace pbh
