#include "pbh/cjet.hpp"

namespace pbh {

CJet operator+(const CJet& a, const CJet& b) { return {a.re + b.re, a.im + b.im}; }
CJet operator-(const CJet& a, const CJet& b) { return {a.re - b.re, a.im - b.im}; }
CJet operator*(const CJet& a, const CJet& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
CJet operator/(const CJet& a, const CJet& b) {
  const Jet n = inv(b.norm2());
  const CJet t = a * b.conj();
  return {t.re * n, t.im * n};
}
CJet operator*(std::complex<double> s, const CJet& a) {
  return {s.real() * a.re - s.imag() * a.im, s.real() * a.im + s.imag() * a.re};
}
CJet operator*(const Jet& s, const CJet& a) { return {s * a.re, s * a.im}; }

CVec complex_coords(const JVec& x) {
  CVec z(x.size() / 2);
  for (size_t a = 0; a < z.size(); ++a) z[a] = {x[2 * a], x[2 * a + 1]};
  return z;
}

CJet d_holo(const CJet& f, int a) {
  const CJet fx{f.re.derivative(2 * a), f.im.derivative(2 * a)};
  const CJet fy{f.re.derivative(2 * a + 1), f.im.derivative(2 * a + 1)};
  return std::complex<double>(0.5, 0.0) * fx + std::complex<double>(0.0, -0.5) * fy;
}

CJet d_antiholo(const CJet& f, int a) {
  const CJet fx{f.re.derivative(2 * a), f.im.derivative(2 * a)};
  const CJet fy{f.re.derivative(2 * a + 1), f.im.derivative(2 * a + 1)};
  return std::complex<double>(0.5, 0.0) * fx + std::complex<double>(0.0, 0.5) * fy;
}

namespace {

// Complex components of V = V^a d/dz_a in the real basis.
CVec real_basis(const CVec& v) {
  CVec r(2 * v.size());
  for (size_t a = 0; a < v.size(); ++a) {
    r[2 * a] = std::complex<double>(0.5, 0.0) * v[a];
    r[2 * a + 1] = std::complex<double>(0.0, -0.5) * v[a];
  }
  return r;
}

}  // namespace

JVec real_part_field(const CVec& v) {
  const CVec r = real_basis(v);
  JVec out(r.size());
  for (size_t i = 0; i < r.size(); ++i) out[i] = r[i].re;
  return out;
}

CBivector wedge_holo(const CVec& u, const CVec& v) {
  const CVec a = real_basis(u), b = real_basis(v);
  const int n = static_cast<int>(a.size());
  CBivector w{JMat(n, n), JMat(n, n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CJet c = a[i] * b[j] - a[j] * b[i];
      w.re(i, j) = c.re;
      w.im(i, j) = c.im;
    }
  return w;
}

}  // namespace pbh
