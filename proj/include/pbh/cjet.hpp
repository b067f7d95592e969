#pragma once

#include <complex>
#include <vector>

#include "pbh/jmat.hpp"

namespace pbh {

// Complex-valued jet stored as (real, imaginary) parts over real chart coordinates.
// Complex chart coordinates are interleaved: z_a = x_{2a} + i x_{2a+1}.
struct CJet {
  Jet re, im;
  CJet() = default;
  CJet(Jet r) : re(std::move(r)) {}  // NOLINT
  CJet(Jet r, Jet i) : re(std::move(r)), im(std::move(i)) {}
  CJet(std::complex<double> c) : re(c.real()), im(c.imag()) {}  // NOLINT

  std::complex<double> value() const { return {re.value(), im.value()}; }
  CJet conj() const { return {re, -im}; }
  Jet norm2() const { return re * re + im * im; }
  CJet operator-() const { return {-re, -im}; }
};

using CVec = std::vector<CJet>;

CJet operator+(const CJet& a, const CJet& b);
CJet operator-(const CJet& a, const CJet& b);
CJet operator*(const CJet& a, const CJet& b);
CJet operator/(const CJet& a, const CJet& b);
CJet operator*(std::complex<double> s, const CJet& a);
CJet operator*(const Jet& s, const CJet& a);

// Complex coordinates from an interleaved real jet point.
CVec complex_coords(const JVec& x);

// Wirtinger derivatives d/dz_a = (d/dx - i d/dy)/2 and d/dzbar_a = (d/dx + i d/dy)/2.
CJet d_holo(const CJet& f, int a);
CJet d_antiholo(const CJet& f, int a);

// Re V for the (1,0) field V = V^a d/dz_a, as a real field in interleaved coordinates:
// (Re V^a d/dx_a + Im V^a d/dy_a) / 2.
JVec real_part_field(const CVec& v);

// Complex bivector U ^ V of two (1,0) fields in the real basis (real and imaginary parts).
struct CBivector {
  JMat re, im;
};
CBivector wedge_holo(const CVec& u, const CVec& v);

}  // namespace pbh
