#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbh/structures.hpp"

namespace pbh {

// Section X + xi of T + T* at a jet point. Endomorphisms of T + T* are 2n x 2n
// matrices acting on the stacked (vector, covector) components.
struct GenSection {
  JVec v, xi;
};

using GenEndoField = std::function<JMat(const JVec&)>;

JVec stack(const GenSection& a);
GenSection unstack(const JVec& s);
GenSection apply(const JMat& I, const GenSection& a);
GenSection operator+(const GenSection& a, const GenSection& b);
GenSection operator-(const GenSection& a, const GenSection& b);

// <X + xi, Y + eta> = 1/2 (xi(Y) + eta(X)).
Jet pairing(const GenSection& a, const GenSection& b);
// Matrix of the pairing on stacked components: 1/2 [[0, I], [I, 0]].
Eigen::MatrixXd pairing_matrix(int n);

// [X+xi, Y+eta]_H = [X,Y] + L_X eta - L_Y xi - 1/2 d(i_X eta - i_Y xi) + i_Y i_X H.
GenSection courant_bracket(const GenSection& a, const GenSection& b, const Form& H);

// e^b(X + xi) = X + xi + i_X b as a matrix [[I, 0], [b^T, I]] for the 2-form matrix b.
JMat b_transform(const JMat& b);

// I^2 + Id and I^T P I - P, largest entries.
double square_defect(const JMat& I);
double orthogonality_defect(const JMat& I);

// Largest component of N_H(A, B) = [A,B] - [IA,IB] + I[IA,B] + I[A,IB] over the coordinate
// sections of T + T* and `random_sections` sections with affine coefficients in x.
double gcs_nijenhuis(const JVec& x, const JMat& I, const Form& H, int random_sections = 8,
                     std::uint64_t seed = 1);

// Generalized complex structure whose +i eigenspace is {X - i_X beta}, beta = B + i w.
// Throws DegeneracyError when w is degenerate.
JMat gcs_from_form(const JMat& B, const JMat& w);
inline JMat gcs_from_form(const ComplexForm& beta) { return gcs_from_form(beta.re.to_matrix(), beta.im.to_matrix()); }

// Pair (I1, I2) built from two Hermitian structures with a common metric and a b-field.
struct GenPair {
  JMat I1, I2;
};
GenPair gualtieri_build(const JMat& g, const JMat& Jp, const JMat& Jm, const JMat& b);

// Inverse of gualtieri_build for a generalized pseudo-Kaehler pair.
struct BihermitianExtract {
  JMat g, b, Jp, Jm;
};
BihermitianExtract extract_bihermitian(const JMat& I1, const JMat& I2);

// Pointwise clauses of the generalized pseudo-Kaehler condition (constant values).
struct GpkPointReport {
  double commutator = 0.0;          // |[I1, I2]|
  int dim_plus = 0, dim_minus = 0;  // dimensions of the +-1 eigenspaces of G = I1 I2
  double transversal_plus = 0.0;    // sine of the smallest principal angle to T
  double transversal_minus = 0.0;
  double pairing_plus = 0.0;        // smallest singular value of the pairing Gram matrix
  double pairing_minus = 0.0;
  std::pair<int, int> signature_plus, signature_minus;
  std::string failed_clause;        // empty when all clauses hold
};
GpkPointReport check_gpk_point(const Eigen::MatrixXd& I1, const Eigen::MatrixXd& I2, double commute_tol = 1e-9);

}  // namespace pbh
