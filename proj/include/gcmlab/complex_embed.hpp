#pragma once

#include <Eigen/Dense>

#include "gcmlab/quat.hpp"

namespace gcm {

using CMat = Eigen::MatrixXcd;

// Complex picture of H^n: C^{2n} with the ordered basis
// {e_{-n}, ..., e_{-1}, e_1, ..., e_n}, where e_{-p} = e_p * j.
// Index set is {-n..-1, 1..n} (no zero); pos() maps an index to its array slot.
inline int pos(int n, int idx) { return idx < 0 ? n + idx : n + idx - 1; }

// embed_complex: the C-linear matrix of A acting on C^{2n}. One quaternionic
// entry a_pq = alpha + j beta occupies the four slots {-p,p} x {-q,q}:
//   (p,q) = alpha   (-p,-q) = conj(alpha)   (-p,q) = beta   (p,-q) = -conj(beta)
// For n = 1 this is the standard inclusion H -> gl(2,C),
// alpha + j beta -> [[conj(alpha), beta], [-conj(beta), alpha]].
CMat embed_complex(const QMatrix& a);

// Inverse of embed_complex on its image; throws DegenerateInput if the matrix
// is farther than tol from the image (i.e. does not commute with the
// quaternionic structure map).
QMatrix unembed_complex(const CMat& m, double tol = 1e-9);

// The symplectic Gram matrix in this basis: Q_{-c,c} = 1 and Q_{c,-c} = -1 for
// c = 1..n, all other entries zero (antidiagonal ones in block form). Note
// Q^t = -Q and Q^2 = -1. The same matrix is the C-antilinear structure map of
// right multiplication by j: v*j = Q * conj(v).
CMat q_form(int n);

// Symplectic transpose tau(A) = Q^{-1} A^t Q = -Q A^t Q.
CMat symplectic_transpose(const CMat& a);

// Basis elements F_{i,j} = E_{i,j} - sgn(i) sgn(j) E_{-j,-i} of sp(2n,C),
// indices in {-n..-1, 1..n}; they satisfy F^t Q + Q F = 0 for the form above.
CMat sp_basis_element(int n, int i, int j);

// Membership predicates (entrywise tolerance).
bool is_sp_group(const CMat& a, double tol);    // A^t Q A = Q
bool is_sp_algebra(const CMat& a, double tol);  // A^t Q + Q A = 0
bool is_unitary_c(const CMat& a, double tol);   // A^dag A = 1

// Matrix exponential by scaling-and-squaring on the Taylor series; adequate for
// the moderate norms used here.
CMat expm(const CMat& a);

}  // namespace gcm
