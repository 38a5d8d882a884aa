#pragma once

#include <array>
#include <complex>
#include <vector>

#include "gcmlab/complex_embed.hpp"
#include "gcmlab/quat.hpp"
#include "gcmlab/rng.hpp"

namespace gcm {

// Truncated matrix series A(u) = A_0 + A_1 u^{-1} + ... + A_K u^{-K} in the
// formal variable u^{-1}; products and inverses are computed modulo u^{-(K+1)}.
// Pointed means A_0 = 1 (the pointed series form the gauge group of the
// truncation order).
class MatrixSeries {
 public:
  MatrixSeries() = default;
  MatrixSeries(int dim, int order);
  static MatrixSeries identity(int dim, int order);
  static MatrixSeries constant(const CMat& c0, int order);

  int dim() const { return dim_; }
  int order() const { return order_; }
  CMat& coeff(int m) { return c_[static_cast<std::size_t>(m)]; }
  const CMat& coeff(int m) const { return c_[static_cast<std::size_t>(m)]; }

  MatrixSeries operator+(const MatrixSeries& o) const;
  MatrixSeries operator-(const MatrixSeries& o) const;
  MatrixSeries operator*(const MatrixSeries& o) const;  // Cauchy product, truncated

  // Inverse through the order; the constant term must be invertible.
  MatrixSeries inverse() const;

  MatrixSeries shifted(cplx a) const;       // u -> u + a
  MatrixSeries neg_arg() const;             // u -> -u, i.e. A_M -> (-1)^M A_M
  MatrixSeries transposed() const;          // coefficientwise
  MatrixSeries sympl_transposed() const;    // coefficientwise tau

  double max_abs() const;
  double dist(const MatrixSeries& o) const;  // max coefficientwise entry distance
  bool is_pointed(double tol = 1e-12) const;

 private:
  int dim_ = 0, order_ = 0;
  std::vector<CMat> c_;
};

// Twisted involution sigma(A)(u) = Q^{-1} (A(-u)^t)^{-1} Q; its fixed points
// form the stabilizer subgroup H.
MatrixSeries sigma_map(const MatrixSeries& a);

// S(A)(u) = A(u) * tau(A(-u)); equals the identity series exactly on H.
MatrixSeries s_map(const MatrixSeries& a);

bool is_in_H(const MatrixSeries& a, double tol = 1e-10);

// Random pointed series with Gaussian coefficients of the given scale.
MatrixSeries random_pointed(int dim, int order, Rng& rng, double scale = 0.5);

// Draws from H by solving C(u)^t Q C(-u) = Q order by order, injecting a
// random homogeneous part (antisymmetric Y for odd orders, symmetric for even)
// at every order.
MatrixSeries sample_H_element(int dim, int order, Rng& rng, double scale = 0.5);

// A series Phi(u) = Q + Phi_1 u^{-1} + ... with the skew-pairing parity
// Phi(u)^t = -Phi(-u): Phi_m symmetric for odd m, antisymmetric for even m.
struct SkewPairingSeries {
  MatrixSeries phi;

  // Validates the parity invariants; throws DegenerateInput naming the first
  // offending order.
  static SkewPairingSeries checked(MatrixSeries phi, double tol = 1e-9);
};

// Gauge action on pairings: (B . Phi)(u) = (B(u)^{-1})^t Phi(u) B(-u)^{-1}.
SkewPairingSeries pairing_action(const MatrixSeries& b, const SkewPairingSeries& phi);

// Factorizes Phi(u) = C(u)^t Q C(-u) with pointed C and canonical (zero)
// homogeneous parts. Throws DegenerateInput if a reduced right-hand side
// violates its required parity at some order.
MatrixSeries skew_factorize(const SkewPairingSeries& phi);

// Basic automorphisms in their one-parameter deformation families; h = 1 gives
// the undeformed map, h = 0 collapses mult_g/shift to the identity while inv
// and bar_tau do not depend on h at all.
MatrixSeries aut_mult_g(const MatrixSeries& a, const std::vector<cplx>& g, double h);
MatrixSeries aut_shift(const MatrixSeries& a, cplx shift, double h);
MatrixSeries aut_inv(const MatrixSeries& a);       // A -> A(-u)^{-1}
MatrixSeries aut_bar_tau(const MatrixSeries& a);   // A -> A(-u)^tau
// shift_n ∘ bar_tau ∘ inv ∘ mult_g with shift parameter n = dim/2.
MatrixSeries psi_hat(const MatrixSeries& a, const std::vector<cplx>& g, double h);

// Generator-level description of a deformation family: each coordinate
// z_ij^{(M)} maps to sum_t coeff_t h^{pow_t} z_ij^{(src_t)}. Applying it to a
// concrete series must agree with the series-level automorphism.
struct DeformationTerm {
  cplx coeff;
  int h_power = 0;
  int src_order = 0;
};
struct CoordinateDeformation {
  int order = 0;
  std::vector<std::vector<DeformationTerm>> terms;  // indexed by target order M

  static CoordinateDeformation mult_g(const std::vector<cplx>& g, int order);
  static CoordinateDeformation shift(cplx a, int order);
  MatrixSeries apply(const MatrixSeries& a, double h) const;
};

// Classical-limit maps. psi0_corner computes the 2x2 corner compression
// [rows/cols {first, last}] of sum_M X^M u^{-M}; psi_chain reaches the same
// series through 1 + X u^{-1} followed by S(u) -> S(-u)^{-1} and corner
// extraction.
MatrixSeries psi0_corner(const CMat& x, int order);
MatrixSeries psi_chain(const CMat& x, int order);
MatrixSeries corner_extract(const MatrixSeries& s);

// Quaternionic counterpart: coefficients (X^M)_{nn} in H; the series form
// embeds each coefficient as a 2x2 block.
std::vector<Quat> psi_H_coeffs(const QMatrix& x, int order);
MatrixSeries psi_H_series(const QMatrix& x, int order);

struct PullbackCheck {
  std::vector<double> complex_route;  // corner sum from the embedded powers
  std::vector<double> quat_route;     // 2 Re (X^M)_nn
  double max_route_gap = 0.0;
  double max_odd_value = 0.0;
};
// Both routes to rtr(X^M E_nn) for M = 0..order, and the odd-power values.
PullbackCheck verify_fmn_pullback(const QMatrix& x, int order);

// Coordinate z_ij^{(M)}(A) = (A_M)_{ij}, indices in {-n..-1, 1..n}.
struct Coord {
  int i = 1, j = 1;
  int ord = 0;
};
cplx coord_value(const MatrixSeries& a, const Coord& c);

// The Poisson bracket of two coordinate functions evaluated at a pointed A:
//   {z_ij^{(M)}, z_kl^{(N)}} =
//     sum_{r=0}^{min(M,N)-1} ( z_kj^{(r)} z_il^{(M+N-1-r)}
//                              - z_kj^{(M+N-1-r)} z_il^{(r)} ).
// Rejects pairs whose combined order M+N-1 exceeds the truncation order.
cplx coord_poisson(const MatrixSeries& a, const Coord& c1, const Coord& c2);

// Defect of the Jacobi identity on three coordinates (Leibniz extension of the
// bracket to the quadratic polynomials it produces).
double jacobi_defect(const MatrixSeries& a, const Coord& c1, const Coord& c2, const Coord& c3);

// Defect of Poisson-Lie multiplicativity at (g, gp):
//   {f1,f2}(g gp) - {L_g f1, L_g f2}(gp) - {R_gp f1, R_gp f2}(g).
double multiplicativity_defect(const MatrixSeries& g, const MatrixSeries& gp, const Coord& c1,
                               const Coord& c2);

// Random element of sp(2n,C): antisymmetrization M - tau(M) over 2.
CMat random_sp_algebra(int n, Rng& rng, double scale = 0.5);

}  // namespace gcm
