#pragma once

#include <vector>

#include "gcmlab/complex_embed.hpp"
#include "gcmlab/quat.hpp"
#include "gcmlab/rng.hpp"

namespace gcm {

// Target spectrum for orbit sampling, listed in the chamber order
// 0 >= lam[0] >= lam[1] >= ... ; strict additionally requires all values
// distinct (the generic-orbit regime).
struct SpectrumRequest {
  std::vector<double> lam;
  bool strict = true;

  void validate() const;  // throws InvalidArgument
};

// A diagonalized point X = A D A* with D = diag(i*lam[0], ..., i*lam[n-1]).
// Columns of A follow the torus convention: each is rotated by the right unit
// complex phase that makes its first entry of maximal modulus real-positive in
// its C-component (falling back to the j C-component when the C-component of
// that entry nearly vanishes). degenerate flags clustered or zero eigenvalues.
struct OrbitPoint {
  QMatrix X;
  QMatrix A;
  std::vector<double> lam;
  bool degenerate = false;
};

// Spectral decomposition of a skew-H-hermitian matrix through the complex
// embedding: eigenvalues of embed_complex(X) come in pairs (i*mu, -i*mu); the
// nonpositive half is the quaternionic spectrum and its eigenvectors, read back
// through the complex split, are the quaternionic columns. Near-degenerate
// clusters (gap below 1e-8 * scale) are orthonormalized together and flagged.
// Throws InvalidArgument for non-square/non-skew input and DegenerateInput when
// the +/- pairing fails beyond tolerance.
OrbitPoint diagonalize(const QMatrix& x);

// Haar-like unitary: Gaussian quaternion entries, then column Gram-Schmidt.
QMatrix random_unitary(int n, Rng& rng);

// A D_lam A* for a random unitary A (columns torus-normalized).
OrbitPoint random_orbit_point(const SpectrumRequest& req, Rng& rng);

// random_orbit_point, resampled (up to 50 draws) until the nested-block
// spectra stay at least min_gap apart; throws DegenerateInput on exhaustion.
// The gap filter is skipped for n = 1, which has no nested blocks.
OrbitPoint sample_generic_orbit(const SpectrumRequest& req, Rng& rng, double min_gap);

// Upper-left m x m block.
QMatrix upper_left_block(const QMatrix& x, int m);

// Quaternionic spectrum of the upper-left m x m block, chamber order.
std::vector<double> block_spectrum(const QMatrix& x, int m);

// Smallest spectral separation over the nested blocks of size 1..n-1:
// consecutive gaps within each block spectrum and each value's distance to its
// mirror image (2|mu|). Used to resample points too close to a coalescence for
// finite differencing.
double min_nested_gap(const QMatrix& x);

// Applies the torus convention to every column in place.
void torus_normalize_columns(QMatrix& a);

}  // namespace gcm
