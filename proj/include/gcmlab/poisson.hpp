#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gcmlab/quat.hpp"

namespace gcm {

// Orthonormal basis of u(n,H) under the invariant pairing <X,Y> = -rtr(XY).
// 2n^2 + n elements: i,j,k times E_pp on the diagonal (scaled 1/sqrt(2)) and,
// for p < q and w in {1,i,j,k}, w at (p,q) with -conj(w) at (q,p) (scaled 1/2).
struct LieAlgebraBasis {
  int n = 0;
  std::vector<QMatrix> elems;

  static LieAlgebraBasis standard(int n);
  int dim() const { return static_cast<int>(elems.size()); }
};

using ScalarField = std::function<double(const QMatrix&)>;

// Central-difference coordinates of the pairing gradient: the matrix G with
// <G, B> = df(X)[B] for every basis element B; step is fd_step * (1 + |X|_F).
std::vector<double> gradient_coords(const ScalarField& f, const QMatrix& x,
                                    const LieAlgebraBasis& basis, double fd_step);

QMatrix from_coords(const LieAlgebraBasis& basis, const std::vector<double>& coords);

QMatrix gradient(const ScalarField& f, const QMatrix& x, const LieAlgebraBasis& basis,
                 double fd_step);

// Lie-Poisson bracket {f,g}(X) = rtr(X [grad f, grad g]).
double poisson_bracket(const ScalarField& f, const ScalarField& g, const QMatrix& x,
                       const LieAlgebraBasis& basis, double fd_step);

// Same bracket from precomputed gradients.
double poisson_bracket_from_gradients(const QMatrix& x, const QMatrix& gf, const QMatrix& gg);

struct CertifyOptions {
  std::vector<double> lambda;      // chamber order, strict
  int trials = 20;
  double tol = 2e-5;               // commutativity threshold
  double fd_step = 1e-5;
  std::uint64_t seed = 7;
  double min_gap = 1e-4;           // resample points with nested-block gaps below this
  double rank_rel_threshold = 1e-6;  // singular values count when > threshold * sigma_max
  int max_resample = 50;
};

struct CommuteReport {
  std::vector<std::string> labels;
  std::map<std::string, double> max_abs_bracket;  // "label1|label2" -> max over trials
  std::string worst_pair;
  double worst_value = 0.0;
  bool pass = false;
};

struct IndependenceReport {
  std::vector<std::vector<double>> singular_values;  // per trial, descending
  std::vector<int> ranks;
  int expected_rank = 0;
  bool pass = false;
};

// Max |{f_i, f_j}| over all family pairs at `trials` random orbit points.
CommuteReport certify_commutativity(const CertifyOptions& opt);

// Rank of the stacked gradient coordinates of all n^2 members at each point.
IndependenceReport certify_independence(const CertifyOptions& opt);

}  // namespace gcm
