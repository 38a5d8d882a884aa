#include "gcmlab/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

#include "gcmlab/errors.hpp"

namespace gcm {

namespace {

constexpr double kPairTol = 1e-8;     // eigenvalue +/- pairing and cluster grouping
constexpr double kSkewTol = 1e-9;     // input membership check
constexpr double kGsSkipTol = 1e-6;   // Gram-Schmidt dependence threshold in zero clusters

Quat col_dot(const QMatrix& m, const std::vector<Quat>& col_w, int col_u) {
  // <u, w> = sum_p conj(u_p) w_p for column u of m against a loose column w.
  Quat s;
  for (int p = 0; p < m.rows(); ++p) s += m(p, col_u).conj() * col_w[p];
  return s;
}

double col_norm(const std::vector<Quat>& w) {
  double s = 0.0;
  for (const Quat& q : w) s += q.norm2();
  return std::sqrt(s);
}

void torus_normalize_column(QMatrix& a, int c) {
  const int n = a.rows();
  double m = 0.0;
  for (int p = 0; p < n; ++p) m = std::max(m, a(p, c).abs());
  if (m == 0.0) return;
  int pstar = 0;
  for (int p = 0; p < n; ++p)
    if (a(p, c).abs() >= m * (1.0 - 1e-9)) {
      pstar = p;
      break;
    }
  const Quat& q = a(pstar, c);
  cplx comp = (std::abs(q.alpha()) >= 1e-8 * q.abs()) ? q.alpha() : q.beta();
  cplx phase = std::conj(comp) / std::abs(comp);
  a.scale_col_right(c, Quat::from_split(phase, 0.0));
}

}  // namespace

void SpectrumRequest::validate() const {
  if (lam.empty()) throw InvalidArgument("spectrum request: need at least one value");
  if (lam.front() > 0.0)
    throw InvalidArgument("spectrum request: values must be nonpositive (chamber order)");
  for (std::size_t i = 0; i + 1 < lam.size(); ++i) {
    if (lam[i] < lam[i + 1])
      throw InvalidArgument("spectrum request: values must be nonincreasing");
    if (strict && lam[i] == lam[i + 1])
      throw InvalidArgument("spectrum request: strict chamber requires distinct values");
  }
}

void torus_normalize_columns(QMatrix& a) {
  for (int c = 0; c < a.cols(); ++c) torus_normalize_column(a, c);
}

OrbitPoint diagonalize(const QMatrix& x) {
  if (x.rows() != x.cols()) throw InvalidArgument("diagonalize: matrix must be square");
  const int n = x.rows();
  const double scale = std::max(1.0, x.max_abs());
  if ((x.adjoint() + x).max_abs() > kSkewTol * scale)
    throw InvalidArgument("diagonalize: matrix is not skew-H-hermitian within tolerance");

  // H = i * embed(X) is hermitian; its eigenvalues h pair as {-mu, mu} and the
  // quaternionic spectrum is lam = -h over the nonnegative-h half, which the
  // ascending solver delivers already in chamber order.
  CMat m = embed_complex(x);
  CMat h = cplx(0, 1) * m;
  h = ((h + h.adjoint()) * 0.5).eval();
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  if (es.info() != Eigen::Success) throw DegenerateInput("diagonalize: eigensolver failed");
  const Eigen::VectorXd& ev = es.eigenvalues();
  const CMat& vec = es.eigenvectors();

  const double hscale = std::max(1.0, std::abs(ev(0)));
  for (int i = 0; i < n; ++i)
    if (std::abs(ev(i) + ev(2 * n - 1 - i)) > kPairTol * hscale)
      throw DegenerateInput("diagonalize: eigenvalues fail to pair within tolerance");

  std::vector<double> lam(n);
  for (int k = 0; k < n; ++k) lam[k] = -ev(n + k);

  // Cluster the selected half by gap; zero clusters draw candidates from the
  // full near-null space (both halves) since the split there is arbitrary.
  std::vector<int> cluster_of(n, 0);
  int nclusters = 1;
  for (int k = 1; k < n; ++k) {
    if (std::abs(ev(n + k) - ev(n + k - 1)) >= kPairTol * hscale) ++nclusters;
    cluster_of[k] = nclusters - 1;
  }
  bool degenerate = false;

  QMatrix a(n, n);
  int next_col = 0;
  for (int cl = 0; cl < nclusters; ++cl) {
    std::vector<int> members;
    for (int k = 0; k < n; ++k)
      if (cluster_of[k] == cl) members.push_back(n + k);
    const int d = static_cast<int>(members.size());
    double cval = 0.0;
    for (int idx : members) cval += ev(idx);
    cval /= d;
    const bool zero_cluster = std::abs(cval) <= kPairTol * hscale;
    if (d > 1 || zero_cluster) degenerate = true;

    std::vector<int> pool = members;
    if (zero_cluster) {
      pool.clear();
      for (int i = 0; i < 2 * n; ++i)
        if (std::abs(ev(i)) <= kPairTol * hscale) pool.push_back(i);
    }

    int accepted = 0;
    for (int idx : pool) {
      if (accepted == d) break;
      std::vector<Quat> w(n);
      for (int p = 1; p <= n; ++p)
        w[p - 1] = Quat::from_split(vec(pos(n, p), idx), vec(pos(n, -p), idx));
      // Orthogonalize against this cluster's accepted columns; across distinct
      // eigenvalues orthogonality is automatic.
      for (int c = next_col; c < next_col + accepted; ++c) {
        Quat ip = col_dot(a, w, c);
        for (int p = 0; p < n; ++p) w[p] -= a(p, c) * ip;
      }
      double nrm = col_norm(w);
      if (zero_cluster && nrm <= kGsSkipTol) continue;  // H-dependent candidate
      if (nrm <= kGsSkipTol)
        throw DegenerateInput("diagonalize: eigenvector cluster lost rank");
      for (int p = 0; p < n; ++p) a(p, next_col + accepted) = w[p] * (1.0 / nrm);
      ++accepted;
    }
    if (accepted != d)
      throw DegenerateInput("diagonalize: could not extract a full quaternionic eigenbasis");
    next_col += d;
  }

  torus_normalize_columns(a);
  return OrbitPoint{x, std::move(a), std::move(lam), degenerate};
}

QMatrix random_unitary(int n, Rng& rng) {
  QMatrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      g(r, c) = Quat(rng.gauss(), rng.gauss(), rng.gauss(), rng.gauss());
  // Column Gram-Schmidt over H (projection coefficients multiply on the right).
  for (int c = 0; c < n; ++c) {
    std::vector<Quat> w(n);
    for (int p = 0; p < n; ++p) w[p] = g(p, c);
    for (int u = 0; u < c; ++u) {
      Quat ip = col_dot(g, w, u);
      for (int p = 0; p < n; ++p) w[p] -= g(p, u) * ip;
    }
    double nrm = col_norm(w);
    if (nrm < 1e-8) return random_unitary(n, rng);  // essentially measure-zero
    for (int p = 0; p < n; ++p) g(p, c) = w[p] * (1.0 / nrm);
  }
  return g;
}

OrbitPoint random_orbit_point(const SpectrumRequest& req, Rng& rng) {
  req.validate();
  const int n = static_cast<int>(req.lam.size());
  QMatrix a = random_unitary(n, rng);
  torus_normalize_columns(a);
  QMatrix d(n, n);
  for (int p = 0; p < n; ++p) d(p, p) = Quat(0, req.lam[p], 0, 0);
  QMatrix x = a * d * a.adjoint();
  x = (x - x.adjoint()) * 0.5;  // strip hermitian roundoff
  bool degenerate = false;
  for (int p = 0; p + 1 < n; ++p)
    if (req.lam[p] == req.lam[p + 1]) degenerate = true;
  if (!req.lam.empty() && req.lam.back() == 0.0) degenerate = true;
  return OrbitPoint{std::move(x), std::move(a), req.lam, degenerate};
}

OrbitPoint sample_generic_orbit(const SpectrumRequest& req, Rng& rng, double min_gap) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    OrbitPoint pt = random_orbit_point(req, rng);
    if (req.lam.size() > 1 && min_nested_gap(pt.X) < min_gap) continue;
    return pt;
  }
  throw DegenerateInput("sampling: could not find a point clear of block-spectrum coalescence");
}

QMatrix upper_left_block(const QMatrix& x, int m) {
  if (m < 1 || m > x.rows() || m > x.cols())
    throw InvalidArgument("upper_left_block: size out of range");
  QMatrix b(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) b(r, c) = x(r, c);
  return b;
}

std::vector<double> block_spectrum(const QMatrix& x, int m) {
  QMatrix b = upper_left_block(x, m);
  CMat h = cplx(0, 1) * embed_complex(b);
  h = ((h + h.adjoint()) * 0.5).eval();
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw DegenerateInput("block_spectrum: eigensolver failed");
  std::vector<double> mu(m);
  for (int k = 0; k < m; ++k) mu[k] = -es.eigenvalues()(m + k);
  return mu;
}

double min_nested_gap(const QMatrix& x) {
  double g = std::numeric_limits<double>::infinity();
  for (int m = 1; m < x.rows(); ++m) {
    std::vector<double> mu = block_spectrum(x, m);
    for (std::size_t i = 0; i < mu.size(); ++i) {
      g = std::min(g, 2.0 * std::abs(mu[i]));
      if (i + 1 < mu.size()) g = std::min(g, std::abs(mu[i] - mu[i + 1]));
    }
  }
  return g;
}

}  // namespace gcm
