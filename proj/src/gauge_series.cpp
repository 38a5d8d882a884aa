#include "gcmlab/gauge_series.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "gcmlab/errors.hpp"

namespace gcm {

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return b;
}

void require_same_shape(const MatrixSeries& a, const MatrixSeries& b, const char* op) {
  if (a.dim() != b.dim() || a.order() != b.order())
    throw InvalidArgument(std::string(op) + ": series shapes differ");
}

CMat random_cmat(int rows, int cols, Rng& rng, double scale) {
  CMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = cplx(rng.gauss() * scale, rng.gauss() * scale);
  return m;
}

}  // namespace

MatrixSeries::MatrixSeries(int dim, int order) : dim_(dim), order_(order) {
  if (dim < 1 || order < 0) throw InvalidArgument("MatrixSeries: dim must be >= 1, order >= 0");
  c_.assign(static_cast<std::size_t>(order) + 1, CMat::Zero(dim, dim));
}

MatrixSeries MatrixSeries::identity(int dim, int order) {
  MatrixSeries s(dim, order);
  s.c_[0] = CMat::Identity(dim, dim);
  return s;
}

MatrixSeries MatrixSeries::constant(const CMat& c0, int order) {
  if (c0.rows() != c0.cols() || c0.rows() < 1)
    throw InvalidArgument("MatrixSeries::constant: square matrix required");
  MatrixSeries s(static_cast<int>(c0.rows()), order);
  s.c_[0] = c0;
  return s;
}

MatrixSeries MatrixSeries::operator+(const MatrixSeries& o) const {
  require_same_shape(*this, o, "series add");
  MatrixSeries r(dim_, order_);
  for (int m = 0; m <= order_; ++m) r.coeff(m) = coeff(m) + o.coeff(m);
  return r;
}

MatrixSeries MatrixSeries::operator-(const MatrixSeries& o) const {
  require_same_shape(*this, o, "series sub");
  MatrixSeries r(dim_, order_);
  for (int m = 0; m <= order_; ++m) r.coeff(m) = coeff(m) - o.coeff(m);
  return r;
}

MatrixSeries MatrixSeries::operator*(const MatrixSeries& o) const {
  require_same_shape(*this, o, "series mul");
  MatrixSeries r(dim_, order_);
  for (int m = 0; m <= order_; ++m)
    for (int k = 0; k <= m; ++k) r.coeff(m) += coeff(k) * o.coeff(m - k);
  return r;
}

MatrixSeries MatrixSeries::inverse() const {
  Eigen::FullPivLU<CMat> lu(coeff(0));
  if (!lu.isInvertible())
    throw DegenerateInput("series inverse: constant coefficient is singular");
  const CMat b0 = lu.inverse();
  MatrixSeries r(dim_, order_);
  r.coeff(0) = b0;
  for (int m = 1; m <= order_; ++m) {
    CMat acc = CMat::Zero(dim_, dim_);
    for (int k = 1; k <= m; ++k) acc += coeff(k) * r.coeff(m - k);
    r.coeff(m) = -b0 * acc;
  }
  return r;
}

MatrixSeries MatrixSeries::shifted(cplx a) const {
  MatrixSeries r(dim_, order_);
  r.coeff(0) = coeff(0);
  // (u+a)^{-L} = sum_r (-1)^r binom(L+r-1, r) a^r u^{-(L+r)}
  for (int L = 1; L <= order_; ++L) {
    cplx apow(1.0, 0.0);
    double sign = 1.0;
    for (int rr = 0; L + rr <= order_; ++rr) {
      r.coeff(L + rr) += (sign * binom(L + rr - 1, rr)) * apow * coeff(L);
      apow *= a;
      sign = -sign;
    }
  }
  return r;
}

MatrixSeries MatrixSeries::neg_arg() const {
  MatrixSeries r(dim_, order_);
  for (int m = 0; m <= order_; ++m) r.coeff(m) = (m % 2 == 0 ? 1.0 : -1.0) * coeff(m);
  return r;
}

MatrixSeries MatrixSeries::transposed() const {
  MatrixSeries r(dim_, order_);
  for (int m = 0; m <= order_; ++m) r.coeff(m) = coeff(m).transpose();
  return r;
}

MatrixSeries MatrixSeries::sympl_transposed() const {
  MatrixSeries r(dim_, order_);
  for (int m = 0; m <= order_; ++m) r.coeff(m) = symplectic_transpose(coeff(m));
  return r;
}

double MatrixSeries::max_abs() const {
  double v = 0.0;
  for (const CMat& c : c_) v = std::max(v, c.cwiseAbs().maxCoeff());
  return v;
}

double MatrixSeries::dist(const MatrixSeries& o) const {
  require_same_shape(*this, o, "series dist");
  double v = 0.0;
  for (int m = 0; m <= order_; ++m)
    v = std::max(v, (coeff(m) - o.coeff(m)).cwiseAbs().maxCoeff());
  return v;
}

bool MatrixSeries::is_pointed(double tol) const {
  return (coeff(0) - CMat::Identity(dim_, dim_)).cwiseAbs().maxCoeff() <= tol;
}

MatrixSeries sigma_map(const MatrixSeries& a) {
  const CMat q = q_form(a.dim() / 2);
  MatrixSeries inner = a.neg_arg().transposed().inverse();
  MatrixSeries r(a.dim(), a.order());
  for (int m = 0; m <= a.order(); ++m) r.coeff(m) = -q * inner.coeff(m) * q;  // Q^{-1} = -Q
  return r;
}

MatrixSeries s_map(const MatrixSeries& a) { return a * a.neg_arg().sympl_transposed(); }

bool is_in_H(const MatrixSeries& a, double tol) {
  return s_map(a).dist(MatrixSeries::identity(a.dim(), a.order())) <= tol;
}

MatrixSeries random_pointed(int dim, int order, Rng& rng, double scale) {
  MatrixSeries a = MatrixSeries::identity(dim, order);
  for (int m = 1; m <= order; ++m) a.coeff(m) = random_cmat(dim, dim, rng, scale);
  return a;
}

namespace {

// Reduced order-M right-hand side of C(u)^t Q C(-u) = Phi given C_1..C_{M-1}:
// R = Phi_M - sum_{k+l=M, k,l>=1} (-1)^l C_k^t Q C_l, to be matched by
// -Y^t + (-1)^M Y with Y = Q C_M.
CMat reduced_rhs(const MatrixSeries& c, const CMat& q, const CMat& phi_m, int m) {
  CMat r = phi_m;
  for (int k = 1; k <= m - 1; ++k) {
    const int l = m - k;
    const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
    r -= sgn * c.coeff(k).transpose() * q * c.coeff(l);
  }
  return r;
}

double parity_defect(const CMat& r, int m) {
  // Odd m needs R symmetric, even m needs R antisymmetric.
  if (m % 2 == 1) return (r - r.transpose()).cwiseAbs().maxCoeff();
  return (r + r.transpose()).cwiseAbs().maxCoeff();
}

CMat solve_order(const CMat& r, const CMat& q, int m) {
  const CMat y = (m % 2 == 1) ? CMat(-0.5 * r) : CMat(0.5 * r);
  return -q * y;  // C_M = Q^{-1} Y
}

}  // namespace

MatrixSeries sample_H_element(int dim, int order, Rng& rng, double scale) {
  if (dim < 2 || dim % 2 != 0) throw InvalidArgument("sample_H_element: dim must be even");
  const CMat q = q_form(dim / 2);
  MatrixSeries c = MatrixSeries::identity(dim, order);
  for (int m = 1; m <= order; ++m) {
    const CMat r = reduced_rhs(c, q, CMat::Zero(dim, dim), m);
    const CMat g = random_cmat(dim, dim, rng, scale);
    // Free homogeneous part: antisymmetric Y for odd m, symmetric for even m.
    const CMat w = (m % 2 == 1) ? CMat(0.5 * (g - g.transpose())) : CMat(0.5 * (g + g.transpose()));
    c.coeff(m) = solve_order(r, q, m) + (-q * w);
  }
  return c;
}

SkewPairingSeries SkewPairingSeries::checked(MatrixSeries phi, double tol) {
  if (phi.dim() < 2 || phi.dim() % 2 != 0)
    throw InvalidArgument("skew pairing: dim must be even");
  const double scale = std::max(1.0, phi.max_abs());
  const CMat q = q_form(phi.dim() / 2);
  if ((phi.coeff(0) - q).cwiseAbs().maxCoeff() > tol * scale)
    throw DegenerateInput("skew pairing: order 0 coefficient is not Q");
  for (int m = 1; m <= phi.order(); ++m) {
    const CMat& pm = phi.coeff(m);
    const double defect = (m % 2 == 1) ? (pm - pm.transpose()).cwiseAbs().maxCoeff()
                                       : (pm + pm.transpose()).cwiseAbs().maxCoeff();
    if (defect > tol * scale)
      throw DegenerateInput("skew pairing: parity violated at order " + std::to_string(m));
  }
  return SkewPairingSeries{std::move(phi)};
}

SkewPairingSeries pairing_action(const MatrixSeries& b, const SkewPairingSeries& phi) {
  require_same_shape(b, phi.phi, "pairing action");
  if (!b.is_pointed(1e-9)) throw InvalidArgument("pairing action: series must be pointed");
  const MatrixSeries binv = b.inverse();
  MatrixSeries out = binv.transposed() * phi.phi * binv.neg_arg();
  return SkewPairingSeries::checked(std::move(out));
}

MatrixSeries skew_factorize(const SkewPairingSeries& phi) {
  const MatrixSeries& p = phi.phi;
  const int dim = p.dim();
  const CMat q = q_form(dim / 2);
  const double scale = std::max(1.0, p.max_abs());
  MatrixSeries c = MatrixSeries::identity(dim, p.order());
  for (int m = 1; m <= p.order(); ++m) {
    const CMat r = reduced_rhs(c, q, p.coeff(m), m);
    if (parity_defect(r, m) > 1e-9 * scale)
      throw DegenerateInput("skew factorization: reduced term has wrong parity at order " +
                            std::to_string(m));
    c.coeff(m) = solve_order(r, q, m);
  }
  return c;
}

MatrixSeries aut_mult_g(const MatrixSeries& a, const std::vector<cplx>& g, double h) {
  MatrixSeries r(a.dim(), a.order());
  for (int m = 0; m <= a.order(); ++m) {
    r.coeff(m) = a.coeff(m);  // k = 0 term of the scalar factor
    double hp = h;
    for (int k = 1; k <= m && k <= static_cast<int>(g.size()); ++k) {
      r.coeff(m) += (g[static_cast<std::size_t>(k) - 1] * hp) * a.coeff(m - k);
      hp *= h;
    }
  }
  return r;
}

MatrixSeries aut_shift(const MatrixSeries& a, cplx shift, double h) { return a.shifted(shift * h); }

MatrixSeries aut_inv(const MatrixSeries& a) { return a.neg_arg().inverse(); }

MatrixSeries aut_bar_tau(const MatrixSeries& a) { return a.neg_arg().sympl_transposed(); }

MatrixSeries psi_hat(const MatrixSeries& a, const std::vector<cplx>& g, double h) {
  const cplx n_shift(static_cast<double>(a.dim() / 2), 0.0);
  return aut_shift(aut_bar_tau(aut_inv(aut_mult_g(a, g, h))), n_shift, h);
}

CoordinateDeformation CoordinateDeformation::mult_g(const std::vector<cplx>& g, int order) {
  CoordinateDeformation d;
  d.order = order;
  d.terms.resize(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) {
    d.terms[static_cast<std::size_t>(m)].push_back({cplx(1.0, 0.0), 0, m});
    for (int k = 1; k <= m && k <= static_cast<int>(g.size()); ++k)
      d.terms[static_cast<std::size_t>(m)].push_back({g[static_cast<std::size_t>(k) - 1], k, m - k});
  }
  return d;
}

CoordinateDeformation CoordinateDeformation::shift(cplx a, int order) {
  CoordinateDeformation d;
  d.order = order;
  d.terms.resize(static_cast<std::size_t>(order) + 1);
  d.terms[0].push_back({cplx(1.0, 0.0), 0, 0});
  for (int m = 1; m <= order; ++m)
    for (int L = 1; L <= m; ++L) {
      const int rr = m - L;
      const double sign = (rr % 2 == 0) ? 1.0 : -1.0;
      cplx apow(1.0, 0.0);
      for (int t = 0; t < rr; ++t) apow *= a;
      d.terms[static_cast<std::size_t>(m)].push_back({sign * binom(m - 1, rr) * apow, rr, L});
    }
  return d;
}

MatrixSeries CoordinateDeformation::apply(const MatrixSeries& a, double h) const {
  if (a.order() != order) throw InvalidArgument("deformation apply: order mismatch");
  MatrixSeries r(a.dim(), a.order());
  for (int m = 0; m <= order; ++m)
    for (const DeformationTerm& t : terms[static_cast<std::size_t>(m)]) {
      double hp = 1.0;
      for (int i = 0; i < t.h_power; ++i) hp *= h;
      r.coeff(m) += (t.coeff * hp) * a.coeff(t.src_order);
    }
  return r;
}

MatrixSeries psi0_corner(const CMat& x, int order) {
  const int d = static_cast<int>(x.rows());
  if (x.cols() != d || d < 2) throw InvalidArgument("psi0_corner: square matrix of dim >= 2 required");
  MatrixSeries r(2, order);
  CMat p = CMat::Identity(d, d);
  for (int m = 0; m <= order; ++m) {
    if (m > 0) p = p * x;
    CMat c(2, 2);
    c << p(0, 0), p(0, d - 1), p(d - 1, 0), p(d - 1, d - 1);
    r.coeff(m) = c;
  }
  return r;
}

MatrixSeries corner_extract(const MatrixSeries& s) {
  const int d = s.dim();
  MatrixSeries r(2, s.order());
  for (int m = 0; m <= s.order(); ++m) {
    CMat c(2, 2);
    c << s.coeff(m)(0, 0), s.coeff(m)(0, d - 1), s.coeff(m)(d - 1, 0), s.coeff(m)(d - 1, d - 1);
    r.coeff(m) = c;
  }
  return r;
}

MatrixSeries psi_chain(const CMat& x, int order) {
  const int d = static_cast<int>(x.rows());
  if (x.cols() != d || d < 2) throw InvalidArgument("psi_chain: square matrix of dim >= 2 required");
  MatrixSeries s = MatrixSeries::identity(d, order);
  if (order >= 1) s.coeff(1) = x;
  return corner_extract(s.neg_arg().inverse());
}

std::vector<Quat> psi_H_coeffs(const QMatrix& x, int order) {
  const int n = x.rows();
  std::vector<Quat> out(static_cast<std::size_t>(order) + 1);
  QMatrix p = QMatrix::identity(n);
  for (int m = 0; m <= order; ++m) {
    if (m > 0) p = p * x;
    out[static_cast<std::size_t>(m)] = p(n - 1, n - 1);
  }
  return out;
}

MatrixSeries psi_H_series(const QMatrix& x, int order) {
  const std::vector<Quat> coeffs = psi_H_coeffs(x, order);
  MatrixSeries r(2, order);
  for (int m = 0; m <= order; ++m) {
    QMatrix one(1, 1);
    one(0, 0) = coeffs[static_cast<std::size_t>(m)];
    r.coeff(m) = embed_complex(one);
  }
  return r;
}

PullbackCheck verify_fmn_pullback(const QMatrix& x, int order) {
  const CMat e = embed_complex(x);
  const int d = static_cast<int>(e.rows());
  const std::vector<Quat> hq = psi_H_coeffs(x, order);
  PullbackCheck out;
  out.complex_route.resize(static_cast<std::size_t>(order) + 1);
  out.quat_route.resize(static_cast<std::size_t>(order) + 1);
  CMat p = CMat::Identity(d, d);
  for (int m = 0; m <= order; ++m) {
    if (m > 0) p = p * e;
    const cplx csum = p(0, 0) + p(d - 1, d - 1);
    const double qval = 2.0 * hq[static_cast<std::size_t>(m)].re;
    out.complex_route[static_cast<std::size_t>(m)] = csum.real();
    out.quat_route[static_cast<std::size_t>(m)] = qval;
    out.max_route_gap = std::max(out.max_route_gap, std::abs(csum - cplx(qval, 0.0)));
    if (m % 2 == 1)
      out.max_odd_value = std::max({out.max_odd_value, std::abs(csum), std::abs(qval)});
  }
  return out;
}

namespace {

int coord_pos(const MatrixSeries& a, int idx) {
  const int n = a.dim() / 2;
  if (idx == 0 || idx < -n || idx > n)
    throw InvalidArgument("coordinate index out of range");
  return pos(n, idx);
}

void require_pointed(const MatrixSeries& a, const char* op) {
  if (a.dim() % 2 != 0) throw InvalidArgument(std::string(op) + ": dim must be even");
  if (!a.is_pointed(1e-9)) throw InvalidArgument(std::string(op) + ": series must be pointed");
}

cplx coord_raw(const MatrixSeries& a, int i, int j, int ord) {
  if (ord < 0 || ord > a.order())
    throw InvalidArgument("coordinate order exceeds the truncation order");
  return a.coeff(ord)(coord_pos(a, i), coord_pos(a, j));
}

// Symbolic quadratic expansion used for the Jacobi check.
struct Monomial {
  cplx coeff;
  std::vector<Coord> factors;
};
using Poly = std::vector<Monomial>;

Poly bracket_coord_coord(const Coord& c1, const Coord& c2) {
  Poly out;
  const int top = std::min(c1.ord, c2.ord);
  for (int r = 0; r < top; ++r) {
    const int s = c1.ord + c2.ord - 1 - r;
    out.push_back({cplx(1.0, 0.0), {Coord{c2.i, c1.j, r}, Coord{c1.i, c2.j, s}}});
    out.push_back({cplx(-1.0, 0.0), {Coord{c2.i, c1.j, s}, Coord{c1.i, c2.j, r}}});
  }
  return out;
}

Poly bracket_coord_poly(const Coord& c, const Poly& p) {
  Poly out;
  for (const Monomial& mono : p) {
    for (std::size_t t = 0; t < mono.factors.size(); ++t) {
      const Poly inner = bracket_coord_coord(c, mono.factors[t]);
      for (const Monomial& im : inner) {
        Monomial nm;
        nm.coeff = mono.coeff * im.coeff;
        for (std::size_t s = 0; s < mono.factors.size(); ++s)
          if (s != t) nm.factors.push_back(mono.factors[s]);
        nm.factors.insert(nm.factors.end(), im.factors.begin(), im.factors.end());
        out.push_back(std::move(nm));
      }
    }
  }
  return out;
}

cplx eval_poly(const MatrixSeries& a, const Poly& p) {
  cplx v(0.0, 0.0);
  for (const Monomial& mono : p) {
    cplx term = mono.coeff;
    for (const Coord& c : mono.factors) term *= coord_raw(a, c.i, c.j, c.ord);
    v += term;
  }
  return v;
}

std::vector<int> index_values(int n) {
  std::vector<int> v;
  for (int i = -n; i <= n; ++i)
    if (i != 0) v.push_back(i);
  return v;
}

}  // namespace

cplx coord_value(const MatrixSeries& a, const Coord& c) {
  if (a.dim() % 2 != 0) throw InvalidArgument("coord_value: dim must be even");
  return coord_raw(a, c.i, c.j, c.ord);
}

cplx coord_poisson(const MatrixSeries& a, const Coord& c1, const Coord& c2) {
  require_pointed(a, "coord_poisson");
  if (c1.ord < 0 || c2.ord < 0) throw InvalidArgument("coord_poisson: negative order");
  if (c1.ord + c2.ord - 1 > a.order())
    throw InvalidArgument("coord_poisson: combined order exceeds the truncation order");
  return eval_poly(a, bracket_coord_coord(c1, c2));
}

double jacobi_defect(const MatrixSeries& a, const Coord& c1, const Coord& c2, const Coord& c3) {
  require_pointed(a, "jacobi_defect");
  if (c1.ord + c2.ord + c3.ord - 2 > a.order())
    throw InvalidArgument("jacobi_defect: combined order exceeds the truncation order");
  const cplx j1 = eval_poly(a, bracket_coord_poly(c1, bracket_coord_coord(c2, c3)));
  const cplx j2 = eval_poly(a, bracket_coord_poly(c2, bracket_coord_coord(c3, c1)));
  const cplx j3 = eval_poly(a, bracket_coord_poly(c3, bracket_coord_coord(c1, c2)));
  return std::abs(j1 + j2 + j3);
}

double multiplicativity_defect(const MatrixSeries& g, const MatrixSeries& gp, const Coord& c1,
                               const Coord& c2) {
  require_same_shape(g, gp, "multiplicativity");
  require_pointed(g, "multiplicativity");
  require_pointed(gp, "multiplicativity");
  const cplx lhs = coord_poisson(g * gp, c1, c2);
  const std::vector<int> idx = index_values(g.dim() / 2);

  // L_g pullback: z_ij^{(M)}(g h) = sum_{Q,a} g_{M-Q}[i,a] z_aj^{(Q)}(h).
  cplx left(0.0, 0.0);
  for (int qo = 0; qo <= c1.ord; ++qo)
    for (int ro = 0; ro <= c2.ord; ++ro)
      for (int av : idx)
        for (int bv : idx) {
          const cplx w = coord_raw(g, c1.i, av, c1.ord - qo) * coord_raw(g, c2.i, bv, c2.ord - ro);
          if (std::abs(w) == 0.0) continue;
          left += w * coord_poisson(gp, Coord{av, c1.j, qo}, Coord{bv, c2.j, ro});
        }

  // R_gp pullback: z_ij^{(M)}(h gp) = sum_{Q,a} z_ia^{(Q)}(h) gp_{M-Q}[a,j].
  cplx right(0.0, 0.0);
  for (int qo = 0; qo <= c1.ord; ++qo)
    for (int ro = 0; ro <= c2.ord; ++ro)
      for (int av : idx)
        for (int bv : idx) {
          const cplx w = coord_raw(gp, av, c1.j, c1.ord - qo) * coord_raw(gp, bv, c2.j, c2.ord - ro);
          if (std::abs(w) == 0.0) continue;
          right += w * coord_poisson(g, Coord{c1.i, av, qo}, Coord{c2.i, bv, ro});
        }

  return std::abs(lhs - left - right);
}

CMat random_sp_algebra(int n, Rng& rng, double scale) {
  if (n < 1) throw InvalidArgument("random_sp_algebra: n must be >= 1");
  const CMat g = random_cmat(2 * n, 2 * n, rng, scale);
  return 0.5 * (g - symplectic_transpose(g));
}

}  // namespace gcm
