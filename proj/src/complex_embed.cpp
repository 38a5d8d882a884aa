#include "gcmlab/complex_embed.hpp"

#include <cmath>
#include <cstdlib>

#include "gcmlab/errors.hpp"

namespace gcm {

CMat embed_complex(const QMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("embed_complex: matrix must be square");
  const int n = a.rows();
  CMat m = CMat::Zero(2 * n, 2 * n);
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      const Quat& x = a(p - 1, q - 1);
      cplx al = x.alpha(), be = x.beta();
      m(pos(n, p), pos(n, q)) = al;
      m(pos(n, -p), pos(n, -q)) = std::conj(al);
      m(pos(n, -p), pos(n, q)) = be;
      m(pos(n, p), pos(n, -q)) = -std::conj(be);
    }
  return m;
}

QMatrix unembed_complex(const CMat& m, double tol) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw InvalidArgument("unembed_complex: need an even-dimensional square matrix");
  const int n = static_cast<int>(m.rows()) / 2;
  QMatrix a(n, n);
  double defect = 0.0;
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      cplx al = m(pos(n, p), pos(n, q));
      cplx be = m(pos(n, -p), pos(n, q));
      defect = std::max(defect, std::abs(m(pos(n, -p), pos(n, -q)) - std::conj(al)));
      defect = std::max(defect, std::abs(m(pos(n, p), pos(n, -q)) + std::conj(be)));
      a(p - 1, q - 1) = Quat::from_split(al, be);
    }
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (defect > tol * scale)
    throw DegenerateInput("unembed_complex: matrix is not in the image of the embedding");
  return a;
}

CMat q_form(int n) {
  CMat q = CMat::Zero(2 * n, 2 * n);
  for (int c = 1; c <= n; ++c) {
    q(pos(n, -c), pos(n, c)) = 1.0;
    q(pos(n, c), pos(n, -c)) = -1.0;
  }
  return q;
}

CMat symplectic_transpose(const CMat& a) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0)
    throw InvalidArgument("symplectic_transpose: need an even-dimensional square matrix");
  CMat q = q_form(static_cast<int>(a.rows()) / 2);
  return -q * a.transpose() * q;
}

CMat sp_basis_element(int n, int i, int j) {
  if (i == 0 || j == 0 || std::abs(i) > n || std::abs(j) > n)
    throw InvalidArgument("sp_basis_element: indices must lie in {-n..-1, 1..n}");
  CMat m = CMat::Zero(2 * n, 2 * n);
  double sgn = ((i > 0) == (j > 0)) ? 1.0 : -1.0;
  m(pos(n, i), pos(n, j)) += 1.0;
  m(pos(n, -j), pos(n, -i)) -= sgn;
  return m;
}

bool is_sp_group(const CMat& a, double tol) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0) return false;
  CMat q = q_form(static_cast<int>(a.rows()) / 2);
  return (a.transpose() * q * a - q).cwiseAbs().maxCoeff() <= tol;
}

bool is_sp_algebra(const CMat& a, double tol) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0) return false;
  CMat q = q_form(static_cast<int>(a.rows()) / 2);
  return (a.transpose() * q + q * a).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary_c(const CMat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  CMat d = a.adjoint() * a - CMat::Identity(a.rows(), a.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

CMat expm(const CMat& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("expm: matrix must be square");
  double nrm = a.cwiseAbs().maxCoeff() * a.rows();
  int s = 0;
  while (nrm > 0.5 && s < 40) {
    nrm *= 0.5;
    ++s;
  }
  CMat b = a / std::pow(2.0, s);
  CMat sum = CMat::Identity(a.rows(), a.cols());
  CMat term = sum;
  for (int m = 1; m <= 24; ++m) {
    term = (term * b) / static_cast<double>(m);
    sum += term;
  }
  for (int t = 0; t < s; ++t) sum = sum * sum;
  return sum;
}

}  // namespace gcm
