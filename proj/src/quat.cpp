#include "gcmlab/quat.hpp"

#include <algorithm>
#include <cassert>

namespace gcm {

QMatrix QMatrix::operator+(const QMatrix& o) const {
  assert(r_ == o.r_ && c_ == o.c_);
  QMatrix m(r_, c_);
  for (std::size_t t = 0; t < a_.size(); ++t) m.a_[t] = a_[t] + o.a_[t];
  return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  assert(r_ == o.r_ && c_ == o.c_);
  QMatrix m(r_, c_);
  for (std::size_t t = 0; t < a_.size(); ++t) m.a_[t] = a_[t] - o.a_[t];
  return m;
}

QMatrix QMatrix::operator-() const {
  QMatrix m(r_, c_);
  for (std::size_t t = 0; t < a_.size(); ++t) m.a_[t] = -a_[t];
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  assert(c_ == o.r_);
  QMatrix m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int l = 0; l < c_; ++l) {
      const Quat& x = (*this)(i, l);
      if (x.norm2() == 0.0) continue;
      for (int j = 0; j < o.c_; ++j) m(i, j) += x * o(l, j);
    }
  return m;
}

QMatrix QMatrix::operator*(double s) const {
  QMatrix m(r_, c_);
  for (std::size_t t = 0; t < a_.size(); ++t) m.a_[t] = a_[t] * s;
  return m;
}

QMatrix QMatrix::adjoint() const {
  QMatrix m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j).conj();
  return m;
}

void QMatrix::scale_col_right(int c, const Quat& q) {
  for (int i = 0; i < r_; ++i) (*this)(i, c) = (*this)(i, c) * q;
}

double QMatrix::max_abs() const {
  double m = 0.0;
  for (const Quat& q : a_) m = std::max(m, q.abs());
  return m;
}

double QMatrix::frob_norm() const {
  double s = 0.0;
  for (const Quat& q : a_) s += q.norm2();
  return std::sqrt(s);
}

double rtr(const QMatrix& a) {
  assert(a.rows() == a.cols());
  double s = 0.0;
  for (int p = 0; p < a.rows(); ++p) s += a(p, p).re;
  return 2.0 * s;
}

double rtr_prod(const QMatrix& a, const QMatrix& b) {
  assert(a.cols() == b.rows() && a.rows() == b.cols());
  // Re(xy) needs only the four diagonal products of components.
  double s = 0.0;
  for (int p = 0; p < a.rows(); ++p)
    for (int l = 0; l < a.cols(); ++l) {
      const Quat& x = a(p, l);
      const Quat& y = b(l, p);
      s += x.re * y.re - x.im_i * y.im_i - x.im_j * y.im_j - x.im_k * y.im_k;
    }
  return 2.0 * s;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

bool is_unitary(const QMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a.adjoint() * a - QMatrix::identity(a.rows())).max_abs() <= tol;
}

bool is_skew_hermitian(const QMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a.adjoint() + a).max_abs() <= tol;
}

}  // namespace gcm
