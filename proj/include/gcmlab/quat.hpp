#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace gcm {

using cplx = std::complex<double>;

// Quaternion q = re + i*im_i + j*im_j + k*im_k with the Hamilton products
// i^2 = j^2 = k^2 = -1, ij = k = -ji, jk = i, ki = j.
//
// The complex split used throughout is q = alpha + j*beta with
// alpha = re + i*im_i and beta = im_j - i*im_k, so that for a, b in C:
// (a + j b) j = -conj(b) + j conj(a).
struct Quat {
  double re = 0.0, im_i = 0.0, im_j = 0.0, im_k = 0.0;

  Quat() = default;
  Quat(double r, double bi, double cj, double dk) : re(r), im_i(bi), im_j(cj), im_k(dk) {}

  static Quat one() { return {1, 0, 0, 0}; }
  static Quat i() { return {0, 1, 0, 0}; }
  static Quat j() { return {0, 0, 1, 0}; }
  static Quat k() { return {0, 0, 0, 1}; }

  static Quat from_split(cplx alpha, cplx beta) {
    return {alpha.real(), alpha.imag(), beta.real(), -beta.imag()};
  }
  cplx alpha() const { return {re, im_i}; }
  cplx beta() const { return {im_j, -im_k}; }

  Quat conj() const { return {re, -im_i, -im_j, -im_k}; }
  double real() const { return re; }
  Quat imag() const { return {0, im_i, im_j, im_k}; }
  double norm2() const { return re * re + im_i * im_i + im_j * im_j + im_k * im_k; }
  double abs() const { return std::sqrt(norm2()); }

  Quat operator-() const { return {-re, -im_i, -im_j, -im_k}; }
  Quat operator+(const Quat& o) const { return {re + o.re, im_i + o.im_i, im_j + o.im_j, im_k + o.im_k}; }
  Quat operator-(const Quat& o) const { return {re - o.re, im_i - o.im_i, im_j - o.im_j, im_k - o.im_k}; }
  Quat& operator+=(const Quat& o) { re += o.re; im_i += o.im_i; im_j += o.im_j; im_k += o.im_k; return *this; }
  Quat& operator-=(const Quat& o) { re -= o.re; im_i -= o.im_i; im_j -= o.im_j; im_k -= o.im_k; return *this; }

  Quat operator*(double s) const { return {re * s, im_i * s, im_j * s, im_k * s}; }
  friend Quat operator*(double s, const Quat& q) { return q * s; }

  // Hamilton product.
  Quat operator*(const Quat& o) const {
    return {re * o.re - im_i * o.im_i - im_j * o.im_j - im_k * o.im_k,
            re * o.im_i + im_i * o.re + im_j * o.im_k - im_k * o.im_j,
            re * o.im_j - im_i * o.im_k + im_j * o.re + im_k * o.im_i,
            re * o.im_k + im_i * o.im_j - im_j * o.im_i + im_k * o.re};
  }

  Quat inverse() const {
    double n2 = norm2();
    return {re / n2, -im_i / n2, -im_j / n2, -im_k / n2};
  }
};

inline Quat conj(const Quat& q) { return q.conj(); }

// Quaternionic matrix, row-major, acting on column vectors of H^n from the left
// (scalars act on the right).
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static QMatrix identity(int n) {
    QMatrix m(n, n);
    for (int p = 0; p < n; ++p) m(p, p) = Quat::one();
    return m;
  }
  // Matrix unit E_pq (0-based indices).
  static QMatrix unit(int n, int p, int q) {
    QMatrix m(n, n);
    m(p, q) = Quat::one();
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  Quat& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * c_ + c]; }
  const Quat& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * c_ + c]; }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator-() const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(double s) const;
  friend QMatrix operator*(double s, const QMatrix& m) { return m * s; }

  // Conjugate transpose A* = conj(A)^t.
  QMatrix adjoint() const;

  // Right-multiplies column c by q (a torus move when q is a unit complex scalar).
  void scale_col_right(int c, const Quat& q);

  double max_abs() const;
  double frob_norm() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Quat> a_;
};

// Reduced trace: rtr(A) = tr(embed_complex(A)) = 2 * sum_p Re(a_pp).
double rtr(const QMatrix& a);

// rtr(a * b) computed without forming the product.
double rtr_prod(const QMatrix& a, const QMatrix& b);

QMatrix commutator(const QMatrix& a, const QMatrix& b);

// Membership predicates, entrywise tolerance.
bool is_unitary(const QMatrix& a, double tol);        // A*A = 1
bool is_skew_hermitian(const QMatrix& a, double tol); // A* + A = 0

}  // namespace gcm
