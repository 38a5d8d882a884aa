#include "gcmlab/gcm_system.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "gcmlab/errors.hpp"

namespace gcm {

namespace {

QMatrix mat_pow(const QMatrix& y, int e) {
  QMatrix p = QMatrix::identity(y.rows());
  for (int t = 0; t < e; ++t) p = p * y;
  return p;
}

void check_level(int n, int k, const char* who) {
  if (k < 0 || k >= n) throw InvalidArgument(std::string(who) + ": level out of range");
}

}  // namespace

std::vector<double> thimm_values(const QMatrix& x, int k) {
  const int n = x.rows();
  if (k < 1 || k > n - 1) throw InvalidArgument("thimm_values: level must be in 1..n-1");
  return block_spectrum(x, n - k);
}

double g_component(const OrbitPoint& pt, int k, int m) {
  const int n = pt.X.rows();
  check_level(n, k, "g_component");
  if (m < 1 || m > n - k - 1)
    throw InvalidArgument("g_component: index must be in 1..n-k-1 (use g_last for the last one)");
  if (k == 0) return pt.A(n - 1, m - 1).norm2();
  OrbitPoint block = diagonalize(upper_left_block(pt.X, n - k));
  return block.A(n - k - 1, m - 1).norm2();
}

double g_last_component(const OrbitPoint& pt, int k) {
  const int n = pt.X.rows();
  check_level(n, k, "g_last_component");
  return pt.X(n - k - 1, n - k - 1).im_i;
}

double f_component(const QMatrix& x, int k, int m) {
  const int n = x.rows();
  check_level(n, k, "f_component");
  if (m < 1 || m > n - k) throw InvalidArgument("f_component: index must be in 1..n-k");
  QMatrix p = mat_pow(upper_left_block(x, n - k), 2 * m);
  return 2.0 * p(n - k - 1, n - k - 1).re;
}

double f_odd_component(const QMatrix& x, int k, int m) {
  const int n = x.rows();
  check_level(n, k, "f_odd_component");
  if (m < 1 || m > n - k) throw InvalidArgument("f_odd_component: index must be in 1..n-k");
  QMatrix p = mat_pow(upper_left_block(x, n - k), 2 * m + 1);
  return 2.0 * p(n - k - 1, n - k - 1).re;
}

std::vector<double> g_from_f(const std::vector<double>& fvals, const std::vector<double>& lam) {
  const int n = static_cast<int>(lam.size());
  if (static_cast<int>(fvals.size()) != n)
    throw InvalidArgument("g_from_f: need one f value per eigenvalue");
  Eigen::MatrixXd v(n, n);
  Eigen::VectorXd rhs(n);
  for (int m = 1; m <= n; ++m) {
    rhs(m - 1) = fvals[m - 1];
    double sign = (m % 2 == 0) ? 1.0 : -1.0;
    for (int l = 0; l < n; ++l) v(m - 1, l) = 2.0 * sign * std::pow(lam[l], 2 * m);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(v);
  lu.setThreshold(1e-10);
  if (!lu.isInvertible())
    throw DegenerateInput("g_from_f: spectrum has repeated squares or zeros; system is singular");
  Eigen::VectorXd w = lu.solve(rhs);
  return std::vector<double>(w.data(), w.data() + n);
}

std::vector<FamilyMember> assemble_family(int n) {
  if (n < 1) throw InvalidArgument("assemble_family: n must be positive");
  std::vector<FamilyMember> fam;
  fam.reserve(static_cast<std::size_t>(n) * n);
  for (int k = 1; k <= n - 1; ++k)
    for (int m = 1; m <= n - k; ++m)
      fam.push_back({"thimm(" + std::to_string(k) + "," + std::to_string(m) + ")", k, m,
                     [k, m](const OrbitPoint& pt) { return thimm_values(pt.X, k)[m - 1]; }});
  for (int k = 0; k <= n - 1; ++k) {
    for (int m = 1; m <= n - k - 1; ++m)
      fam.push_back({"g(" + std::to_string(k) + "," + std::to_string(m) + ")", k, m,
                     [k, m](const OrbitPoint& pt) { return g_component(pt, k, m); }});
    fam.push_back({"g_last(" + std::to_string(k) + ")", k, n - k,
                   [k](const OrbitPoint& pt) { return g_last_component(pt, k); }});
  }
  return fam;
}

nlohmann::ordered_json family_report(const OrbitPoint& pt, std::uint64_t point_seed) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["n"] = pt.X.rows();
  j["lambda"] = pt.lam;
  j["point_seed"] = point_seed;
  nlohmann::ordered_json vals;
  for (const FamilyMember& fm : assemble_family(pt.X.rows())) vals[fm.label] = fm.eval(pt);
  j["values"] = std::move(vals);
  return j;
}

}  // namespace gcm
