#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcmlab/spectral.hpp"

namespace gcm {

// One member of the commuting family on an orbit in u(n,H)*. Labels:
//   thimm(k,m)  m-th chamber-ordered eigenvalue of the (n-k) x (n-k) block, k = 1..n-1
//   g(k,m)      |bottom-row entry m|^2 of the block diagonalizer, m = 1..n-k-1
//   g_last(k)   i-component of the block's last diagonal entry of X itself
// The family has n^2 members: n(n-1)/2 Thimm values plus n(n+1)/2 G-components.
struct FamilyMember {
  std::string label;
  int level = 0;  // k: block size is n-k
  int index = 0;  // m (g_last carries m = n-k)
  std::function<double(const OrbitPoint&)> eval;
};

// Chamber-ordered spectrum of the upper-left (n-k) x (n-k) block, k = 1..n-1.
std::vector<double> thimm_values(const QMatrix& x, int k);

// |b_{n-k, m}|^2 where the block Y = X[0..n-k) x [0..n-k) diagonalizes as
// Y = B D_mu B*. Level 0 reads the cached diagonalizer of the OrbitPoint; the
// value is invariant under the torus ambiguity either way.
double g_component(const OrbitPoint& pt, int k, int m);

// i-component of the (n-k, n-k) diagonal entry of X; on D_lam this returns
// lam_{n-k}. The n-th one (k = 0) is the last torus moment coordinate.
double g_last_component(const OrbitPoint& pt, int k);

// Even-power trace form: rtr(Y^{2m} E_{n-k,n-k}) for the block Y. Equals twice
// the spectral sum  sum_l (-1)^m mu_l^{2m} |b_{n-k,l}|^2.
double f_component(const QMatrix& x, int k, int m);

// Odd-power analogue rtr(Y^{2m+1} E_{n-k,n-k}); identically zero.
double f_odd_component(const QMatrix& x, int k, int m);

// Recovers {|a_{n,l}|^2, l = 1..n} from the level-0 values {f(0,m), m = 1..n}
// by solving the alternating-Vandermonde system
//   f_m = sum_l 2 (-1)^m lam_l^{2m} w_l.
// Throws DegenerateInput when the system is singular (repeated squares or a
// zero eigenvalue).
std::vector<double> g_from_f(const std::vector<double>& fvals, const std::vector<double>& lam);

// All n^2 members: Thimm levels k = 1..n-1 first, then for k = 0..n-1 the
// components g(k,1..n-k-1) and g_last(k).
std::vector<FamilyMember> assemble_family(int n);

// {"schema_version", "n", "lambda", "point_seed", "values": {label: value}}.
nlohmann::ordered_json family_report(const OrbitPoint& pt, std::uint64_t point_seed);

}  // namespace gcm
