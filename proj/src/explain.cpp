#include "gcmlab/explain.hpp"

#include <regex>
#include <sstream>

#include "gcmlab/errors.hpp"

namespace gcm {

namespace {

std::string thimm_text(const std::string& k, const std::string& m) {
  std::ostringstream os;
  os << "thimm(" << k << "," << m << "): eigenvalue number " << m
     << " (chamber order 0 >= mu_1 >= mu_2 >= ...) of the upper-left block of side n-" << k
     << " of the orbit point X, i.e. of the hermitian matrix i*embed(X) restricted to that "
        "block. These nested-block spectra are the action coordinates produced by collective "
        "spectral functions; within level k the index m runs from 1 to n-" << k << ".";
  return os.str();
}

std::string g_text(const std::string& k, const std::string& m) {
  std::ostringstream os;
  os << "g(" << k << "," << m << "): squared modulus |a_{last," << m
     << "}|^2 of entry " << m
     << " in the bottom row of a unitary diagonalizer A of the upper-left block of side n-" << k
     << " (columns ordered by the chamber order of the block spectrum, phases fixed so the "
        "dominant complex component of each column is real positive). The squared moduli of a "
        "row of a unitary matrix sum to 1, so together with g_last(" << k
     << ") these are the angle-type coordinates at level " << k << ".";
  return os.str();
}

std::string g_last_text(const std::string& k) {
  std::ostringstream os;
  os << "g_last(" << k << "): the i-component of the last diagonal entry of the upper-left "
        "block of side n-" << k
     << " of X, i.e. Im_i X_{pp} with p = n-" << k
     << ". It completes the level-" << k
     << " family: the bottom-row moduli determine the off-diagonal weight and this entry "
        "carries the remaining diagonal information.";
  return os.str();
}

std::string f_text(const std::string& k, const std::string& m) {
  std::ostringstream os;
  os << "f(" << k << "," << m << "): power-trace coordinate rtr(Y^{2" << m
     << "} E) = 2 Re (Y^{2m})_{last,last} for the upper-left block Y of side n-" << k
     << " and the last diagonal matrix unit E. Spectrally f = 2 sum_l (-1)^m mu_l^{2m} "
        "|b_l|^2 with b the bottom diagonalizer row, so the f values determine the g values "
        "by solving a Vandermonde-type system; odd powers of Y contribute 0 identically.";
  return os.str();
}

}  // namespace

std::string explain(const std::string& label) {
  static const std::regex thimm_re(R"(^thimm\((\d+),(\d+)\)$)");
  static const std::regex g_re(R"(^g\((\d+),(\d+)\)$)");
  static const std::regex glast_re(R"(^g_last\((\d+)\)$)");
  static const std::regex f_re(R"(^f\((\d+),(\d+)\)$)");
  // Thimm levels start at 1 (level 0 is the full matrix, whose spectrum is
  // fixed on the orbit); the member index m starts at 1 everywhere.
  auto positive = [](const std::ssub_match& s) {
    return s.str().find_first_not_of('0') != std::string::npos;
  };
  std::smatch m;
  if (std::regex_match(label, m, thimm_re) && positive(m[1]) && positive(m[2]))
    return thimm_text(m[1], m[2]);
  if (std::regex_match(label, m, g_re) && positive(m[2])) return g_text(m[1], m[2]);
  if (std::regex_match(label, m, glast_re)) return g_last_text(m[1]);
  if (std::regex_match(label, m, f_re) && positive(m[2])) return f_text(m[1], m[2]);

  if (label == "thimm") return thimm_text("k", "m");
  if (label == "g") return g_text("k", "m");
  if (label == "g_last") return g_last_text("k");
  if (label == "f") return f_text("k", "m");

  if (label == "family")
    return "family: the n^2 functions {thimm(k,m) : 1<=k<=n-1, 1<=m<=n-k} together with "
           "{g(k,m) : 0<=k<=n-1, 1<=m<=n-k-1} and {g_last(k) : 0<=k<=n-1}. They pairwise "
           "Poisson-commute and are functionally independent on a dense subset of a generic "
           "orbit, which is the completely-integrable-system statement this tool certifies "
           "numerically.";
  if (label == "commute")
    return "commute: samples random orbit points with the requested spectrum, computes "
           "finite-difference gradients of every family member in an orthonormal basis of "
           "u(n,H), and evaluates the Lie-Poisson bracket {f,g}(X) = rtr(X [grad f, grad g]) "
           "for every pair. Reports the largest absolute bracket; the suite passes when it "
           "stays below the tolerance at every sampled point.";
  if (label == "independence")
    return "independence: stacks the finite-difference gradients of all n^2 family members "
           "into a matrix at each sampled orbit point and computes its singular values. The "
           "suite passes when the numerical rank (singular values above the relative "
           "threshold) equals n^2 at every point.";
  if (label == "reduced")
    return "reduced: invariance of the level-0 members g(0,m), g_last(0), f(0,m) under "
           "conjugation of X by diag(U',1) with U' a random unitary of size n-1 (the "
           "stabilizer of the last basis vector), plus a negative control: a level-1 "
           "block-spectrum coordinate must move under full conjugation, confirming the "
           "invariance is specific to the embedded subgroup.";
  if (label == "patterns")
    return "patterns: counts integral interleaving patterns. For gl, triangular schemes where "
           "consecutive rows interlace. For the quaternionic case, rows come in pairs: each "
           "nonpositive row is followed by a primed row of the same length obeying "
           "0 >= p_1 >= a_1 >= p_2 >= ... >= p_L >= a_L, and the primed row interlaces the "
           "next shorter row. Counts are compared against the Weyl dimension formulas.";
  if (label == "yangian")
    return "yangian: the truncated-series suite. Works in the gauge group of pointed matrix "
           "series A(u) = 1 + A_1 u^{-1} + ... + A_K u^{-K} and certifies the skew-pairing "
           "factorization, the twisted stabilizer membership map, the deformation limits of "
           "the basic automorphisms, the corner-compression maps, their pullback to u(n,H), "
           "and the coordinate Poisson structure. Sub-suites: yangian.factorize, "
           "yangian.stabilizer, yangian.limits, yangian.psi, yangian.pullback, "
           "yangian.poisson.";
  if (label == "yangian.factorize")
    return "yangian.factorize: given Phi(u) = Q + Phi_1 u^{-1} + ... with Phi_m symmetric for "
           "odd m and antisymmetric for even m, solves Phi(u) = C(u)^t Q C(-u) order by order "
           "for a pointed C and checks the reconstruction residual; inputs violating the "
           "parity constraints are rejected with the offending order.";
  if (label == "yangian.stabilizer")
    return "yangian.stabilizer: membership in the twisted stabilizer subgroup H is "
           "characterized by S(A) = A(u) tau(A(-u)) being the identity series (equivalently "
           "C(u)^t Q C(-u) = Q). The suite draws elements of H by order-by-order solving with "
           "random homogeneous parts and checks S = 1, then perturbs them and checks S != 1.";
  if (label == "yangian.limits")
    return "yangian.limits: the one-parameter families (m_g)_h (multiplication by the scalar "
           "series 1 + sum_K g_K h^K u^{-K}) and (tau_a)_h (argument shift by a h) must "
           "collapse to the identity map exactly at h = 0, with coordinate displacement "
           "decaying linearly as h -> 0, while A -> A(-u)^{-1} and A -> A(-u)^tau do not "
           "depend on h. Generator-level coordinate deformations must match the series maps.";
  if (label == "yangian.psi")
    return "yangian.psi: two routes to the 2x2 corner compression of sum_M X^M u^{-M} for "
           "X in sp(2n,C): direct matrix powers versus the chain 1 + X u^{-1} -> inverse of "
           "the negated-argument series -> corner extraction. Also checks that the h = 0 "
           "composite automorphism equals A -> (A(u)^tau)^{-1}.";
  if (label == "yangian.pullback")
    return "yangian.pullback: pulls the corner coordinates back to u(n,H): the corner sum of "
           "embed(X)^M equals 2 Re (X^M)_{nn} computed quaternionically, and every odd order "
           "vanishes, matching the even power-trace family f(0,m).";
  if (label == "yangian.poisson")
    return "yangian.poisson: the coordinate bracket {z_ij^{(M)}, z_kl^{(N)}} = sum_{r<min(M,N)} "
           "(z_kj^{(r)} z_il^{(M+N-1-r)} - z_kj^{(M+N-1-r)} z_il^{(r)}) is checked for "
           "antisymmetry, the Jacobi identity (via Leibniz expansion on quadratic "
           "polynomials), and Poisson-Lie multiplicativity over the series product.";

  std::ostringstream os;
  os << "unknown label '" << label << "'; recognized labels:";
  for (const std::string& s : known_labels()) os << " " << s;
  throw UnknownLabel(os.str());
}

std::vector<std::string> known_labels() {
  return {"thimm(k,m)", "g(k,m)",           "g_last(k)",         "f(k,m)",
          "family",     "commute",          "independence",      "reduced",
          "patterns",   "yangian",          "yangian.factorize", "yangian.stabilizer",
          "yangian.limits", "yangian.psi",  "yangian.pullback",  "yangian.poisson"};
}

}  // namespace gcm
