#include "gcmlab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

#include "gcmlab/errors.hpp"
#include "gcmlab/gauge_series.hpp"
#include "gcmlab/gcm_system.hpp"
#include "gcmlab/patterns.hpp"
#include "gcmlab/poisson.hpp"
#include "gcmlab/rng.hpp"
#include "gcmlab/spectral.hpp"

namespace gcm {

namespace {

using njson = nlohmann::ordered_json;

// Distinct stream tags so the suites never share random substreams.
constexpr std::uint64_t kReducedStream = 0x5245445543454400ull;
constexpr std::uint64_t kYangianStream = 0x59414e4749414e00ull;

CertifyOptions certify_options(const SuiteConfig& cfg) {
  CertifyOptions opt;
  opt.lambda = cfg.lam();
  opt.trials = cfg.trials;
  opt.tol = cfg.tol;
  opt.fd_step = cfg.fd_step;
  opt.seed = cfg.seed;
  return opt;
}

njson report_head(const char* suite, const SuiteConfig& cfg) {
  njson j;
  j["schema_version"] = 1;
  j["suite"] = suite;
  j["config"] = cfg.to_json();
  return j;
}

}  // namespace

std::vector<double> SuiteConfig::lam() const {
  if (!lambda.empty()) {
    if (static_cast<int>(lambda.size()) != n)
      throw InvalidArgument("config: lambda length must equal n");
    return lambda;
  }
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = -static_cast<double>(i + 1);
  return v;
}

njson SuiteConfig::to_json() const {
  njson j;
  j["n"] = n;
  j["lambda"] = lam();
  j["trials"] = trials;
  j["tol"] = tol;
  j["fd_step"] = fd_step;
  j["order"] = order;
  j["seed"] = seed;
  return j;
}

SuiteConfig SuiteConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  SuiteConfig cfg;
  try {
    if (j.contains("n")) cfg.n = j.at("n").get<int>();
    if (j.contains("lambda")) cfg.lambda = j.at("lambda").get<std::vector<double>>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
    if (j.contains("tol")) cfg.tol = j.at("tol").get<double>();
    if (j.contains("fd_step")) cfg.fd_step = j.at("fd_step").get<double>();
    if (j.contains("order")) cfg.order = j.at("order").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (cfg.n < 1) throw InvalidArgument("config: n must be >= 1");
  if (cfg.trials < 1) throw InvalidArgument("config: trials must be >= 1");
  if (cfg.order < 0) throw InvalidArgument("config: order must be >= 0");
  return cfg;
}

njson run_commute_suite(const SuiteConfig& cfg) {
  njson j = report_head("commute", cfg);
  CommuteReport rep = certify_commutativity(certify_options(cfg));
  j["labels"] = rep.labels;
  njson brackets;
  for (const auto& [pair, value] : rep.max_abs_bracket) brackets[pair] = value;
  j["max_abs_bracket"] = std::move(brackets);
  j["worst_pair"] = rep.worst_pair;
  j["worst_value"] = rep.worst_value;
  j["pass"] = rep.pass;
  return j;
}

njson run_independence_suite(const SuiteConfig& cfg) {
  njson j = report_head("independence", cfg);
  IndependenceReport rep = certify_independence(certify_options(cfg));
  j["expected_rank"] = rep.expected_rank;
  j["ranks"] = rep.ranks;
  njson sv = njson::array();
  for (const auto& trial : rep.singular_values) sv.push_back(trial);
  j["singular_values"] = std::move(sv);
  j["pass"] = rep.pass;
  return j;
}

njson run_reduced_suite(const SuiteConfig& cfg) {
  njson j = report_head("reduced", cfg);
  const int n = cfg.n;
  const double inv_tol = 1e-9;
  SpectrumRequest req{cfg.lam(), true};
  req.validate();

  double max_g_defect = 0.0, max_glast_defect = 0.0, max_f_defect = 0.0;
  double min_control_move = -1.0;

  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(Rng::mix(cfg.seed ^ kReducedStream, static_cast<std::uint64_t>(t)));
    OrbitPoint pt = sample_generic_orbit(req, rng, 1e-6);

    // Conjugation by diag(U', 1) stabilizes the last basis vector; every
    // level-0 member must be preserved.
    QMatrix u = QMatrix::identity(n);
    if (n > 1) {
      QMatrix up = random_unitary(n - 1, rng);
      for (int r = 0; r < n - 1; ++r)
        for (int c = 0; c < n - 1; ++c) u(r, c) = up(r, c);
    }
    QMatrix xc = u * pt.X * u.adjoint();
    OrbitPoint ptc = diagonalize(xc);

    for (int m = 1; m <= n - 1; ++m)
      max_g_defect =
          std::max(max_g_defect, std::abs(g_component(pt, 0, m) - g_component(ptc, 0, m)));
    max_glast_defect =
        std::max(max_glast_defect, std::abs(g_last_component(pt, 0) - g_last_component(ptc, 0)));
    for (int m = 1; m <= n; ++m)
      max_f_defect =
          std::max(max_f_defect, std::abs(f_component(pt.X, 0, m) - f_component(xc, 0, m)));

    // Negative control: the deepest block-spectrum coordinate (level n-1) must
    // move along the orbit direction (full conjugation); it is invariant only
    // under the embedded subgroup.
    if (n > 1) {
      QMatrix v = random_unitary(n, rng);
      QMatrix xf = v * pt.X * v.adjoint();
      double move = std::abs(thimm_values(xf, n - 1)[0] - thimm_values(pt.X, n - 1)[0]);
      min_control_move = (min_control_move < 0.0) ? move : std::min(min_control_move, move);
    }
  }

  const bool control_ok = (n == 1) || (min_control_move > 1e-6);
  j["invariance_tol"] = inv_tol;
  j["max_g_defect"] = max_g_defect;
  j["max_g_last_defect"] = max_glast_defect;
  j["max_f_defect"] = max_f_defect;
  j["negative_control_min_move"] = (n == 1) ? njson(nullptr) : njson(min_control_move);
  j["pass"] = max_g_defect <= inv_tol && max_glast_defect <= inv_tol && max_f_defect <= inv_tol &&
              control_ok;
  return j;
}

namespace {

void enumerate_tops(int len, long long lo, long long hi, PatternRow& acc,
                    const std::function<void(const PatternRow&)>& emit) {
  if (static_cast<int>(acc.size()) == len) {
    emit(acc);
    return;
  }
  long long top = acc.empty() ? hi : acc.back();
  for (long long v = top; v >= lo; --v) {
    acc.push_back(v);
    enumerate_tops(len, lo, hi, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

njson run_patterns_suite(const SuiteConfig& cfg) {
  njson j = report_head("patterns", cfg);
  long long checked_gl = 0, checked_sp = 0, listed = 0;
  njson mismatches = njson::array();

  auto check_top = [&](const std::string& kind, const PatternRow& top) {
    PatternSpec spec{kind, top};
    const unsigned long long counted = count_patterns(spec);
    const unsigned long long dim = weyl_dim(spec);
    if (counted != dim) {
      njson m;
      m["kind"] = kind;
      m["top"] = top;
      m["count"] = counted;
      m["weyl_dim"] = dim;
      mismatches.push_back(std::move(m));
    }
    if (counted <= 1000) {
      const std::size_t ls = list_patterns(spec).size();
      ++listed;
      if (ls != counted) {
        njson m;
        m["kind"] = kind;
        m["top"] = top;
        m["count"] = counted;
        m["list_size"] = ls;
        mismatches.push_back(std::move(m));
      }
    }
  };

  PatternRow acc;
  for (int len = 1; len <= 4; ++len)
    enumerate_tops(len, 0, 4, acc, [&](const PatternRow& top) {
      check_top("gl", top);
      ++checked_gl;
    });
  for (int len = 1; len <= 3; ++len)
    enumerate_tops(len, -3, 0, acc, [&](const PatternRow& top) {
      check_top("sp", top);
      ++checked_sp;
    });

  j["checked_gl_tops"] = checked_gl;
  j["checked_sp_tops"] = checked_sp;
  j["listed_tops"] = listed;
  j["mismatches"] = std::move(mismatches);
  j["pass"] = mismatches.empty();
  return j;
}

namespace {

njson yangian_factorize(const SuiteConfig& cfg) {
  const int dim = 2 * cfg.n, order = cfg.order;
  const CMat q = q_form(cfg.n);
  double max_residual = 0.0, max_action_residual = 0.0;
  const MatrixSeries qs = MatrixSeries::constant(q, order);

  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(Rng::mix(cfg.seed ^ kYangianStream, 100 + static_cast<std::uint64_t>(t)));
    // Random pairing with the required parity at every order.
    MatrixSeries phi_raw = MatrixSeries::constant(q, order);
    for (int m = 1; m <= order; ++m) {
      CMat g(dim, dim);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = cplx(rng.gauss() * 0.5, rng.gauss() * 0.5);
      phi_raw.coeff(m) = (m % 2 == 1) ? CMat(0.5 * (g + g.transpose()))
                                      : CMat(0.5 * (g - g.transpose()));
    }
    SkewPairingSeries phi = SkewPairingSeries::checked(phi_raw);
    MatrixSeries c = skew_factorize(phi);
    const MatrixSeries recon = c.transposed() * qs * c.neg_arg();
    max_residual = std::max(max_residual, recon.dist(phi.phi));

    // Transport by a random gauge element and factorize again.
    MatrixSeries b = random_pointed(dim, order, rng, 0.3);
    SkewPairingSeries phi2 = pairing_action(b, phi);
    MatrixSeries c2 = skew_factorize(phi2);
    const MatrixSeries recon2 = c2.transposed() * qs * c2.neg_arg();
    max_action_residual = std::max(
        max_action_residual, recon2.dist(phi2.phi) / std::max(1.0, phi2.phi.max_abs()));
  }

  // Parity-violating input must be rejected, both by the validating
  // constructor and by the factorizer itself.
  bool rejected_checked = false, rejected_factor = false;
  if (order >= 1) {
    MatrixSeries bad = MatrixSeries::constant(q, order);
    bad.coeff(1)(0, std::min(1, dim - 1)) = cplx(0.7, 0.0);  // asymmetric odd order
    try {
      SkewPairingSeries::checked(bad);
    } catch (const DegenerateInput&) {
      rejected_checked = true;
    }
    try {
      skew_factorize(SkewPairingSeries{bad});
    } catch (const DegenerateInput&) {
      rejected_factor = true;
    }
  } else {
    rejected_checked = rejected_factor = true;
  }

  njson j;
  j["max_residual"] = max_residual;
  j["max_action_residual"] = max_action_residual;
  j["invalid_rejected"] = rejected_checked && rejected_factor;
  j["pass"] = max_residual <= 1e-10 && max_action_residual <= 1e-8 && rejected_checked &&
              rejected_factor;
  return j;
}

njson yangian_stabilizer(const SuiteConfig& cfg) {
  const int dim = 2 * cfg.n, order = cfg.order;
  const int samples = std::max(cfg.trials, 50);
  double max_member_defect = 0.0;
  double min_nonmember_defect = -1.0;
  bool perturbed_detected = true;
  const MatrixSeries ident = MatrixSeries::identity(dim, order);

  for (int t = 0; t < samples; ++t) {
    Rng rng(Rng::mix(cfg.seed ^ kYangianStream, 200 + static_cast<std::uint64_t>(t)));
    MatrixSeries a = sample_H_element(dim, order, rng, 0.5);
    max_member_defect = std::max(max_member_defect, s_map(a).dist(ident));

    MatrixSeries b = random_pointed(dim, order, rng, 0.5);
    if (order >= 1) {
      double d = s_map(b).dist(ident);
      min_nonmember_defect = (min_nonmember_defect < 0.0) ? d : std::min(min_nonmember_defect, d);

      // A member nudged off H must be detected as well.
      MatrixSeries ap = a;
      ap.coeff(1)(0, 0) += cplx(1e-3, 0.0);
      perturbed_detected = perturbed_detected && !is_in_H(ap, 1e-10);
    }
  }

  njson j;
  j["samples"] = samples;
  j["max_member_defect"] = max_member_defect;
  j["min_nonmember_defect"] = min_nonmember_defect;
  j["perturbed_detected"] = perturbed_detected;
  const bool nonmember_ok = (order == 0) || min_nonmember_defect > 1e-6;
  j["pass"] = max_member_defect <= 1e-10 && nonmember_ok && perturbed_detected;
  return j;
}

njson yangian_limits(const SuiteConfig& cfg) {
  const int dim = 2 * cfg.n, order = cfg.order;
  const std::vector<double> hs = {1e-1, 1e-2, 1e-3};
  double max_h0_mult = 0.0, max_h0_shift = 0.0, max_deformation_gap = 0.0;
  bool decay_ok = true;
  njson decay_samples = njson::array();

  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(Rng::mix(cfg.seed ^ kYangianStream, 300 + static_cast<std::uint64_t>(t)));
    MatrixSeries a = random_pointed(dim, order, rng, 0.5);
    std::vector<cplx> g(static_cast<std::size_t>(order));
    for (cplx& v : g) v = cplx(rng.gauss() * 0.5, rng.gauss() * 0.5);
    const cplx shift(rng.gauss() * 0.5, rng.gauss() * 0.5);

    // h = 0 collapses both families to the identity map, exactly.
    max_h0_mult = std::max(max_h0_mult, aut_mult_g(a, g, 0.0).dist(a));
    max_h0_shift = std::max(max_h0_shift, aut_shift(a, shift, 0.0).dist(a));

    // inv and bar_tau take no deformation parameter; displacement of the
    // deformed families decays linearly in h.
    std::vector<double> dm, ds;
    for (double h : hs) {
      dm.push_back(aut_mult_g(a, g, h).dist(a));
      ds.push_back(aut_shift(a, shift, h).dist(a));
    }
    for (std::size_t i = 0; i + 1 < hs.size(); ++i) {
      if (dm[i + 1] > 0.5 * dm[i] + 1e-14) decay_ok = false;
      if (ds[i + 1] > 0.5 * ds[i] + 1e-14) decay_ok = false;
    }
    if (t == 0) {
      decay_samples.push_back(dm);
      decay_samples.push_back(ds);
    }

    // Generator-level coordinate deformations must agree with the series maps
    // at every h, including h = 1 (the undeformed automorphism).
    const CoordinateDeformation dg = CoordinateDeformation::mult_g(g, order);
    const CoordinateDeformation dsft = CoordinateDeformation::shift(shift, order);
    for (double h : {0.0, 1e-2, 0.5, 1.0}) {
      max_deformation_gap = std::max(max_deformation_gap, dg.apply(a, h).dist(aut_mult_g(a, g, h)));
      max_deformation_gap =
          std::max(max_deformation_gap, dsft.apply(a, h).dist(aut_shift(a, shift, h)));
    }
  }

  njson j;
  j["max_h0_defect_mult"] = max_h0_mult;
  j["max_h0_defect_shift"] = max_h0_shift;
  j["h_values"] = hs;
  j["decay_samples"] = std::move(decay_samples);
  j["decay_linear"] = decay_ok;
  j["inv_h_independent"] = true;       // A -> A(-u)^{-1} takes no h at all
  j["bar_tau_h_independent"] = true;   // A -> A(-u)^tau likewise
  j["max_deformation_gap"] = max_deformation_gap;
  j["pass"] = max_h0_mult == 0.0 && max_h0_shift == 0.0 && decay_ok &&
              max_deformation_gap <= 1e-10;
  return j;
}

njson yangian_psi(const SuiteConfig& cfg) {
  const int n = cfg.n, order = cfg.order;
  double max_corner_gap = 0.0, max_psihat_gap = 0.0, max_invariance_defect = 0.0;

  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(Rng::mix(cfg.seed ^ kYangianStream, 400 + static_cast<std::uint64_t>(t)));
    const CMat x = random_sp_algebra(n, rng, 0.5);
    const MatrixSeries direct = psi0_corner(x, order);
    max_corner_gap = std::max(max_corner_gap, direct.dist(psi_chain(x, order)));

    // Both corner maps are blind to conjugation by the middle-block symplectic
    // subgroup (it fixes the first and last basis vectors).
    if (n >= 2) {
      const int mid = 2 * (n - 1);
      const CMat yp = random_sp_algebra(n - 1, rng, 0.4);
      CMat g = CMat::Identity(2 * n, 2 * n), ginv = CMat::Identity(2 * n, 2 * n);
      g.block(1, 1, mid, mid) = expm(yp);
      ginv.block(1, 1, mid, mid) = expm(CMat(-yp));
      const CMat xc = g * x * ginv;
      max_invariance_defect =
          std::max(max_invariance_defect, psi0_corner(xc, order).dist(direct));
      max_invariance_defect =
          std::max(max_invariance_defect, psi_chain(xc, order).dist(psi_chain(x, order)));
    }

    MatrixSeries a = random_pointed(2 * n, order, rng, 0.4);
    std::vector<cplx> g(static_cast<std::size_t>(order));
    for (cplx& v : g) v = cplx(rng.gauss() * 0.5, rng.gauss() * 0.5);
    // At h = 0 the composite map reduces to A -> (A(u)^tau)^{-1}.
    const MatrixSeries lhs = psi_hat(a, g, 0.0);
    const MatrixSeries rhs = a.sympl_transposed().inverse();
    max_psihat_gap = std::max(max_psihat_gap, lhs.dist(rhs));
  }

  njson j;
  j["max_corner_gap"] = max_corner_gap;
  j["max_subgroup_invariance_defect"] = max_invariance_defect;
  j["max_psihat_limit_gap"] = max_psihat_gap;
  j["pass"] = max_corner_gap <= 1e-10 && max_invariance_defect <= 1e-8 &&
              max_psihat_gap <= 1e-10;
  return j;
}

njson yangian_pullback(const SuiteConfig& cfg) {
  const int n = cfg.n, order = cfg.order;
  double max_route_gap = 0.0, max_odd_value = 0.0;

  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(Rng::mix(cfg.seed ^ kYangianStream, 500 + static_cast<std::uint64_t>(t)));
    QMatrix g(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        g(r, c) = Quat(rng.gauss(), rng.gauss(), rng.gauss(), rng.gauss()) * 0.5;
    const QMatrix x = (g - g.adjoint()) * 0.5;
    PullbackCheck chk = verify_fmn_pullback(x, order);
    max_route_gap = std::max(max_route_gap, chk.max_route_gap);
    max_odd_value = std::max(max_odd_value, chk.max_odd_value);
  }

  njson j;
  j["max_route_gap"] = max_route_gap;
  j["max_odd_value"] = max_odd_value;
  j["pass"] = max_route_gap <= 1e-10 && max_odd_value <= 1e-10;
  return j;
}

njson yangian_poisson(const SuiteConfig& cfg) {
  const int n = cfg.n, order = cfg.order;
  double max_antisym = 0.0, max_jacobi = 0.0, max_mult = 0.0;
  int checked_antisym = 0, checked_jacobi = 0, checked_mult = 0;

  std::vector<int> idx;
  for (int i = -n; i <= n; ++i)
    if (i != 0) idx.push_back(i);

  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(Rng::mix(cfg.seed ^ kYangianStream, 600 + static_cast<std::uint64_t>(t)));
    MatrixSeries a = random_pointed(2 * n, order, rng, 0.5);
    MatrixSeries b = random_pointed(2 * n, order, rng, 0.5);

    auto rand_idx = [&]() { return idx[static_cast<std::size_t>(rng.uniform() * idx.size())]; };
    auto rand_ord = [&](int hi) { return static_cast<int>(rng.uniform() * (hi + 1)); };

    // Antisymmetry of the coordinate bracket.
    {
      const int m = rand_ord(order), nn = rand_ord(std::max(0, order + 1 - m));
      Coord c1{rand_idx(), rand_idx(), m}, c2{rand_idx(), rand_idx(), nn};
      max_antisym = std::max(
          max_antisym, std::abs(coord_poisson(a, c1, c2) + coord_poisson(a, c2, c1)));
      ++checked_antisym;
    }
    // Jacobi identity on a random coordinate triple within the order budget.
    {
      const int m = rand_ord(order), nn = rand_ord(order - m), p = rand_ord(order - m - nn);
      Coord c1{rand_idx(), rand_idx(), m}, c2{rand_idx(), rand_idx(), nn},
          c3{rand_idx(), rand_idx(), p};
      max_jacobi = std::max(max_jacobi, jacobi_defect(a, c1, c2, c3));
      ++checked_jacobi;
    }
    // Poisson-Lie multiplicativity over the series product.
    {
      const int m = rand_ord(order), nn = rand_ord(std::max(0, order + 1 - m));
      Coord c1{rand_idx(), rand_idx(), m}, c2{rand_idx(), rand_idx(), nn};
      max_mult = std::max(max_mult, multiplicativity_defect(a, b, c1, c2));
      ++checked_mult;
    }
  }

  // Requests beyond the truncation order must be rejected.
  bool budget_rejected = false;
  {
    Rng rng(Rng::mix(cfg.seed ^ kYangianStream, 699));
    MatrixSeries a = random_pointed(2 * n, order, rng, 0.5);
    try {
      coord_poisson(a, Coord{1, 1, order}, Coord{1, -1, 2});
    } catch (const InvalidArgument&) {
      budget_rejected = true;
    }
  }

  njson j;
  j["checked_antisym"] = checked_antisym;
  j["max_antisym_defect"] = max_antisym;
  j["checked_jacobi"] = checked_jacobi;
  j["max_jacobi_defect"] = max_jacobi;
  j["checked_multiplicativity"] = checked_mult;
  j["max_multiplicativity_defect"] = max_mult;
  j["budget_rejected"] = budget_rejected;
  j["pass"] = max_antisym <= 1e-9 && max_jacobi <= 1e-9 && max_mult <= 1e-9 && budget_rejected;
  return j;
}

}  // namespace

njson run_yangian_suite(const SuiteConfig& cfg) {
  njson j = report_head("yangian", cfg);
  j["factorize"] = yangian_factorize(cfg);
  j["stabilizer"] = yangian_stabilizer(cfg);
  j["limits"] = yangian_limits(cfg);
  j["psi"] = yangian_psi(cfg);
  j["pullback"] = yangian_pullback(cfg);
  j["poisson"] = yangian_poisson(cfg);
  bool pass = true;
  for (const char* part : {"factorize", "stabilizer", "limits", "psi", "pullback", "poisson"})
    pass = pass && j[part]["pass"].get<bool>();
  j["pass"] = pass;
  return j;
}

njson run_all_suites(const SuiteConfig& cfg) {
  njson j;
  j["schema_version"] = 1;
  j["suite"] = "all";
  j["config"] = cfg.to_json();
  njson suites;
  suites["commute"] = run_commute_suite(cfg);
  suites["independence"] = run_independence_suite(cfg);
  suites["reduced"] = run_reduced_suite(cfg);
  suites["patterns"] = run_patterns_suite(cfg);
  suites["yangian"] = run_yangian_suite(cfg);
  bool pass = true;
  for (const auto& [name, rep] : suites.items()) pass = pass && rep.at("pass").get<bool>();
  j["suites"] = std::move(suites);
  j["pass"] = pass;
  return j;
}

njson run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "commute") return run_commute_suite(cfg);
  if (name == "independence") return run_independence_suite(cfg);
  if (name == "reduced") return run_reduced_suite(cfg);
  if (name == "patterns") return run_patterns_suite(cfg);
  if (name == "yangian") return run_yangian_suite(cfg);
  if (name == "all") return run_all_suites(cfg);
  throw UnknownLabel("unknown suite '" + name +
                     "'; expected one of: commute independence reduced patterns yangian all");
}

std::vector<std::string> suite_names() {
  return {"commute", "independence", "reduced", "patterns", "yangian", "all"};
}

}  // namespace gcm
