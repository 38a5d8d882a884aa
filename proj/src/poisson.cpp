#include "gcmlab/poisson.hpp"

#include <Eigen/SVD>

#include <cmath>

#include "gcmlab/errors.hpp"
#include "gcmlab/gcm_system.hpp"
#include "gcmlab/parallel.hpp"
#include "gcmlab/rng.hpp"
#include "gcmlab/spectral.hpp"

namespace gcm {

LieAlgebraBasis LieAlgebraBasis::standard(int n) {
  if (n < 1) throw InvalidArgument("LieAlgebraBasis: n must be positive");
  LieAlgebraBasis b;
  b.n = n;
  const double rs2 = 1.0 / std::sqrt(2.0);
  const Quat units[4] = {Quat::one(), Quat::i(), Quat::j(), Quat::k()};
  for (int p = 0; p < n; ++p)
    for (int u = 1; u < 4; ++u) {
      QMatrix m(n, n);
      m(p, p) = units[u] * rs2;
      b.elems.push_back(std::move(m));
    }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int u = 0; u < 4; ++u) {
        QMatrix m(n, n);
        m(p, q) = units[u] * 0.5;
        m(q, p) = -units[u].conj() * 0.5;
        b.elems.push_back(std::move(m));
      }
  return b;
}

std::vector<double> gradient_coords(const ScalarField& f, const QMatrix& x,
                                    const LieAlgebraBasis& basis, double fd_step) {
  const double h = fd_step * (1.0 + x.frob_norm());
  std::vector<double> c(basis.elems.size());
  for (std::size_t d = 0; d < basis.elems.size(); ++d) {
    const QMatrix& b = basis.elems[d];
    c[d] = (f(x + b * h) - f(x - b * h)) / (2.0 * h);
  }
  return c;
}

QMatrix from_coords(const LieAlgebraBasis& basis, const std::vector<double>& coords) {
  if (coords.size() != basis.elems.size())
    throw InvalidArgument("from_coords: coordinate count does not match basis");
  QMatrix g(basis.n, basis.n);
  for (std::size_t d = 0; d < coords.size(); ++d)
    if (coords[d] != 0.0) g = g + basis.elems[d] * coords[d];
  return g;
}

QMatrix gradient(const ScalarField& f, const QMatrix& x, const LieAlgebraBasis& basis,
                 double fd_step) {
  return from_coords(basis, gradient_coords(f, x, basis, fd_step));
}

double poisson_bracket_from_gradients(const QMatrix& x, const QMatrix& gf, const QMatrix& gg) {
  return rtr_prod(x, commutator(gf, gg));
}

double poisson_bracket(const ScalarField& f, const ScalarField& g, const QMatrix& x,
                       const LieAlgebraBasis& basis, double fd_step) {
  return poisson_bracket_from_gradients(x, gradient(f, x, basis, fd_step),
                                        gradient(g, x, basis, fd_step));
}

namespace {

// Deterministic well-separated sample: trial t under root seed s draws from
// Rng(mix(s,t)) and keeps resampling (same stream) until the nested-block
// spectra are far enough from coalescence for finite differencing.
OrbitPoint sample_point(const CertifyOptions& opt, int trial) {
  SpectrumRequest req{opt.lambda, true};
  Rng rng(Rng::mix(opt.seed, static_cast<std::uint64_t>(trial)));
  OrbitPoint pt = random_orbit_point(req, rng);
  for (int attempt = 0; attempt < opt.max_resample; ++attempt) {
    if (pt.X.rows() == 1 || min_nested_gap(pt.X) >= opt.min_gap) return pt;
    pt = random_orbit_point(req, rng);
  }
  throw DegenerateInput("certify: could not sample a well-separated point");
}

std::vector<QMatrix> family_gradients(const std::vector<FamilyMember>& fam, const QMatrix& x,
                                      const LieAlgebraBasis& basis, double fd_step) {
  std::vector<QMatrix> grads;
  grads.reserve(fam.size());
  for (const FamilyMember& fm : fam) {
    ScalarField f = [&fm](const QMatrix& y) { return fm.eval(diagonalize(y)); };
    grads.push_back(gradient(f, x, basis, fd_step));
  }
  return grads;
}

}  // namespace

CommuteReport certify_commutativity(const CertifyOptions& opt) {
  SpectrumRequest{opt.lambda, true}.validate();
  const int n = static_cast<int>(opt.lambda.size());
  const auto fam = assemble_family(n);
  const auto basis = LieAlgebraBasis::standard(n);

  using Maxes = std::vector<double>;  // per pair, row-major over i<j
  const int npairs = static_cast<int>(fam.size() * (fam.size() - 1) / 2);
  std::vector<Maxes> per_trial = parallel_map<Maxes>(opt.trials, [&](int t) {
    OrbitPoint pt = sample_point(opt, t);
    auto grads = family_gradients(fam, pt.X, basis, opt.fd_step);
    Maxes vals(npairs);
    int idx = 0;
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j)
        vals[idx++] = std::abs(poisson_bracket_from_gradients(pt.X, grads[i], grads[j]));
    return vals;
  });

  CommuteReport rep;
  for (const FamilyMember& fm : fam) rep.labels.push_back(fm.label);
  int idx = 0;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j, ++idx) {
      double mx = 0.0;
      for (const Maxes& v : per_trial) mx = std::max(mx, v[idx]);
      std::string key = fam[i].label + "|" + fam[j].label;
      rep.max_abs_bracket[key] = mx;
      if (mx >= rep.worst_value) {
        rep.worst_value = mx;
        rep.worst_pair = key;
      }
    }
  rep.pass = rep.worst_value <= opt.tol;
  return rep;
}

IndependenceReport certify_independence(const CertifyOptions& opt) {
  SpectrumRequest{opt.lambda, true}.validate();
  const int n = static_cast<int>(opt.lambda.size());
  const auto fam = assemble_family(n);
  const auto basis = LieAlgebraBasis::standard(n);

  std::vector<std::vector<double>> svals =
      parallel_map<std::vector<double>>(opt.trials, [&](int t) {
        OrbitPoint pt = sample_point(opt, t);
        Eigen::MatrixXd m(fam.size(), basis.elems.size());
        for (std::size_t i = 0; i < fam.size(); ++i) {
          const FamilyMember& fm = fam[i];
          ScalarField f = [&fm](const QMatrix& y) { return fm.eval(diagonalize(y)); };
          auto coords = gradient_coords(f, pt.X, basis, opt.fd_step);
          for (std::size_t d = 0; d < coords.size(); ++d)
            m(static_cast<int>(i), static_cast<int>(d)) = coords[d];
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
        std::vector<double> s(svd.singularValues().data(),
                              svd.singularValues().data() + svd.singularValues().size());
        return s;
      });

  IndependenceReport rep;
  rep.expected_rank = static_cast<int>(fam.size());
  rep.singular_values = std::move(svals);
  rep.pass = true;
  for (const auto& s : rep.singular_values) {
    double smax = s.empty() ? 0.0 : s.front();
    int rank = 0;
    for (double v : s)
      if (v > opt.rank_rel_threshold * smax) ++rank;
    rep.ranks.push_back(rank);
    if (rank != rep.expected_rank) rep.pass = false;
  }
  return rep;
}

}  // namespace gcm
