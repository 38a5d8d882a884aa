// Acceptance gate: nine end-to-end checks of the library's advertised
// guarantees, each printed as one [PASS]/[FAIL] line with the measured value
// and elapsed time. Exits nonzero if any check fails. argv[1] must point at
// the command-line binary (used by the determinism check).
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gcmlab/gcm_system.hpp"
#include "gcmlab/patterns.hpp"
#include "gcmlab/poisson.hpp"
#include "gcmlab/spectral.hpp"
#include "gcmlab/suites.hpp"

using namespace gcm;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int id, bool pass, const std::string& what, const std::string& measured,
            double seconds) {
  std::printf("[%s] criterion %d: %s (%s, %.2fs)\n", pass ? "PASS" : "FAIL", id, what.c_str(),
              measured.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

QMatrix random_skew(int n, Rng& rng) {
  QMatrix g(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) g(p, q) = {rng.gauss(), rng.gauss(), rng.gauss(), rng.gauss()};
  return (g - g.adjoint()) * 0.5;
}

// 1. Finite-difference bracket of linear fields against the exact
//    structure-constant value rtr(X [Z1, Z2]).
void criterion_linear_oracle() {
  Timer timer;
  double max_rel = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 4;
    Rng rng(Rng::mix(1001, static_cast<std::uint64_t>(t)));
    QMatrix x = random_skew(n, rng), z1 = random_skew(n, rng), z2 = random_skew(n, rng);
    LieAlgebraBasis basis = LieAlgebraBasis::standard(n);
    ScalarField f1 = [&z1](const QMatrix& y) { return rtr_prod(y, z1); };
    ScalarField f2 = [&z2](const QMatrix& y) { return rtr_prod(y, z2); };
    const double numeric = poisson_bracket(f1, f2, x, basis, 1e-5);
    const double exact = rtr_prod(x, commutator(z1, z2));
    const double rel = std::abs(numeric - exact) / std::max(1.0, std::abs(exact));
    max_rel = std::max(max_rel, rel);
  }
  const double secs = timer.seconds();
  report(1, max_rel < 1e-8 && secs < 5.0,
         "bracket engine reproduces rtr(X[Z1,Z2]) for linear fields, 100 draws, n <= 4",
         "max rel err " + fmt(max_rel), secs);
}

CertifyOptions standard_options(std::vector<double> lambda) {
  CertifyOptions opt;
  opt.lambda = std::move(lambda);
  opt.trials = 20;
  opt.tol = 2e-5;
  opt.fd_step = 1e-5;
  opt.seed = 7;
  return opt;
}

// 2. All family pairs Poisson-commute at 20 random points per orbit.
void criterion_commutativity() {
  Timer timer;
  CommuteReport r2 = certify_commutativity(standard_options({-1.0, -3.0}));
  CommuteReport r3 = certify_commutativity(standard_options({-1.0, -2.0, -4.0}));
  const double secs = timer.seconds();
  report(2, r2.pass && r3.pass && secs < 60.0,
         "family pairwise brackets < 2e-5 at 20 points, n=2 (-1,-3) and n=3 (-1,-2,-4)",
         "worst |{f,g}| n=2 " + fmt(r2.worst_value) + ", n=3 " + fmt(r3.worst_value), secs);
}

// 3. Stacked gradients have rank exactly n^2 at the same sample points.
void criterion_independence() {
  Timer timer;
  IndependenceReport r2 = certify_independence(standard_options({-1.0, -3.0}));
  IndependenceReport r3 = certify_independence(standard_options({-1.0, -2.0, -4.0}));
  bool ranks_ok = r2.pass && r3.pass && r2.expected_rank == 4 && r3.expected_rank == 9;
  report(3, ranks_ok,
         "gradient stack has exactly n^2 singular values above 1e-6*sigma_max (rank 4 / rank 9)",
         std::string("all ranks n=2: ") + (r2.pass ? "4" : "off") +
             ", n=3: " + (r3.pass ? "9" : "off"),
         timer.seconds());
}

// 4. Level-0 members are conjugation-invariant under the embedded subgroup
//    fixing the last coordinate; a deepest-level value moves (control).
void criterion_reduced_invariance() {
  Timer timer;
  SuiteConfig cfg;
  cfg.trials = 20;
  cfg.seed = 7;
  cfg.n = 2;
  cfg.lambda = {-1.0, -3.0};
  nlohmann::ordered_json rep2 = run_suite("reduced", cfg);
  cfg.n = 3;
  cfg.lambda = {-1.0, -2.0, -4.0};
  nlohmann::ordered_json rep3 = run_suite("reduced", cfg);
  const double worst =
      std::max({rep2.at("max_g_defect").get<double>(), rep2.at("max_g_last_defect").get<double>(),
                rep2.at("max_f_defect").get<double>(), rep3.at("max_g_defect").get<double>(),
                rep3.at("max_g_last_defect").get<double>(), rep3.at("max_f_defect").get<double>()});
  const double move = std::min(rep2.at("negative_control_min_move").get<double>(),
                               rep3.at("negative_control_min_move").get<double>());
  report(4, rep2.at("pass").get<bool>() && rep3.at("pass").get<bool>(),
         "level-0 members invariant to 1e-9 under embedded subgroup; deep member moves",
         "max defect " + fmt(worst) + ", control move " + fmt(move), timer.seconds());
}

// 5. Power-trace form vs spectral sum, odd-power vanishing, and unit row sum.
void criterion_formula_consistency() {
  Timer timer;
  double max_gap = 0.0, max_odd = 0.0, max_row = 0.0;
  const std::vector<double> lambda{-1.0, -2.0, -3.0};
  const int n = 3;
  for (int t = 0; t < 50; ++t) {
    Rng rng(Rng::mix(5005, static_cast<std::uint64_t>(t)));
    OrbitPoint pt = random_orbit_point(SpectrumRequest{lambda, true}, rng);
    for (int k = 0; k < n; ++k) {
      const int bs = n - k;
      OrbitPoint bd = diagonalize(upper_left_block(pt.X, bs));
      for (int m = 1; m <= bs; ++m) {
        double sum = 0.0;
        for (int l = 0; l < bs; ++l)
          sum += ((m % 2 == 0) ? 1.0 : -1.0) * std::pow(bd.lam[static_cast<std::size_t>(l)],
                                                        2.0 * m) *
                 bd.A(bs - 1, l).norm2();
        max_gap = std::max(max_gap, std::abs(f_component(pt.X, k, m) - 2.0 * sum));
        max_odd = std::max(max_odd, std::abs(f_odd_component(pt.X, k, m)));
      }
    }
    double row = 0.0;
    for (int l = 0; l < n; ++l) row += pt.A(n - 1, l).norm2();
    max_row = std::max(max_row, std::abs(row - 1.0));
  }
  report(5, max_gap < 1e-10 && max_odd < 1e-12 && max_row < 1e-10,
         "trace form = 2x spectral sum (1e-10), odd powers vanish (1e-12), row sum = 1 (1e-10)",
         "gap " + fmt(max_gap) + ", odd " + fmt(max_odd) + ", row " + fmt(max_row),
         timer.seconds());
}

// 6. Spectral decomposition round trip on random skew matrices up to n = 5.
void criterion_diagonalization() {
  Timer timer;
  double max_recon = 0.0, max_unitary = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 5;
    Rng rng(Rng::mix(6006, static_cast<std::uint64_t>(t)));
    QMatrix x = random_skew(n, rng);
    OrbitPoint pt = diagonalize(x);
    QMatrix d(n, n);
    for (int p = 0; p < n; ++p) d(p, p) = {0.0, pt.lam[static_cast<std::size_t>(p)], 0.0, 0.0};
    max_recon = std::max(max_recon, (pt.A * d * pt.A.adjoint() - x).frob_norm());
    max_unitary =
        std::max(max_unitary, (pt.A.adjoint() * pt.A - QMatrix::identity(n)).max_abs());
  }
  report(6, max_recon < 1e-9 && max_unitary < 1e-9,
         "A D A* rebuilds X (Frobenius < 1e-9) and A*A = 1 (< 1e-9), 100 draws, n <= 5",
         "recon " + fmt(max_recon) + ", unitarity " + fmt(max_unitary), timer.seconds());
}

// 7. Pattern counts equal the dimension formulas on full windows.
void criterion_pattern_windows() {
  Timer timer;
  long long gl_cases = 0, sp_cases = 0, mismatches = 0;
  std::vector<long long> top;
  // All nonincreasing tops of length 1..4 with entries in [0,4].
  std::function<void(int, long long)> gl_rec = [&](int len, long long lo) {
    if (len == 0) {
      ++gl_cases;
      if (count_gl_patterns(top) != weyl_dim_gl(top)) ++mismatches;
      return;
    }
    for (long long v = lo; v >= 0; --v) {
      top.push_back(v);
      gl_rec(len - 1, v);
      top.pop_back();
    }
  };
  for (int len = 1; len <= 4; ++len) gl_rec(len, 4);
  // All nonincreasing nonpositive tops of length 1..3 with entries in [-3,0].
  std::function<void(int, long long)> sp_rec = [&](int len, long long hi) {
    if (len == 0) {
      ++sp_cases;
      if (count_sp_patterns(top) != weyl_dim_sp(top)) ++mismatches;
      return;
    }
    for (long long v = hi; v >= -3; --v) {
      top.push_back(v);
      sp_rec(len - 1, v);
      top.pop_back();
    }
  };
  for (int len = 1; len <= 3; ++len) sp_rec(len, 0);
  const double secs = timer.seconds();
  report(7, mismatches == 0 && gl_cases == 125 && sp_cases == 34 && secs < 30.0,
         "pattern counts match dimension formulas exactly on both windows",
         std::to_string(gl_cases) + " + " + std::to_string(sp_cases) + " tops, " +
             std::to_string(mismatches) + " mismatches",
         secs);
}

// 8. Truncated-series suite at order 6 for n = 1, 2, 3.
void criterion_series_suite() {
  Timer timer;
  bool all = true;
  double worst_factorize = 0.0, worst_corner = 0.0, worst_invariance = 0.0, worst_poisson = 0.0;
  for (int n = 1; n <= 3; ++n) {
    SuiteConfig cfg;
    cfg.n = n;
    cfg.lambda.clear();
    cfg.order = 6;
    cfg.trials = 20;  // membership sampling enforces >= 50 internally
    cfg.seed = 7;
    nlohmann::ordered_json rep = run_suite("yangian", cfg);
    for (const char* sub : {"factorize", "stabilizer", "limits", "psi", "pullback", "poisson"})
      all = all && rep.at(sub).at("pass").get<bool>();
    worst_factorize = std::max(worst_factorize, rep["factorize"]["max_residual"].get<double>());
    worst_corner = std::max(worst_corner, rep["psi"]["max_corner_gap"].get<double>());
    worst_invariance =
        std::max(worst_invariance, rep["psi"]["max_subgroup_invariance_defect"].get<double>());
    worst_poisson =
        std::max(worst_poisson, rep["poisson"]["max_jacobi_defect"].get<double>());
  }
  const double secs = timer.seconds();
  report(8, all && secs < 60.0,
         "series suite at order 6, n <= 3: factorization, membership, limits, corner maps, "
         "pullback, coordinate bracket",
         "factorize " + fmt(worst_factorize) + ", corner " + fmt(worst_corner) + ", invariance " +
             fmt(worst_invariance) + ", jacobi " + fmt(worst_poisson),
         secs);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// 9. Two identical CLI invocations produce byte-identical reports, even when
//    the worker cap differs.
void criterion_determinism(const char* cli_path) {
  Timer timer;
  if (!cli_path) {
    report(9, false, "two identical CLI runs produce byte-identical reports",
           "no CLI path given on the command line", timer.seconds());
    return;
  }
  const fs::path work =
      fs::temp_directory_path() / ("gcmlab_accept_" + std::to_string(::getpid()));
  std::error_code ec;
  fs::remove_all(work, ec);
  fs::create_directories(work / "a");
  fs::create_directories(work / "b");
  auto invoke = [&](const std::string& env, const fs::path& out) {
    std::string cmd = env + " \"" + std::string(cli_path) +
                      "\" run --suite all --n 2 --lambda=-1,-3 --trials 5 --seed 7 --out \"" +
                      out.string() + "\" > /dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  const int rc1 = invoke("GCM_LAB_THREADS=1", work / "a");
  const int rc2 = invoke("GCM_LAB_THREADS=8", work / "b");
  bool identical = rc1 == 0 && rc2 == 0;
  int files = 0;
  if (identical) {
    std::map<std::string, std::string> a, b;
    for (const auto& e : fs::directory_iterator(work / "a"))
      a[e.path().filename().string()] = slurp(e.path());
    for (const auto& e : fs::directory_iterator(work / "b"))
      b[e.path().filename().string()] = slurp(e.path());
    identical = !a.empty() && a == b;
    files = static_cast<int>(a.size());
  }
  fs::remove_all(work, ec);
  report(9, identical, "two identical CLI runs produce byte-identical reports",
         rc1 == 0 && rc2 == 0
             ? (std::to_string(files) + " report files compared, exit codes 0/0")
             : ("exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2)),
         timer.seconds());
}

template <typename F>
void guarded(int id, const char* what, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, false, what, std::string("exception: ") + e.what(), 0.0);
  }
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  guarded(1, "bracket engine oracle", [] { criterion_linear_oracle(); });
  guarded(2, "family commutativity", [] { criterion_commutativity(); });
  guarded(3, "family independence", [] { criterion_independence(); });
  guarded(4, "reduced-space invariance", [] { criterion_reduced_invariance(); });
  guarded(5, "formula consistency", [] { criterion_formula_consistency(); });
  guarded(6, "diagonalization round trip", [] { criterion_diagonalization(); });
  guarded(7, "pattern windows", [] { criterion_pattern_windows(); });
  guarded(8, "series suite", [] { criterion_series_suite(); });
  guarded(9, "CLI determinism", [cli] { criterion_determinism(cli); });
  std::printf("acceptance: %d/9 criteria passed\n", 9 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
