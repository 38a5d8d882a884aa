#include <doctest.h>

#include <string>
#include <vector>

#include "gcmlab/errors.hpp"
#include "gcmlab/explain.hpp"
#include "gcmlab/suites.hpp"

using namespace gcm;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.n = 2;
  cfg.lambda = {-1.0, -3.0};
  cfg.trials = 4;
  cfg.seed = 7;
  cfg.order = 6;
  return cfg;
}

}  // namespace

TEST_CASE("config defaults, serialization, and validation") {
  SuiteConfig cfg;
  CHECK(cfg.n == 2);
  CHECK(cfg.trials == 20);
  CHECK(cfg.tol == 2e-5);
  CHECK(cfg.fd_step == 1e-5);
  CHECK(cfg.order == 6);
  CHECK(cfg.seed == 7);
  // Default spectrum is -1, -2, ..., -n.
  std::vector<double> lam = cfg.lam();
  REQUIRE(lam.size() == 2);
  CHECK(lam[0] == -1.0);
  CHECK(lam[1] == -2.0);

  SuiteConfig round = SuiteConfig::from_json(cfg.to_json());
  CHECK(round.to_json() == cfg.to_json());

  CHECK_THROWS_AS((void)SuiteConfig::from_json(nlohmann::json::parse(R"({"n": 0})")),
                  InvalidArgument);
  CHECK_THROWS_AS((void)SuiteConfig::from_json(nlohmann::json::parse(R"({"trials": -1})")),
                  InvalidArgument);
  CHECK_THROWS_AS((void)SuiteConfig::from_json(nlohmann::json::parse(R"({"n": "two"})")),
                  ParseError);
  // Mismatched spectrum length surfaces when the suite resolves it.
  SuiteConfig bad;
  bad.n = 3;
  bad.lambda = {-1.0, -2.0};
  CHECK_THROWS_AS((void)bad.lam(), InvalidArgument);
}

TEST_CASE("each suite passes on the small reference configuration") {
  SuiteConfig cfg = small_config();
  for (const std::string& name : suite_names()) {
    nlohmann::ordered_json rep = run_suite(name, cfg);
    INFO("suite ", name);
    CHECK(rep.at("pass").get<bool>());
    CHECK(rep.at("suite").get<std::string>() == name);
    CHECK(rep.contains("config"));
  }
  CHECK_THROWS_AS((void)run_suite("nope", cfg), UnknownLabel);
}

TEST_CASE("aggregate run nests every suite and reproduces byte-identical output") {
  SuiteConfig cfg = small_config();
  cfg.trials = 3;
  nlohmann::ordered_json a = run_all_suites(cfg);
  nlohmann::ordered_json b = run_all_suites(cfg);
  CHECK(a.dump(2) == b.dump(2));
  CHECK(a.at("pass").get<bool>());
  for (const std::string& name : suite_names())
    if (name != "all") CHECK(a.at("suites").contains(name));
  // Changing the seed changes the sampled data but not the verdict.
  cfg.seed = 8;
  nlohmann::ordered_json c = run_all_suites(cfg);
  CHECK(c.dump() != a.dump());
  CHECK(c.at("pass").get<bool>());
}

TEST_CASE("commute suite records the worst pair below tolerance") {
  nlohmann::ordered_json rep = run_suite("commute", small_config());
  CHECK(rep.at("worst_value").get<double>() < 2e-5);
  CHECK(rep.at("max_abs_bracket").size() == 6);
}

TEST_CASE("independence suite sees rank n^2 at every point") {
  nlohmann::ordered_json rep = run_suite("independence", small_config());
  CHECK(rep.at("expected_rank").get<int>() == 4);
  for (const auto& r : rep.at("ranks")) CHECK(r.get<int>() == 4);
}

TEST_CASE("reduced suite reports invariance defects and a moving control") {
  nlohmann::ordered_json rep = run_suite("reduced", small_config());
  CHECK(rep.at("max_g_defect").get<double>() < 1e-9);
  CHECK(rep.at("max_g_last_defect").get<double>() < 1e-9);
  CHECK(rep.at("max_f_defect").get<double>() < 1e-9);
  CHECK(rep.at("negative_control_min_move").get<double>() > 1e-6);
}

TEST_CASE("yangian suite nests the six sub-suites") {
  nlohmann::ordered_json rep = run_suite("yangian", small_config());
  for (const char* sub :
       {"factorize", "stabilizer", "limits", "psi", "pullback", "poisson"}) {
    INFO("sub-suite ", sub);
    CHECK(rep.at(sub).at("pass").get<bool>());
  }
}

TEST_CASE("explain covers every family label form and rejects junk") {
  for (const std::string& label :
       {std::string("thimm(1,1)"), std::string("g(0,1)"), std::string("g_last(2)"),
        std::string("f(1,2)"), std::string("family"), std::string("commute"),
        std::string("yangian.factorize")}) {
    std::string text = explain(label);
    CHECK(text.size() > 40);
  }
  CHECK_THROWS_AS((void)explain("bogus"), UnknownLabel);
  CHECK_THROWS_AS((void)explain("thimm(0,1)"), UnknownLabel);
  CHECK(known_labels().size() >= 10);
}
