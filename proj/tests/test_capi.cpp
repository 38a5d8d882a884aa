#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcmlab/capi.h"

namespace {

// RAII wrapper for strings handed out by the C API.
struct ApiStr {
  char* p = nullptr;
  ~ApiStr() { gcm_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct OrbitHandle {
  gcm_orbit* o = nullptr;
  ~OrbitHandle() { gcm_orbit_free(o); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(gcm_version() != nullptr);
  CHECK(std::strlen(gcm_version()) > 0);
  CHECK(std::string(gcm_status_name(GCM_OK)) == "ok");
  CHECK(std::string(gcm_status_name(GCM_ERR_PARSE)) == "parse-error");
  CHECK(std::string(gcm_status_name(GCM_ERR_UNKNOWN_LABEL)) == "unknown-label");
}

TEST_CASE("pattern counting through the C surface") {
  const long long top_gl[] = {2, 1, 0};
  unsigned long long count = 0, dim = 0;
  REQUIRE(gcm_pattern_count("gl", top_gl, 3, &count) == GCM_OK);
  REQUIRE(gcm_weyl_dim("gl", top_gl, 3, &dim) == GCM_OK);
  CHECK(count == 8);
  CHECK(dim == 8);

  const long long top_sp[] = {0, -1};
  REQUIRE(gcm_pattern_count("sp", top_sp, 2, &count) == GCM_OK);
  CHECK(count == 4);

  ApiStr listing;
  REQUIRE(gcm_pattern_list_json("sp", top_sp, 2, &listing.p) == GCM_OK);
  auto parsed = nlohmann::json::parse(listing.str());
  CHECK(parsed.is_array());
  CHECK(parsed.size() == 4);

  // Invalid inputs: wrong kind, non-chamber top, null output.
  CHECK(gcm_pattern_count("zz", top_gl, 3, &count) == GCM_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(gcm_last_error()) > 0);
  const long long bad_sp[] = {1, 0};
  CHECK(gcm_pattern_count("sp", bad_sp, 2, &count) == GCM_ERR_INVALID_ARGUMENT);
  CHECK(gcm_pattern_count("gl", nullptr, 3, &count) == GCM_ERR_INVALID_ARGUMENT);
  CHECK(gcm_pattern_count("gl", top_gl, 3, nullptr) == GCM_ERR_INVALID_ARGUMENT);
  CHECK(gcm_pattern_count("gl", top_gl, 0, &count) == GCM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("orbit lifecycle: sample, inspect, evaluate, round trip") {
  const double lambda[] = {-1.0, -3.0};
  OrbitHandle h;
  REQUIRE(gcm_orbit_sample(lambda, 2, 7, &h.o) == GCM_OK);
  REQUIRE(h.o != nullptr);

  int n = 0;
  REQUIRE(gcm_orbit_dim(h.o, &n) == GCM_OK);
  CHECK(n == 2);

  double lam_back[2] = {0, 0};
  REQUIRE(gcm_orbit_lambda(h.o, lam_back, 2) == GCM_OK);
  CHECK(lam_back[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(lam_back[1] == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(gcm_orbit_lambda(h.o, lam_back, 1) == GCM_ERR_INVALID_ARGUMENT);

  // Family report carries n^2 = 4 values; eval agrees with it label by label.
  ApiStr fam;
  REQUIRE(gcm_orbit_family_json(h.o, &fam.p) == GCM_OK);
  auto rep = nlohmann::json::parse(fam.str());
  REQUIRE(rep.at("values").size() == 4);
  for (const auto& [label, value] : rep.at("values").items()) {
    double v = 0.0;
    REQUIRE(gcm_orbit_eval(h.o, label.c_str(), &v) == GCM_OK);
    CHECK(v == doctest::Approx(value.get<double>()).epsilon(1e-14));
  }

  double v = 0.0;
  CHECK(gcm_orbit_eval(h.o, "thimm(9,9)", &v) == GCM_ERR_UNKNOWN_LABEL);
  CHECK(std::strlen(gcm_last_error()) > 0);

  // Serialize the matrix and rebuild an orbit from it: same spectrum, same
  // family values (the rebuilt diagonalizer is the same canonical one).
  ApiStr mat;
  REQUIRE(gcm_orbit_matrix_json(h.o, &mat.p) == GCM_OK);
  OrbitHandle h2;
  REQUIRE(gcm_orbit_from_matrix_json(mat.p, &h2.o) == GCM_OK);
  ApiStr fam2;
  REQUIRE(gcm_orbit_family_json(h2.o, &fam2.p) == GCM_OK);
  auto rep2 = nlohmann::json::parse(fam2.str());
  for (const auto& [label, value] : rep.at("values").items())
    CHECK(rep2.at("values").at(label).get<double>() ==
          doctest::Approx(value.get<double>()).epsilon(1e-9));
}

TEST_CASE("orbit construction rejects bad input") {
  OrbitHandle h;
  const double lambda[] = {-1.0, -3.0};
  CHECK(gcm_orbit_sample(nullptr, 2, 7, &h.o) == GCM_ERR_INVALID_ARGUMENT);
  CHECK(gcm_orbit_sample(lambda, 0, 7, &h.o) == GCM_ERR_INVALID_ARGUMENT);
  const double increasing[] = {-3.0, -1.0};
  CHECK(gcm_orbit_sample(increasing, 2, 7, &h.o) == GCM_ERR_INVALID_ARGUMENT);
  const double repeated[] = {-2.0, -2.0};
  CHECK(gcm_orbit_sample(repeated, 2, 7, &h.o) == GCM_ERR_INVALID_ARGUMENT);

  CHECK(gcm_orbit_from_matrix_json("not json", &h.o) == GCM_ERR_PARSE);
  CHECK(gcm_orbit_from_matrix_json(R"({"n": 1, "entries": [[1,0,0,0]]})", &h.o) ==
        GCM_ERR_INVALID_ARGUMENT);  // not skew-hermitian
  CHECK(gcm_orbit_from_matrix_json(nullptr, &h.o) == GCM_ERR_INVALID_ARGUMENT);

  int n = 0;
  CHECK(gcm_orbit_dim(nullptr, &n) == GCM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("suite runner: reports, determinism, error mapping") {
  const char* config = R"({"n": 2, "lambda": [-1, -3], "trials": 3, "seed": 7})";
  ApiStr a, b;
  REQUIRE(gcm_run_suite("patterns", config, &a.p) == GCM_OK);
  REQUIRE(gcm_run_suite("patterns", config, &b.p) == GCM_OK);
  CHECK(a.str() == b.str());
  auto rep = nlohmann::json::parse(a.str());
  CHECK(rep.at("suite") == "patterns");
  CHECK(rep.at("pass").get<bool>());

  ApiStr defaults;
  REQUIRE(gcm_run_suite("patterns", nullptr, &defaults.p) == GCM_OK);
  ApiStr empty;
  REQUIRE(gcm_run_suite("patterns", "{}", &empty.p) == GCM_OK);
  CHECK(defaults.str() == empty.str());

  ApiStr out;
  CHECK(gcm_run_suite("nope", config, &out.p) == GCM_ERR_UNKNOWN_LABEL);
  CHECK(gcm_run_suite("patterns", "{nope", &out.p) == GCM_ERR_PARSE);
  CHECK(gcm_run_suite("patterns", R"({"n": -1})", &out.p) == GCM_ERR_INVALID_ARGUMENT);
  CHECK(gcm_run_suite(nullptr, config, &out.p) == GCM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("explain through the C surface") {
  ApiStr text;
  REQUIRE(gcm_explain("thimm(1,1)", &text.p) == GCM_OK);
  CHECK(text.str().size() > 40);
  ApiStr none;
  CHECK(gcm_explain("zzz", &none.p) == GCM_ERR_UNKNOWN_LABEL);
  CHECK(gcm_explain(nullptr, &none.p) == GCM_ERR_INVALID_ARGUMENT);
}
