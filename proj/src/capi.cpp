#include "gcmlab/capi.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <string>

#include "gcmlab/errors.hpp"
#include "gcmlab/explain.hpp"
#include "gcmlab/gcm_system.hpp"
#include "gcmlab/matrix_io.hpp"
#include "gcmlab/patterns.hpp"
#include "gcmlab/rng.hpp"
#include "gcmlab/spectral.hpp"
#include "gcmlab/suites.hpp"

namespace {

thread_local std::string g_last_error;

gcm_status fail(gcm_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Maps the C++ error taxonomy onto status codes; never lets an exception cross
// the C boundary.
template <typename Fn>
gcm_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const gcm::UnknownLabel& e) {
    return fail(GCM_ERR_UNKNOWN_LABEL, e.what());
  } catch (const gcm::ParseError& e) {
    return fail(GCM_ERR_PARSE, e.what());
  } catch (const gcm::DegenerateInput& e) {
    return fail(GCM_ERR_DEGENERATE, e.what());
  } catch (const gcm::InvalidArgument& e) {
    return fail(GCM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(GCM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GCM_ERR_INTERNAL, "unknown error");
  }
}

gcm_status alloc_out(const std::string& s, char** out) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) return fail(GCM_ERR_INTERNAL, "out of memory");
  std::memcpy(p, s.c_str(), s.size() + 1);
  *out = p;
  return GCM_OK;
}

gcm::PatternSpec make_spec(const char* kind, const long long* top, int len) {
  if (!kind || !top || len < 1)
    throw gcm::InvalidArgument("patterns: kind and a nonempty top row are required");
  gcm::PatternSpec spec;
  spec.kind = kind;
  spec.top.assign(top, top + len);
  spec.validate();
  return spec;
}

}  // namespace

struct gcm_orbit {
  gcm::OrbitPoint pt;
  std::uint64_t seed = 0;
};

extern "C" {

const char* gcm_version(void) { return "1.0.0"; }

const char* gcm_status_name(gcm_status s) {
  switch (s) {
    case GCM_OK: return "ok";
    case GCM_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case GCM_ERR_PARSE: return "parse-error";
    case GCM_ERR_DEGENERATE: return "degenerate-input";
    case GCM_ERR_UNKNOWN_LABEL: return "unknown-label";
    case GCM_ERR_INTERNAL: return "internal-error";
  }
  return "unknown-status";
}

const char* gcm_last_error(void) { return g_last_error.c_str(); }

void gcm_string_free(char* s) { std::free(s); }

gcm_status gcm_pattern_count(const char* kind, const long long* top, int len,
                             unsigned long long* out_count) {
  return guarded([&]() -> gcm_status {
    if (!out_count) return fail(GCM_ERR_INVALID_ARGUMENT, "out_count is null");
    *out_count = gcm::count_patterns(make_spec(kind, top, len));
    return GCM_OK;
  });
}

gcm_status gcm_weyl_dim(const char* kind, const long long* top, int len,
                        unsigned long long* out_dim) {
  return guarded([&]() -> gcm_status {
    if (!out_dim) return fail(GCM_ERR_INVALID_ARGUMENT, "out_dim is null");
    *out_dim = gcm::weyl_dim(make_spec(kind, top, len));
    return GCM_OK;
  });
}

gcm_status gcm_pattern_list_json(const char* kind, const long long* top, int len,
                                 char** out_json) {
  return guarded([&]() -> gcm_status {
    if (!out_json) return fail(GCM_ERR_INVALID_ARGUMENT, "out_json is null");
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const gcm::Pattern& p : gcm::list_patterns(make_spec(kind, top, len))) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const gcm::PatternRow& r : p) rows.push_back(r);
      arr.push_back(std::move(rows));
    }
    return alloc_out(arr.dump(), out_json);
  });
}

gcm_status gcm_orbit_sample(const double* lambda, int n, uint64_t seed, gcm_orbit** out) {
  return guarded([&]() -> gcm_status {
    if (!out) return fail(GCM_ERR_INVALID_ARGUMENT, "out is null");
    if (!lambda || n < 1) return fail(GCM_ERR_INVALID_ARGUMENT, "lambda must have length >= 1");
    gcm::SpectrumRequest req{std::vector<double>(lambda, lambda + n), true};
    gcm::Rng rng(gcm::Rng::mix(seed, 0));
    gcm::OrbitPoint pt = gcm::sample_generic_orbit(req, rng, 1e-6);
    *out = new gcm_orbit{std::move(pt), seed};
    return GCM_OK;
  });
}

gcm_status gcm_orbit_from_matrix_json(const char* json_text, gcm_orbit** out) {
  return guarded([&]() -> gcm_status {
    if (!out) return fail(GCM_ERR_INVALID_ARGUMENT, "out is null");
    if (!json_text) return fail(GCM_ERR_INVALID_ARGUMENT, "json_text is null");
    gcm::QMatrix x = gcm::matrix_from_json_text(json_text);
    gcm::OrbitPoint pt = gcm::diagonalize(x);
    *out = new gcm_orbit{std::move(pt), 0};
    return GCM_OK;
  });
}

void gcm_orbit_free(gcm_orbit* o) { delete o; }

gcm_status gcm_orbit_dim(const gcm_orbit* o, int* out_n) {
  return guarded([&]() -> gcm_status {
    if (!o || !out_n) return fail(GCM_ERR_INVALID_ARGUMENT, "null argument");
    *out_n = o->pt.X.rows();
    return GCM_OK;
  });
}

gcm_status gcm_orbit_lambda(const gcm_orbit* o, double* out, int len) {
  return guarded([&]() -> gcm_status {
    if (!o || !out) return fail(GCM_ERR_INVALID_ARGUMENT, "null argument");
    if (len != static_cast<int>(o->pt.lam.size()))
      return fail(GCM_ERR_INVALID_ARGUMENT, "lambda buffer length mismatch");
    for (int i = 0; i < len; ++i) out[i] = o->pt.lam[static_cast<std::size_t>(i)];
    return GCM_OK;
  });
}

gcm_status gcm_orbit_matrix_json(const gcm_orbit* o, char** out_json) {
  return guarded([&]() -> gcm_status {
    if (!o || !out_json) return fail(GCM_ERR_INVALID_ARGUMENT, "null argument");
    return alloc_out(gcm::matrix_to_json(o->pt.X).dump(), out_json);
  });
}

gcm_status gcm_orbit_family_json(const gcm_orbit* o, char** out_json) {
  return guarded([&]() -> gcm_status {
    if (!o || !out_json) return fail(GCM_ERR_INVALID_ARGUMENT, "null argument");
    return alloc_out(gcm::family_report(o->pt, o->seed).dump(2) + "\n", out_json);
  });
}

gcm_status gcm_orbit_eval(const gcm_orbit* o, const char* label, double* out_value) {
  return guarded([&]() -> gcm_status {
    if (!o || !label || !out_value) return fail(GCM_ERR_INVALID_ARGUMENT, "null argument");
    for (const gcm::FamilyMember& fm : gcm::assemble_family(o->pt.X.rows()))
      if (fm.label == label) {
        *out_value = fm.eval(o->pt);
        return GCM_OK;
      }
    throw gcm::UnknownLabel(std::string("no family member '") + label + "' at this dimension");
  });
}

gcm_status gcm_run_suite(const char* name, const char* config_json, char** out_json) {
  return guarded([&]() -> gcm_status {
    if (!name || !out_json) return fail(GCM_ERR_INVALID_ARGUMENT, "null argument");
    gcm::SuiteConfig cfg;
    if (config_json && config_json[0] != '\0') {
      nlohmann::json j = nlohmann::json::parse(config_json, nullptr, false);
      if (j.is_discarded()) throw gcm::ParseError("config: invalid JSON");
      cfg = gcm::SuiteConfig::from_json(j);
    }
    return alloc_out(gcm::run_suite(name, cfg).dump(2) + "\n", out_json);
  });
}

gcm_status gcm_explain(const char* label, char** out_text) {
  return guarded([&]() -> gcm_status {
    if (!label || !out_text) return fail(GCM_ERR_INVALID_ARGUMENT, "null argument");
    return alloc_out(gcm::explain(label), out_text);
  });
}

}  // extern "C"
