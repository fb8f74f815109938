#include "smyth/smyth.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <string_view>

#include "smyth/error.hpp"
#include "smyth/figure.hpp"
#include "smyth/local_witness.hpp"
#include "smyth/number_theory.hpp"
#include "smyth/serialize.hpp"
#include "smyth/solver.hpp"

#ifndef SMYTH_VERSION_STRING
#define SMYTH_VERSION_STRING "0.0.0"
#endif

struct smyth_coeffs {
  smyth::Coefficients value;
};

struct smyth_solution {
  smyth::SolveReport report;
  bool timings = false;
};

namespace {

thread_local std::string g_last_error;

smyth_status set_error(smyth_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

smyth_status from_code(smyth::ErrorCode c) {
  switch (c) {
    case smyth::ErrorCode::kDomain: return SMYTH_ERR_DOMAIN;
    case smyth::ErrorCode::kParse: return SMYTH_ERR_PARSE;
    case smyth::ErrorCode::kFeasibility: return SMYTH_ERR_FEASIBILITY;
    case smyth::ErrorCode::kResource: return SMYTH_ERR_RESOURCE;
    case smyth::ErrorCode::kInternal: return SMYTH_ERR_INTERNAL;
  }
  return SMYTH_ERR_INTERNAL;
}

// Runs f, mapping exceptions to status codes.
template <class F>
smyth_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const smyth::Error& e) {
    return set_error(from_code(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(SMYTH_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SMYTH_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SMYTH_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::size_t cap(uint64_t requested) {
  return requested ? static_cast<std::size_t>(requested) : smyth::max_points_from_env();
}

smyth::Rational dilation_arg(const char* text) {
  smyth::Rational d = smyth::parse_rational(text);
  if (d <= 0) smyth::fail(smyth::ErrorCode::kDomain, "dilation must be positive");
  return d;
}

smyth::BigInt prime_arg(const char* text) {
  smyth::Rational p = smyth::parse_rational(text);
  if (!smyth::is_integer(p) || !smyth::is_prime(p.get_num()))
    smyth::fail(smyth::ErrorCode::kDomain, std::string(text) + " is not prime");
  return p.get_num();
}

}  // namespace

#define SMYTH_REQUIRE(cond)                                               \
  do {                                                                    \
    if (!(cond)) return set_error(SMYTH_ERR_ARGUMENT, "null argument: " #cond); \
  } while (0)

extern "C" {

const char* smyth_version(void) { return SMYTH_VERSION_STRING; }

const char* smyth_last_error(void) { return g_last_error.c_str(); }

void smyth_string_free(char* s) { std::free(s); }

smyth_status smyth_coeffs_parse(const char* text, smyth_coeffs** out) {
  SMYTH_REQUIRE(text && out);
  *out = nullptr;
  return guarded([&] {
    auto values = smyth::parse_rational_list(text);
    *out = new smyth_coeffs{smyth::Coefficients::normalize(values)};
    return SMYTH_OK;
  });
}

void smyth_coeffs_free(smyth_coeffs* c) { delete c; }

size_t smyth_coeffs_size(const smyth_coeffs* c) { return c ? c->value.size() : 0; }

smyth_status smyth_coeffs_json(const smyth_coeffs* c, char** json) {
  SMYTH_REQUIRE(c && json);
  return guarded([&] {
    *json = dup(smyth::coefficients_json(c->value).dump());
    return SMYTH_OK;
  });
}

smyth_status smyth_decide(const smyth_coeffs* c, int* solvable, char** json) {
  SMYTH_REQUIRE(c && solvable);
  return guarded([&] {
    const smyth::Decision d = smyth::decide(c->value);
    *solvable = d.solvable ? 1 : 0;
    if (json) *json = dup(smyth::decision_json(c->value, d).dump(2));
    return SMYTH_OK;
  });
}

void smyth_solve_options_init(smyth_solve_options* o) {
  if (!o) return;
  o->d0 = "8";
  o->max_d = "512";
  o->max_points = 0;
  o->include_timings = 0;
  o->compact = 1;
  o->log = nullptr;
  o->log_user = nullptr;
}

smyth_status smyth_solve(const smyth_coeffs* c, const smyth_solve_options* o, smyth_solution** out) {
  SMYTH_REQUIRE(c && out);
  *out = nullptr;
  return guarded([&] {
    smyth_solve_options defaults;
    smyth_solve_options_init(&defaults);
    if (!o) o = &defaults;
    smyth::SolveOptions opts;
    opts.d0 = dilation_arg(o->d0 ? o->d0 : defaults.d0);
    opts.max_d = dilation_arg(o->max_d ? o->max_d : defaults.max_d);
    if (opts.max_d < opts.d0) smyth::fail(smyth::ErrorCode::kDomain, "max-d is below d0");
    opts.max_points = cap(o->max_points);
    opts.compact = o->compact != 0;
    if (o->log) {
      smyth_log_fn fn = o->log;
      void* user = o->log_user;
      opts.log = [fn, user](const std::string& line) { fn(line.c_str(), user); };
    }
    auto* s = new smyth_solution{smyth::solve(c->value, opts), o->include_timings != 0};
    if (s->report.failure) g_last_error = *s->report.failure;
    *out = s;
    return SMYTH_OK;
  });
}

void smyth_solution_free(smyth_solution* s) { delete s; }

smyth_solution_kind smyth_solution_kind_of(const smyth_solution* s) {
  if (!s) return SMYTH_EXHAUSTED;
  if (s->report.witness) return SMYTH_SOLVED;
  if (!s->report.decision.solvable) return SMYTH_UNSOLVABLE;
  return SMYTH_EXHAUSTED;
}

smyth_status smyth_solution_report_json(const smyth_solution* s, char** json) {
  SMYTH_REQUIRE(s && json);
  return guarded([&] {
    *json = dup(smyth::report_json(s->report, s->timings).dump(2));
    return SMYTH_OK;
  });
}

smyth_status smyth_solution_witness_json(const smyth_solution* s, char** json) {
  SMYTH_REQUIRE(s && json);
  if (!s->report.witness) return set_error(SMYTH_ERR_DOMAIN, "no witness");
  return guarded([&] {
    *json = dup(smyth::witness_json(s->report.coeffs, *s->report.witness).dump(2));
    return SMYTH_OK;
  });
}

smyth_status smyth_solution_witness_csv(const smyth_solution* s, char** csv) {
  SMYTH_REQUIRE(s && csv);
  if (!s->report.witness) return set_error(SMYTH_ERR_DOMAIN, "no witness");
  return guarded([&] {
    *csv = dup(smyth::witness_csv(*s->report.witness));
    return SMYTH_OK;
  });
}

smyth_status smyth_verify_witness(const smyth_coeffs* c, const char* witness, int* valid, int* trivial,
                                  char** json) {
  SMYTH_REQUIRE(c && witness && valid);
  return guarded([&] {
    const smyth::IntMatrix m = smyth::parse_witness_matrix(witness);
    const smyth::WitnessCheck r = smyth::verify_witness(c->value, m);
    *valid = r.valid ? 1 : 0;
    if (trivial) *trivial = r.trivial ? 1 : 0;
    if (json) {
      smyth::Json doc;
      doc["valid"] = r.valid;
      doc["trivial"] = r.trivial;
      doc["failing_row"] = r.failing_row ? smyth::Json(*r.failing_row) : smyth::Json(nullptr);
      doc["failing_column"] = r.failing_column ? smyth::Json(*r.failing_column) : smyth::Json(nullptr);
      doc["diagnostic"] = r.diagnostic;
      *json = dup(doc.dump(2));
    }
    return SMYTH_OK;
  });
}

smyth_status smyth_certificate(const smyth_coeffs* c, const char* dilation, uint64_t max_points, int* certificate,
                               char** json) {
  SMYTH_REQUIRE(c && dilation && certificate);
  return guarded([&] {
    const smyth::ShellProblem sp = smyth::solve_at(c->value, dilation_arg(dilation), {}, cap(max_points));
    smyth::Json doc;
    doc["coefficients"] = smyth::coefficients_json(c->value);
    doc["D"] = smyth::rational_json(sp.shell.dilation());
    doc["points"] = sp.shell.size();
    doc["vertices"] = sp.graph.vertex_count();
    doc["edges"] = sp.graph.edge_count();
    if (const auto* cert = std::get_if<smyth::GordanCertificate>(&sp.outcome)) {
      *certificate = 1;
      doc["outcome"] = "certificate";
      doc["certificate"] = smyth::certificate_json(*cert);
    } else {
      *certificate = 0;
      doc["outcome"] = "feasible";
      doc["weighting"] = smyth::weighting_json(sp.graph, std::get<smyth::BalancedWeighting>(sp.outcome));
    }
    if (json) *json = dup(doc.dump(2));
    return SMYTH_OK;
  });
}

smyth_status smyth_box_oracle(const smyth_coeffs* c, long bound, uint64_t max_points, int* found, char** json) {
  SMYTH_REQUIRE(c && found);
  if (bound < 1) return set_error(SMYTH_ERR_ARGUMENT, "box bound must be at least 1");
  return guarded([&] {
    const smyth::BoxOracleResult r = smyth::box_oracle(c->value, bound, cap(max_points));
    *found = r.weighting ? 1 : 0;
    smyth::Json doc;
    doc["coefficients"] = smyth::coefficients_json(c->value);
    doc["B"] = bound;
    doc["vertices"] = r.graph.vertex_count();
    doc["edges"] = r.graph.edge_count();
    doc["found"] = r.weighting.has_value();
    if (r.weighting) doc["weighting"] = smyth::weighting_json(r.graph, *r.weighting);
    if (json) *json = dup(doc.dump(2));
    return SMYTH_OK;
  });
}

smyth_status smyth_figure_svg(const smyth_coeffs* c, const char* dilation, char** svg) {
  SMYTH_REQUIRE(c && dilation && svg);
  return guarded([&] {
    *svg = dup(smyth::figure_svg(c->value, dilation_arg(dilation), SMYTH_VERSION_STRING));
    return SMYTH_OK;
  });
}

smyth_status smyth_shell_csv(const smyth_coeffs* c, const char* dilation, uint64_t max_points, char** csv) {
  SMYTH_REQUIRE(c && dilation && csv);
  return guarded([&] {
    *csv = dup(smyth::shell_csv(smyth::shell_at(c->value, dilation_arg(dilation), cap(max_points))));
    return SMYTH_OK;
  });
}

smyth_status smyth_local_check(const smyth_coeffs* c, const char* prime, unsigned k, int* identical, char** json) {
  SMYTH_REQUIRE(c && prime && identical);
  return guarded([&] {
    const smyth::BigInt p = prime_arg(prime);
    const smyth::LocalUniformResult r = smyth::local_uniform_check(c->value, p, k);
    *identical = r.identical ? 1 : 0;
    if (json) *json = dup(smyth::local_uniform_json(c->value, p, k, r).dump(2));
    return SMYTH_OK;
  });
}

smyth_status smyth_triangle_real(const char* lengths, unsigned dim, char** json) {
  SMYTH_REQUIRE(lengths && json);
  return guarded([&] {
    const auto ls = smyth::parse_rational_list(lengths);
    const smyth::RealConfiguration r = smyth::converse_triangle_real(ls, dim);
    smyth::Json doc;
    doc["lengths"] = smyth::Json::array();
    for (const auto& l : ls) doc["lengths"].push_back(smyth::rational_json(l));
    doc["vectors"] = r.vectors;
    doc["residual"] = r.residual;
    *json = dup(doc.dump(2));
    return SMYTH_OK;
  });
}

smyth_status smyth_triangle_nonarch(const char* valuations, const char* prime, unsigned dim, char** json) {
  SMYTH_REQUIRE(valuations && prime && json);
  return guarded([&] {
    const smyth::BigInt p = prime_arg(prime);
    std::vector<std::optional<long>> vs;
    std::string_view rest(valuations);
    while (true) {
      const auto comma = rest.find(',');
      std::string item(rest.substr(0, comma));
      const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
      item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
      if (item == "inf") {
        vs.emplace_back(std::nullopt);
      } else {
        const smyth::Rational v = smyth::parse_rational(item);
        if (!smyth::is_integer(v) || !v.get_num().fits_slong_p())
          smyth::fail(smyth::ErrorCode::kParse, "valuation '" + item + "' is not an integer");
        vs.emplace_back(v.get_num().get_si());
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    const auto vectors = smyth::converse_triangle_nonarch(vs, p, dim);
    smyth::Json doc;
    doc["prime"] = smyth::integer_json(p);
    doc["vectors"] = smyth::Json::array();
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      smyth::Json row = smyth::Json::array();
      for (const auto& x : vectors[i]) row.push_back(smyth::rational_json(x));
      const auto v = smyth::padic_vector_valuation(vectors[i], p);
      doc["vectors"].push_back(row);
      doc["valuations"].push_back(v ? smyth::Json(*v) : smyth::Json("inf"));
    }
    *json = dup(doc.dump(2));
    return SMYTH_OK;
  });
}

}  // extern "C"
