// Command-line front end. Talks to the solver only through smyth.h.
// Human-readable output uses 1-based indices; JSON output is 0-based.
#include <smyth/smyth.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kYes = 0, kNo = 1, kError = 2;

struct StrFree {
  void operator()(char* s) const { smyth_string_free(s); }
};
using Str = std::unique_ptr<char, StrFree>;

struct CoeffsFree {
  void operator()(smyth_coeffs* c) const { smyth_coeffs_free(c); }
};
using Coeffs = std::unique_ptr<smyth_coeffs, CoeffsFree>;

struct SolutionFree {
  void operator()(smyth_solution* s) const { smyth_solution_free(s); }
};

int report_error(smyth_status s) {
  static const char* names[] = {"ok", "domain", "parse", "feasibility", "resource", "internal", "argument"};
  const int i = static_cast<int>(s);
  std::cerr << "error (" << (i >= 0 && i < 7 ? names[i] : "unknown") << "): " << smyth_last_error() << "\n";
  return kError;
}

bool parse_coeffs(const std::string& text, Coeffs& out) {
  smyth_coeffs* c = nullptr;
  const smyth_status s = smyth_coeffs_parse(text.c_str(), &c);
  if (s != SMYTH_OK) {
    report_error(s);
    return false;
  }
  out.reset(c);
  return true;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

std::string join(const Json& arr) {
  std::string s;
  for (const auto& x : arr) {
    if (!s.empty()) s += ",";
    s += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return s;
}

std::string text_of(const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); }

void print_decision(const Json& d) {
  std::cout << "coefficients: " << join(d["coefficients"]) << "\n";
  std::cout << "solvable: " << (d["solvable"].get<bool>() ? "yes" : "no") << "\n";
  for (const auto& p : d["places"]) {
    const std::string place = p["place"].get<std::string>();
    const bool real = place == "real";
    const std::size_t i = p["index"].get<std::size_t>() + 1;
    std::cout << "  place " << (real ? "real" : "p=" + place) << ": " << (p["holds"].get<bool>() ? "holds" : "FAILS");
    if (real)
      std::cout << "  |a_" << i << "| = " << text_of(p["lhs"]) << (p["holds"].get<bool>() ? " <= " : " > ")
                << "sum of others = " << text_of(p["rhs"]);
    else
      std::cout << "  v(a_" << i << ") = " << text_of(p["lhs"]) << (p["holds"].get<bool>() ? " >= " : " < ")
                << "min of others = " << text_of(p["rhs"]);
    std::cout << "\n";
  }
}

void print_certificate(const Json& cert) {
  std::cout << "Gordan certificate: " << cert["vertices"].size() << " vertices, margin " << text_of(cert["margin"])
            << "\n";
}

void log_line(const char* line, void*) { std::cerr << line << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructive solver for vanishing sums of Galois conjugates with rational coefficients"};
  app.set_version_flag("--version", std::string(smyth_version()));
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON on stdout (0-based indices)");

  std::string coeffs_text;
  auto add_coeffs = [&](CLI::App* sub) {
    sub->add_option("coeffs", coeffs_text, "Comma-separated rationals, e.g. 3/2,2,5/2 (use -- before negatives)")
        ->required();
    sub->add_flag("--json", json, "Machine-readable JSON on stdout");
  };

  auto* decide = app.add_subcommand("decide", "Check the local conditions");
  add_coeffs(decide);

  std::string d0 = "8", max_d = "512", out_path, csv_path;
  uint64_t max_points = 0;
  bool verbose = false, timings = false;
  auto* solve = app.add_subcommand("solve", "Construct a verified witness matrix");
  add_coeffs(solve);
  solve->add_option("--d0", d0, "Initial dilation");
  solve->add_option("--max-d", max_d, "Largest dilation tried");
  solve->add_option("--max-points", max_points, "Enumeration cap (default: SMYTH_MAX_POINTS or 10^7)");
  solve->add_option("--out", out_path, "Write the witness JSON here");
  solve->add_option("--csv", csv_path, "Write the witness rows as CSV here");
  solve->add_flag("--verbose", verbose, "Progress log on stderr");
  solve->add_flag("--timings", timings, "Include per-stage timings in the report");

  std::string witness_path;
  auto* verify = app.add_subcommand("verify", "Check a witness matrix");
  add_coeffs(verify);
  verify->add_option("--witness", witness_path, "Witness JSON file")->required();

  std::string dilation = "8";
  auto* certificate = app.add_subcommand("certificate", "Balance LP on one shell: certificate or weighting");
  add_coeffs(certificate);
  certificate->add_option("--D", dilation, "Dilation");
  certificate->add_option("--max-points", max_points, "Enumeration cap");
  certificate->add_option("--shell-csv", csv_path, "Write the shell points as CSV here");

  long bound = 3;
  auto* oracle = app.add_subcommand("oracle", "Balance LP on all points of a coordinate box");
  add_coeffs(oracle);
  oracle->add_option("--B", bound, "Box half-width")->check(CLI::PositiveNumber);
  oracle->add_option("--max-points", max_points, "Enumeration cap");

  auto* figure = app.add_subcommand("figure", "SVG of the shell (three coefficients only)");
  add_coeffs(figure);
  figure->add_option("--D", dilation, "Dilation");
  figure->add_option("--out", out_path, "SVG file (default: stdout)");

  std::string prime, lengths, valuations;
  unsigned k = 1, dim = 2;
  auto* local = app.add_subcommand("local-check",
                                   "Uniform local measure (coeffs --prime --k) or converse triangle "
                                   "(--lengths, or --valuations --prime)");
  local->add_option("coeffs", coeffs_text, "Comma-separated rationals");
  local->add_flag("--json", json, "Machine-readable JSON on stdout");
  local->add_option("--prime", prime, "Prime p");
  local->add_option("--k", k, "Precision: work modulo p^k")->check(CLI::PositiveNumber);
  local->add_option("--lengths", lengths, "Real lengths for the converse triangle construction");
  local->add_option("--valuations", valuations, "p-adic valuations (integers or inf)");
  local->add_option("--dim", dim, "Ambient dimension of the constructed vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }

  Coeffs coeffs;
  auto need_coeffs = [&]() { return parse_coeffs(coeffs_text, coeffs); };

  if (*decide) {
    if (!need_coeffs()) return kError;
    int solvable = 0;
    char* raw = nullptr;
    const smyth_status s = smyth_decide(coeffs.get(), &solvable, &raw);
    if (s != SMYTH_OK) return report_error(s);
    Str doc(raw);
    if (json)
      std::cout << doc.get() << "\n";
    else
      print_decision(Json::parse(doc.get()));
    return solvable ? kYes : kNo;
  }

  if (*solve) {
    if (!need_coeffs()) return kError;
    smyth_solve_options opts;
    smyth_solve_options_init(&opts);
    opts.d0 = d0.c_str();
    opts.max_d = max_d.c_str();
    opts.max_points = max_points;
    opts.include_timings = timings ? 1 : 0;
    if (verbose) opts.log = log_line;
    smyth_solution* raw_sol = nullptr;
    const smyth_status s = smyth_solve(coeffs.get(), &opts, &raw_sol);
    if (s != SMYTH_OK) return report_error(s);
    std::unique_ptr<smyth_solution, SolutionFree> sol(raw_sol);
    char* raw = nullptr;
    if (smyth_solution_report_json(sol.get(), &raw) != SMYTH_OK) return report_error(SMYTH_ERR_INTERNAL);
    Str report(raw);
    const smyth_solution_kind kind = smyth_solution_kind_of(sol.get());
    if (kind == SMYTH_SOLVED) {
      if (!out_path.empty()) {
        char* w = nullptr;
        const smyth_status ws = smyth_solution_witness_json(sol.get(), &w);
        if (ws != SMYTH_OK) return report_error(ws);
        Str witness(w);
        if (!write_file(out_path, std::string(witness.get()) + "\n")) return kError;
      }
      if (!csv_path.empty()) {
        char* w = nullptr;
        const smyth_status ws = smyth_solution_witness_csv(sol.get(), &w);
        if (ws != SMYTH_OK) return report_error(ws);
        Str csv(w);
        if (!write_file(csv_path, csv.get())) return kError;
      }
    }
    if (json) {
      std::cout << report.get() << "\n";
    } else {
      const Json r = Json::parse(report.get());
      std::cout << "coefficients: " << join(r["coefficients"]) << "\n";
      std::cout << "solvable: " << (r["decision"]["solvable"].get<bool>() ? "yes" : "no") << "\n";
      std::cout << "method: " << r["method"].get<std::string>() << "\n";
      for (const auto& a : r["D_schedule"]) {
        std::cout << "  D=" << text_of(a["D"]) << ": " << a["points"] << " points, " << a["vertices"]
                  << " vertices, " << a["edges"] << " edges -> " << a["outcome"].get<std::string>() << "\n";
        if (a.contains("certificate")) {
          std::cout << "    ";
          print_certificate(a["certificate"]);
        }
      }
      if (!r["witness"].is_null()) {
        std::cout << "witness: N = " << r["witness"]["N"] << " rows, verified";
        if (!out_path.empty()) std::cout << ", written to " << out_path;
        std::cout << "\n";
      }
      if (!r["failure"].is_null()) std::cout << "failure: " << r["failure"].get<std::string>() << "\n";
      if (r.contains("timings"))
        for (const auto& [stage, sec] : r["timings"].items()) std::cout << "  " << stage << ": " << sec << " s\n";
    }
    switch (kind) {
      case SMYTH_SOLVED: return kYes;
      case SMYTH_UNSOLVABLE: return kNo;
      default: return kError;
    }
  }

  if (*verify) {
    if (!need_coeffs()) return kError;
    std::string text;
    if (!read_file(witness_path, text)) return kError;
    int valid = 0, trivial = 0;
    char* raw = nullptr;
    const smyth_status s = smyth_verify_witness(coeffs.get(), text.c_str(), &valid, &trivial, &raw);
    if (s != SMYTH_OK) return report_error(s);
    Str doc(raw);
    const bool ok = valid && !trivial;
    Json r = Json::parse(doc.get());
    if (json) {
      r["accepted"] = ok;
      std::cout << r.dump(2) << "\n";
    } else {
      const std::string d = r["diagnostic"].get<std::string>();
      std::cout << (ok ? "accepted" : "rejected") << (d.empty() ? "" : ": " + d) << "\n";
    }
    return ok ? kYes : kNo;
  }

  if (*certificate) {
    if (!need_coeffs()) return kError;
    int is_cert = 0;
    char* raw = nullptr;
    const smyth_status s = smyth_certificate(coeffs.get(), dilation.c_str(), max_points, &is_cert, &raw);
    if (s != SMYTH_OK) return report_error(s);
    Str doc(raw);
    if (!csv_path.empty()) {
      char* csv = nullptr;
      const smyth_status cs = smyth_shell_csv(coeffs.get(), dilation.c_str(), max_points, &csv);
      if (cs != SMYTH_OK) return report_error(cs);
      Str c(csv);
      if (!write_file(csv_path, c.get())) return kError;
    }
    if (json) {
      std::cout << doc.get() << "\n";
    } else {
      const Json r = Json::parse(doc.get());
      std::cout << "D=" << text_of(r["D"]) << ": " << r["points"] << " points, " << r["vertices"] << " vertices, "
                << r["edges"] << " edges\n";
      if (is_cert)
        print_certificate(r["certificate"]);
      else
        std::cout << "balanced weighting on " << r["weighting"]["edges"].size() << " edges\n";
    }
    return is_cert ? kYes : kNo;
  }

  if (*oracle) {
    if (!need_coeffs()) return kError;
    int found = 0;
    char* raw = nullptr;
    const smyth_status s = smyth_box_oracle(coeffs.get(), bound, max_points, &found, &raw);
    if (s != SMYTH_OK) return report_error(s);
    Str doc(raw);
    if (json) {
      std::cout << doc.get() << "\n";
    } else {
      const Json r = Json::parse(doc.get());
      std::cout << "B=" << bound << ": " << r["edges"] << " edges, "
                << (found ? "balanced weighting on " + std::to_string(r["weighting"]["edges"].size()) + " edges"
                          : std::string("no balanced weighting"))
                << "\n";
    }
    return found ? kYes : kNo;
  }

  if (*figure) {
    if (!need_coeffs()) return kError;
    char* raw = nullptr;
    const smyth_status s = smyth_figure_svg(coeffs.get(), dilation.c_str(), &raw);
    if (s != SMYTH_OK) return report_error(s);
    Str svg(raw);
    if (out_path.empty()) {
      std::cout << svg.get();
    } else {
      if (!write_file(out_path, svg.get())) return kError;
      if (!json) std::cout << "wrote " << out_path << "\n";
    }
    return kYes;
  }

  if (*local) {
    char* raw = nullptr;
    if (!lengths.empty()) {
      const smyth_status s = smyth_triangle_real(lengths.c_str(), dim, &raw);
      if (s == SMYTH_ERR_FEASIBILITY) {
        report_error(s);
        return kNo;
      }
      if (s != SMYTH_OK) return report_error(s);
      Str doc(raw);
      if (json) {
        std::cout << doc.get() << "\n";
      } else {
        const Json r = Json::parse(doc.get());
        std::size_t i = 0;
        for (const auto& v : r["vectors"]) std::cout << "b_" << ++i << " = " << v.dump() << "\n";
        std::cout << "residual |sum b_i| = " << r["residual"] << "\n";
      }
      return kYes;
    }
    if (prime.empty()) {
      std::cerr << "error: --prime is required (or give --lengths)\n";
      return kError;
    }
    if (!valuations.empty()) {
      const smyth_status s = smyth_triangle_nonarch(valuations.c_str(), prime.c_str(), dim, &raw);
      if (s == SMYTH_ERR_FEASIBILITY) {
        report_error(s);
        return kNo;
      }
      if (s != SMYTH_OK) return report_error(s);
      Str doc(raw);
      if (json) {
        std::cout << doc.get() << "\n";
      } else {
        const Json r = Json::parse(doc.get());
        for (std::size_t i = 0; i < r["vectors"].size(); ++i)
          std::cout << "b_" << i + 1 << " = (" << join(r["vectors"][i]) << ")  valuation "
                    << text_of(r["valuations"][i]) << "\n";
      }
      return kYes;
    }
    if (coeffs_text.empty()) {
      std::cerr << "error: coefficients are required for the uniform-measure check\n";
      return kError;
    }
    if (!need_coeffs()) return kError;
    int identical = 0;
    const smyth_status s = smyth_local_check(coeffs.get(), prime.c_str(), k, &identical, &raw);
    if (s != SMYTH_OK) return report_error(s);
    Str doc(raw);
    if (json) {
      std::cout << doc.get() << "\n";
    } else {
      const Json r = Json::parse(doc.get());
      std::cout << "modulus " << text_of(r["modulus"]) << ": pushforwards "
                << (identical ? "identical" : "differ") << "\n";
    }
    return identical ? kYes : kNo;
  }
  return kError;
}
