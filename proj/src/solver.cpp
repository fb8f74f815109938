#include "smyth/solver.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "smyth/error.hpp"

namespace smyth {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

bool uses_ellipsoid(const Coefficients& c, const Decision& d) {
  return d.solvable && c.size() >= 3 && !is_real_boundary(c);
}

Hypergraph nonzero_graph(const PointShell& shell) {
  // A shell holding only the origin has no usable edge; callers escalate.
  if (shell.size() <= 1) return Hypergraph(shell.arity(), {}, {});
  return without_origin(build_hypergraph(shell));
}

template <typename Log>
void ellipsoid_route(const Coefficients& c, const SolveOptions& options, SolveReport& rep, Log& log) {
  Stopwatch t_form;
  const LatticeModel m = hyperplane_lattice(c);
  const EllipsoidForm e = dual_constrained_form(m);
  rep.timings.emplace_back("form", t_form.seconds());
  log("dual constrained form found (denominator bound " + e.denominator_bound.get_str() + ")");

  Stopwatch t_img;
  DilationResult img = equal_image_dilation(m, e, options.d0, options.max_d, options.max_points);
  rep.timings.emplace_back("images", t_img.seconds());
  rep.image_dilation = img.dilation;
  log("images coincide at D = " + to_string(img.dilation));

  Stopwatch t_lp;
  std::optional<PointShell> shell = std::move(img.shell);
  for (Rational dil = img.dilation; dil <= options.max_d; dil *= 2) {
    if (!shell) shell = enumerate_shell(m, e, dil, options.max_points);
    Attempt a;
    a.dilation = dil;
    a.points = shell->size();
    const Hypergraph g = nonzero_graph(*shell);
    a.vertices = g.vertex_count();
    a.edges = g.edge_count();
    if (g.edge_count() == 0) {
      a.outcome = AttemptOutcome::kTrivial;
    } else {
      LpStats st;
      auto out = find_balanced(g, options.lp, &st);
      a.pivots = st.pivots;
      if (auto* w = std::get_if<BalancedWeighting>(&out)) {
        // Vertex weights carry determinant-sized denominators; prefer a short lattice point.
        if (options.compact) {
          auto small = compact_weighting(g);
          if (small && integer_size(*small) < integer_size(*w)) *w = std::move(*small);
        }
        const Distribution dist = assemble_distribution(g, *w);
        if (dist.trivial) {
          a.outcome = AttemptOutcome::kTrivial;
        } else {
          a.outcome = AttemptOutcome::kFeasible;
          rep.witness = to_matrix_witness(c, dist);
        }
      } else {
        a.certificate = std::get<GordanCertificate>(std::move(out));
      }
    }
    std::ostringstream os;
    os << "D = " << to_string(dil) << ": " << a.points << " points, " << a.vertices << " vertices, "
       << outcome_name(a.outcome);
    log(os.str());
    rep.attempts.push_back(std::move(a));
    shell.reset();
    if (rep.witness) break;
  }
  rep.timings.emplace_back("lp", t_lp.seconds());
  if (!rep.witness) rep.failure = "no balanced weighting up to D = " + to_string(options.max_d);
}

}  // namespace

std::size_t max_points_from_env() {
  const char* env = std::getenv("SMYTH_MAX_POINTS");
  if (!env || !*env) return kDefaultMaxPoints;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) fail(ErrorCode::kParse, "SMYTH_MAX_POINTS must be a positive integer");
  return static_cast<std::size_t>(v);
}

const char* outcome_name(AttemptOutcome o) {
  switch (o) {
    case AttemptOutcome::kFeasible: return "feasible";
    case AttemptOutcome::kCertificate: return "certificate";
    case AttemptOutcome::kTrivial: return "trivial";
  }
  return "?";
}

const char* method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::kNone: return "none";
    case SolveMethod::kEllipsoid: return "ellipsoid";
    case SolveMethod::kTwoTerm: return "two-term";
    case SolveMethod::kBoundary: return "boundary";
  }
  return "?";
}

PointShell shell_at(const Coefficients& c, const Rational& dilation, std::size_t max_points) {
  const LatticeModel m = hyperplane_lattice(c);
  const RatMatrix q = uses_ellipsoid(c, decide(c)) ? dual_constrained_form(m).q : euclidean_gram(m);
  return enumerate_shell(m, q, dilation, max_points);
}

ShellProblem solve_at(const Coefficients& c, const Rational& dilation, const LpOptions& lp, std::size_t max_points) {
  PointShell shell = shell_at(c, dilation, max_points);
  Hypergraph g = nonzero_graph(shell);
  if (g.edge_count() == 0) fail(ErrorCode::kDomain, "shell holds only the origin");
  LpStats stats;
  BalanceOutcome out = find_balanced(g, lp, &stats);
  return ShellProblem{std::move(shell), std::move(g), std::move(out), stats};
}

SolveReport solve(const Coefficients& c, const SolveOptions& options) {
  if (options.d0 <= 0 || options.max_d < options.d0) fail(ErrorCode::kDomain, "need 0 < d0 <= max_d");
  auto log = [&](const std::string& s) {
    if (options.log) options.log(s);
  };
  SolveReport rep{c, decide(c), SolveMethod::kNone, std::nullopt, {}, std::nullopt, std::nullopt, {}};
  Stopwatch total;

  if (!rep.decision.solvable) {
    Stopwatch t;
    const LatticeModel m = hyperplane_lattice(c);
    const PointShell shell = enumerate_shell(m, euclidean_gram(m), options.d0, options.max_points);
    Attempt a;
    a.dilation = options.d0;
    a.points = shell.size();
    if (shell.size() > 1) {
      const Hypergraph g = nonzero_graph(shell);
      a.vertices = g.vertex_count();
      a.edges = g.edge_count();
      LpStats st;
      auto out = find_balanced(g, options.lp, &st);
      a.pivots = st.pivots;
      // A weighting here would contradict the local conditions.
      if (!std::holds_alternative<GordanCertificate>(out))
        fail(ErrorCode::kInternal, "balanced weighting found for an unsolvable instance");
      a.certificate = std::get<GordanCertificate>(std::move(out));
    }
    rep.attempts.push_back(std::move(a));
    rep.timings.emplace_back("certificate", t.seconds());
    rep.timings.emplace_back("total", total.seconds());
    return rep;
  }

  if (c.size() == 2) {
    rep.method = SolveMethod::kTwoTerm;
    rep.witness = solve_n2(c);
    rep.timings.emplace_back("total", total.seconds());
    return rep;
  }
  if (is_real_boundary(c)) {
    rep.method = SolveMethod::kBoundary;
    rep.witness = solve_boundary(c);
    rep.timings.emplace_back("total", total.seconds());
    return rep;
  }

  rep.method = SolveMethod::kEllipsoid;
  try {
    ellipsoid_route(c, options, rep, log);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kResource) throw;
    rep.failure = err.what();
  }
  rep.timings.emplace_back("total", total.seconds());
  return rep;
}

}  // namespace smyth
