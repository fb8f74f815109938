#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smyth/balance_lp.hpp"
#include "smyth/local_conditions.hpp"
#include "smyth/witness.hpp"

namespace smyth {

struct SolveOptions {
  Rational d0 = 8;
  Rational max_d = 512;
  std::size_t max_points = kDefaultMaxPoints;
  LpOptions lp;
  bool compact = true;  // replace the LP vertex by a small-sum weighting when one is found
  std::function<void(const std::string&)> log;  // optional progress lines
};

/// Reads SMYTH_MAX_POINTS if set, else the default cap.
std::size_t max_points_from_env();

enum class AttemptOutcome { kFeasible, kCertificate, kTrivial };

struct Attempt {
  Rational dilation;
  std::size_t points = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;  // origin excluded
  AttemptOutcome outcome = AttemptOutcome::kCertificate;
  std::optional<GordanCertificate> certificate;
  std::size_t pivots = 0;
};

enum class SolveMethod { kNone, kEllipsoid, kTwoTerm, kBoundary };

struct SolveReport {
  Coefficients coeffs;
  Decision decision;
  SolveMethod method = SolveMethod::kNone;
  std::optional<Rational> image_dilation;  // first D with equal images
  std::vector<Attempt> attempts;
  std::optional<MatrixWitness> witness;
  std::optional<std::string> failure;  // set when escalation ran out
  std::vector<std::pair<std::string, double>> timings;  // seconds per stage
};

/// Whole pipeline. Solvable input: witness or failure (resource). Unsolvable
/// input: one attempt at d0 carrying a certificate on the Euclidean shell.
SolveReport solve(const Coefficients& c, const SolveOptions& options = {});

/// Hypergraph (origin dropped) and LP outcome at one dilation. The shell uses
/// the dual constrained form when the instance is solvable and not on the
/// real boundary, else the Euclidean gram matrix.
struct ShellProblem {
  PointShell shell;
  Hypergraph graph;
  BalanceOutcome outcome;
  LpStats stats;
};

/// The shell solve_at would use, without building the LP.
PointShell shell_at(const Coefficients& c, const Rational& dilation, std::size_t max_points = kDefaultMaxPoints);

ShellProblem solve_at(const Coefficients& c, const Rational& dilation, const LpOptions& lp = {},
                      std::size_t max_points = kDefaultMaxPoints);

const char* outcome_name(AttemptOutcome o);
const char* method_name(SolveMethod m);

}  // namespace smyth
