#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "smyth/ellipsoid.hpp"
#include "smyth/rational.hpp"

namespace smyth {

/// Ordered uniform hypergraph: each edge is an arity-tuple of vertex indices.
class Hypergraph {
 public:
  Hypergraph(std::size_t arity, std::vector<std::int64_t> vertices, std::vector<std::uint32_t> edge_data);

  /// Vertex set = union of tuple entries; throws kDomain on repeated tuples.
  static Hypergraph from_tuples(std::size_t arity, const std::vector<std::vector<std::int64_t>>& tuples);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return arity_ == 0 ? 0 : edges_.size() / arity_; }
  const std::vector<std::int64_t>& vertices() const noexcept { return vertices_; }
  std::span<const std::uint32_t> edge(std::size_t e) const { return {edges_.data() + e * arity_, arity_}; }
  std::vector<std::int64_t> edge_values(std::size_t e) const;

 private:
  std::size_t arity_;
  std::vector<std::int64_t> vertices_;
  std::vector<std::uint32_t> edges_;
};

/// One edge per shell point (the origin included), e_i = index of L_i(c).
Hypergraph build_hypergraph(const PointShell& shell);

/// Copy without the constant edge (0, ..., 0). That edge is balanced on its own
/// and pairs to zero with every certificate, so the LP must not see it.
Hypergraph without_origin(const Hypergraph& g);

struct Imbalance {
  std::vector<std::vector<Rational>> degree;  // degree[i][v] = sum_{e : e_i = v} w(e)
  std::vector<Rational> per_vertex;           // max_i - min_i of degree[.][v]
  Rational max;                               // ||A w||_inf in this max-minus-min sense
};

Imbalance apply_balance_operator(const Hypergraph& g, std::span<const Rational> weights);

struct BalancedWeighting {
  std::vector<Rational> weights;     // one per edge, >= 0, summing to 1
  std::vector<BigInt> integer_form;  // weights * lcm(denominators), content 1
  std::vector<std::size_t> support() const;
};

/// f_1..f_n on the vertices with sum_i f_i = 0 pointwise and
/// sum_i f_i(e_i) >= margin > 0 on every edge.
struct GordanCertificate {
  std::vector<std::int64_t> vertices;
  std::vector<std::vector<Rational>> f;
  Rational margin;
};

using BalanceOutcome = std::variant<BalancedWeighting, GordanCertificate>;

enum class PivotRule {
  kBland,
  kLargestCoefficient,  // falls back to Bland after a run of degenerate pivots
};

struct LpOptions {
  PivotRule rule = PivotRule::kBland;
  // Start the exact iterations from the basis a double-precision phase-1 run
  // ends on (discarded if it is not exactly primal feasible).
  bool float_warm_start = true;
};

struct LpStats {
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::size_t pivots = 0;        // exact pivots after the warm start
  std::size_t float_pivots = 0;
  bool warm_start_used = false;
};

/// Exact phase-1 simplex on {A w = 0, 1^T w = 1, w >= 0}.
BalanceOutcome find_balanced(const Hypergraph& g, const LpOptions& options = {}, LpStats* stats = nullptr);

bool validate_weighting(const Hypergraph& g, const BalancedWeighting& w);

inline constexpr std::size_t kCompactionEdges = 512;

/// Balanced weighting with a small integer form. Edges are taken smallest
/// value-tuple norm first, in prefixes of 32, 64, ... (up to max_edges) and
/// finally all edges when there are at most max_edges. On the first prefix with
/// a balanced weighting, the integer kernel of A is LLL-reduced and the
/// candidates are sign-definite basis vectors and nearest-plane roundings of
/// t * (1, ..., 1), t = 1, 2, ..., 64; the least sum wins. nullopt if no
/// candidate is nonnegative.
std::optional<BalancedWeighting> compact_weighting(const Hypergraph& g, std::size_t max_edges = kCompactionEdges);

/// Sum of integer_form: the witness size N.
BigInt integer_size(const BalancedWeighting& w);
bool validate_certificate(const Hypergraph& g, const GordanCertificate& cert);

/// <w, A^T f> = sum_e w(e) sum_i f_i(e_i).
Rational certificate_pairing(const Hypergraph& g, const GordanCertificate& cert, std::span<const Rational> weights);

struct BoxOracleResult {
  Hypergraph graph;  // all lattice points with basis coordinates in [-B, B]^(n-1), origin dropped
  std::optional<BalancedWeighting> weighting;
};

BoxOracleResult box_oracle(const Coefficients& c, long bound, std::size_t max_points = kDefaultMaxPoints);

}  // namespace smyth
