#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smyth/balance_lp.hpp"
#include "smyth/local_conditions.hpp"
#include "smyth/matrix.hpp"

namespace smyth {

/// Finitely supported probability distribution on the hyperplane.
struct Distribution {
  std::vector<std::vector<Rational>> support;
  std::vector<Rational> probabilities;
  bool trivial = false;  // only the atom at the origin
};

/// Edges with positive weight, origin dropped and the rest renormalized.
/// A weighting carried by the origin alone yields the trivial atom.
Distribution assemble_distribution(const Hypergraph& g, const BalancedWeighting& w);

/// value -> total probability for coordinate i.
std::vector<std::pair<Rational, Rational>> marginal(const Distribution& d, std::size_t i);

/// Support on the relation and identical marginals, recomputed from scratch.
bool validate_distribution(const Coefficients& c, const Distribution& d);

/// N x n integer matrix M, reference v (column 0 sorted ascending) and
/// permutations with M(r, i) = v[perm[i][r]] (0-based).
struct MatrixWitness {
  IntMatrix m;
  std::vector<BigInt> reference;
  std::vector<std::vector<std::size_t>> permutations;
  bool determinant_checked = false;  // exact det(sum a_i Pi_i) computed (small N only)
};

/// Largest N for which the exact N x N determinant is computed.
inline constexpr std::size_t kDeterminantLimit = 200;

/// Rows with multiplicity proportional to probability (content removed),
/// rational supports scaled to integers. Refuses trivial distributions.
MatrixWitness to_matrix_witness(const Coefficients& c, const Distribution& d);

/// Reference vector and permutations for a matrix whose columns are mutual
/// permutations; stable matching of equal values by row index.
MatrixWitness matrix_witness_from_rows(const Coefficients& c, IntMatrix m);

struct WitnessCheck {
  bool valid = false;  // relation on every row and equal column multisets
  bool trivial = false;
  std::optional<std::size_t> failing_row;
  std::optional<std::size_t> failing_column;  // column whose multiset differs from column 0
  std::string diagnostic;  // human text, 1-based
};

WitnessCheck verify_witness(const Coefficients& c, const IntMatrix& m);

/// Full invariant check of a MatrixWitness: verify_witness, bijective
/// permutations reproducing every column, (sum a_i Pi_i) v = 0, and
/// det(sum a_i Pi_i) = 0 when N <= det_limit.
bool check_matrix_witness(const Coefficients& c, const MatrixWitness& w, std::size_t det_limit = kDeterminantLimit);

/// sum_i a_i Pi_i as an N x N integer matrix.
IntMatrix permutation_combination(const Coefficients& c, const MatrixWitness& w);

/// n = 2: (t, -t) -> [[1, 1]]; (t, t) -> [[1, -1], [-1, 1]].
MatrixWitness solve_n2(const Coefficients& c);

/// Solvable instance with 2 max|a_i| = sum|a_i|: rows {eps, -eps}.
MatrixWitness solve_boundary(const Coefficients& c);

std::string witness_csv(const MatrixWitness& w);

}  // namespace smyth
