#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "common.hpp"
#include "smyth/balance_lp.hpp"
#include "smyth/error.hpp"
#include "smyth/lattice_reduction.hpp"
#include "smyth/solver.hpp"
#include "smyth/witness.hpp"

using namespace smyth;
using smyth::test::coeffs;
using smyth::test::uniform;

namespace {

bool has_cycle(std::size_t vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(vertices);
  for (auto [u, v] : edges) adj[static_cast<std::size_t>(u)].push_back(v);
  std::vector<int> state(vertices, 0);  // 0 new, 1 on stack, 2 done
  std::function<bool(int)> dfs = [&](int u) {
    state[static_cast<std::size_t>(u)] = 1;
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (state[static_cast<std::size_t>(v)] == 1) return true;
      if (state[static_cast<std::size_t>(v)] == 0 && dfs(v)) return true;
    }
    state[static_cast<std::size_t>(u)] = 2;
    return false;
  };
  for (std::size_t u = 0; u < vertices; ++u)
    if (state[u] == 0 && dfs(static_cast<int>(u))) return true;
  return false;
}

std::vector<Rational> random_weights(std::size_t m) {
  std::vector<Rational> w(m);
  bool any = false;
  while (!any)
    for (auto& x : w) {
      x = uniform(0, 3) == 0 ? Rational(0) : make_rational(uniform(1, 20), uniform(1, 7));
      any = any || x != 0;
    }
  return w;
}

// Checks whichever outcome came back and cross-refutes it with random data.
bool check_outcome(const Hypergraph& g, const BalanceOutcome& out) {
  if (const auto* w = std::get_if<BalancedWeighting>(&out)) {
    CHECK(validate_weighting(g, *w));
    Rational total = 0;
    for (const auto& x : w->weights) {
      CHECK(x >= 0);
      total += x;
    }
    CHECK(total == 1);
    CHECK(apply_balance_operator(g, w->weights).max == 0);
    BigInt content = 0;
    for (const auto& x : w->integer_form) content = gcd(content, x);
    CHECK(content == 1);
    // Any f with sum_i f_i = 0 pairs to zero with a balanced weighting.
    for (int t = 0; t < 5; ++t) {
      GordanCertificate f;
      f.vertices = g.vertices();
      f.f.assign(g.arity(), std::vector<Rational>(g.vertex_count()));
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Rational s = 0;
        for (std::size_t i = 0; i + 1 < g.arity(); ++i) {
          f.f[i][v] = uniform(-5, 5);
          s += f.f[i][v];
        }
        f.f[g.arity() - 1][v] = -s;
      }
      CHECK(certificate_pairing(g, f, w->weights) == 0);
    }
    return true;
  }
  const auto& cert = std::get<GordanCertificate>(out);
  CHECK(validate_certificate(g, cert));
  CHECK(cert.margin > 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Rational s = 0;
    for (std::size_t i = 0; i < g.arity(); ++i) s += cert.f[i][v];
    CHECK(s == 0);
  }
  for (int t = 0; t < 5; ++t) {
    const auto w = random_weights(g.edge_count());
    CHECK(certificate_pairing(g, cert, w) > 0);
    CHECK(apply_balance_operator(g, w).max > 0);
  }
  return false;
}

}  // namespace

TEST_CASE("hypergraph construction") {
  const auto g = Hypergraph::from_tuples(2, {{5, 7}, {7, 5}, {-1, 5}});
  CHECK(g.vertices() == std::vector<std::int64_t>{-1, 5, 7});
  CHECK(g.edge_count() == 3);
  CHECK(g.edge_values(2) == std::vector<std::int64_t>{-1, 5});
  CHECK_THROWS_AS(Hypergraph::from_tuples(2, {{1, 2}, {1, 2}}), Error);
}

TEST_CASE("balance operator") {
  const auto a = smyth::test::matrix_a_rows();
  std::vector<std::vector<std::int64_t>> tuples;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<std::int64_t> t;
    for (const auto& x : a.row(r)) t.push_back(x.get_si());
    tuples.push_back(t);
  }
  const auto g = Hypergraph::from_tuples(3, tuples);
  CHECK(apply_balance_operator(g, std::vector<Rational>(8, 0)).max == 0);
  CHECK(apply_balance_operator(g, std::vector<Rational>(8, 1)).max == 0);
  std::vector<Rational> w(8, 1);
  w[0] = 2;
  CHECK(apply_balance_operator(g, w).max == 1);
  const auto out = find_balanced(g);
  CHECK(check_outcome(g, out));
}

TEST_CASE("arity-2 fixtures") {
  const auto cyc = Hypergraph::from_tuples(2, {{0, 1}, {1, 0}});
  const auto out = find_balanced(cyc);
  REQUIRE(std::holds_alternative<BalancedWeighting>(out));
  CHECK(std::get<BalancedWeighting>(out).weights == std::vector<Rational>{make_rational(1, 2), make_rational(1, 2)});
  const auto path = Hypergraph::from_tuples(2, {{0, 1}, {1, 2}});
  const auto res = find_balanced(path);
  REQUIRE(std::holds_alternative<GordanCertificate>(res));
  check_outcome(path, res);
}

TEST_CASE("find_balanced agrees with cycle detection on all small digraphs") {
  // Vertices {0,1,2,3}, loops allowed, 1..5 distinct edges: every digraph with at most
  // 4 vertices and 5 edges appears up to relabelling.
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) all.emplace_back(u, v);
  std::size_t graphs = 0, cyclic = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!pick.empty()) {
      std::vector<std::pair<int, int>> edges;
      std::vector<std::vector<std::int64_t>> tuples;
      for (auto k : pick) {
        edges.push_back(all[k]);
        tuples.push_back({all[k].first, all[k].second});
      }
      const auto g = Hypergraph::from_tuples(2, tuples);
      const bool expected = has_cycle(4, edges);
      const auto out = find_balanced(g);
      REQUIRE(std::holds_alternative<BalancedWeighting>(out) == expected);
      ++graphs;
      cyclic += expected;
    }
    if (pick.size() == 5) return;
    for (std::size_t k = start; k < all.size(); ++k) {
      pick.push_back(k);
      rec(k + 1);
      pick.pop_back();
    }
  };
  rec(0);
  CHECK(graphs == 16 + 120 + 560 + 1820 + 4368);
  CHECK(cyclic > 0);
  CHECK(cyclic < graphs);
}

TEST_CASE("Gordan exclusivity on 1000 random hypergraphs") {
  std::size_t feasible = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t arity = static_cast<std::size_t>(uniform(2, 4));
    const std::size_t edges = static_cast<std::size_t>(uniform(1, 12));
    const long range = uniform(1, 3);
    std::set<std::vector<std::int64_t>> tuples;
    while (tuples.size() < edges) {
      std::vector<std::int64_t> e(arity);
      for (auto& x : e) x = uniform(-range, range);
      tuples.insert(e);
      if (tuples.size() >= static_cast<std::size_t>(std::pow(2 * range + 1, arity))) break;
    }
    const auto g = Hypergraph::from_tuples(arity, {tuples.begin(), tuples.end()});
    LpOptions opts;
    opts.float_warm_start = t % 2 == 0;
    opts.rule = t % 3 == 0 ? PivotRule::kLargestCoefficient : PivotRule::kBland;
    const auto out = find_balanced(g, opts);
    feasible += check_outcome(g, out);
    // Other options reach the same verdict.
    const auto again = find_balanced(g, LpOptions{PivotRule::kBland, false});
    CHECK(again.index() == out.index());
  }
  CHECK(feasible > 50);
  CHECK(feasible < 950);
}

TEST_CASE("determinism") {
  const auto g = Hypergraph::from_tuples(3, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {1, 1, 1}, {2, 1, 3}});
  const auto a = find_balanced(g), b = find_balanced(g);
  REQUIRE(std::holds_alternative<BalancedWeighting>(a));
  CHECK(std::get<BalancedWeighting>(a).weights == std::get<BalancedWeighting>(b).weights);
}

TEST_CASE("float basis carries over exactly on infeasible shells") {
  // Regression: exact warm start must keep the float basis's artificials.
  for (const auto& a : {coeffs({1, 2, 2}), coeffs({2, 3, 8})}) {
    const auto g = without_origin(build_hypergraph(shell_at(a, Rational(32))));
    LpStats st;
    const auto out = find_balanced(g, LpOptions{}, &st);
    CHECK(std::holds_alternative<GordanCertificate>(out));
    CHECK(st.warm_start_used);
    CHECK(st.pivots <= 10);
  }
}

TEST_CASE("origin edge is dropped") {
  const auto g = Hypergraph::from_tuples(2, {{0, 0}, {0, 1}});
  const auto h = without_origin(g);
  CHECK(h.edge_count() == 1);
  CHECK(std::holds_alternative<GordanCertificate>(find_balanced(h)));
  CHECK_THROWS_AS(without_origin(Hypergraph::from_tuples(2, {{0, 0}})), Error);
}

TEST_CASE("box oracle") {
  {
    const auto r = box_oracle(coeffs({1, -1}), 1);
    REQUIRE(r.weighting);
    CHECK(validate_weighting(r.graph, *r.weighting));
  }
  {
    const auto r = box_oracle(coeffs({1, 1, 2}), 2);
    REQUIRE(r.weighting);  // fixture
    CHECK(validate_weighting(r.graph, *r.weighting));
    CHECK(r.graph.edge_count() == 24);
    const auto d = assemble_distribution(r.graph, *r.weighting);
    CHECK_FALSE(d.trivial);
    CHECK(validate_distribution(coeffs({1, 1, 2}), d));
  }
  CHECK_FALSE(box_oracle(coeffs({1, 1, 3}), 3).weighting);
  CHECK_FALSE(box_oracle(coeffs({1, 2, 2}), 3).weighting);
}

TEST_CASE("integer kernel, LLL and nearest plane") {
  // Rows of A for the cycle 0 -> 1 -> 2 -> 0 plus a chord 0 -> 2.
  const auto g = Hypergraph::from_tuples(2, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  std::vector<SparseRow> rows(3);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto t = g.edge(e);
    rows[t[0]].emplace_back(static_cast<std::uint32_t>(e), 1);
    rows[t[1]].emplace_back(static_cast<std::uint32_t>(e), -1);
  }
  auto ker = integer_kernel(rows, 4);
  REQUIRE(ker);
  CHECK(ker->size() == 2);
  for (const auto& v : *ker)
    for (const auto& row : rows) {
      std::int64_t s = 0;
      for (auto [j, a] : row) s += a * v[j];
      CHECK(s == 0);
    }
  std::vector<IntVec> basis{{1, 1, 1, 0}, {0, 1, 1, 1}};
  std::vector<IntVec> orig = basis;
  REQUIRE(lll_reduce(basis));
  // Same lattice: each reduced vector is an integer combination of the originals and vice versa (rank 2 here).
  auto in_span = [](const std::vector<IntVec>& b, const IntVec& v) {
    for (long x = -5; x <= 5; ++x)
      for (long y = -5; y <= 5; ++y) {
        bool eq = true;
        for (std::size_t k = 0; k < v.size(); ++k) eq = eq && x * b[0][k] + y * b[1][k] == v[k];
        if (eq) return true;
      }
    return false;
  };
  for (const auto& v : basis) CHECK(in_span(orig, v));
  for (const auto& v : orig) CHECK(in_span(basis, v));
  const std::vector<double> target{3.1, 3.9, 4.2, 1.1};
  auto close = nearest_plane(basis, target);
  REQUIRE(close);
  CHECK(in_span(orig, *close));
}

TEST_CASE("compact weighting") {
  const auto a = smyth::test::matrix_a_rows();
  std::vector<std::vector<std::int64_t>> tuples;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<std::int64_t> t;
    for (const auto& x : a.row(r)) t.push_back(x.get_si());
    tuples.push_back(t);
  }
  const auto g = Hypergraph::from_tuples(3, tuples);
  const auto w = compact_weighting(g);
  REQUIRE(w);
  CHECK(validate_weighting(g, *w));
  CHECK(integer_size(*w) <= 8);
  CHECK_FALSE(compact_weighting(Hypergraph::from_tuples(2, {{0, 1}, {1, 2}})));
}
