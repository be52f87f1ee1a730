// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Reference values come from the brute-force oracles in
// oracles.hpp or are fixed fixture constants.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sgcolor/circuits.hpp"
#include "sgcolor/counting.hpp"
#include "sgcolor/extremal.hpp"
#include "sgcolor/graph.hpp"

using namespace sgcolor;

namespace {

constexpr Sign P = Sign::Positive;
constexpr Sign N = Sign::Negative;

const SignedGraph kUnbalancedTriangle(3, {{0, 1, P}, {1, 2, P}, {0, 2, N}});
const SignedGraph kBalancedTriangle(3, {{0, 1, P}, {1, 2, P}, {0, 2, P}});
const SignedGraph kDigon(2, {{0, 1, P}, {0, 1, N}});
const SignedGraph kDoubleDigon(3, {{0, 1, P}, {0, 1, N}, {1, 2, P}, {1, 2, N}});
const SignedGraph kDigonsOnPath(4, {{0, 1, P}, {0, 1, N}, {1, 2, P}, {2, 3, P}, {2, 3, N}});
const SignedGraph kK4Signed(4, {{0, 1, N}, {0, 2, P}, {0, 3, P}, {1, 2, P}, {1, 3, P}, {2, 3, N}});

using Poly = std::vector<std::int64_t>;

// Collects mismatches for one criterion; only the first few are printed.
struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ < 5) detail << "\n    " << what();
  }
};

template <typename T>
std::string show(const std::vector<T>& xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << ']';
  return out.str();
}

ListAssignment lists_from(const std::vector<std::vector<int>>& raw) { return ListAssignment(raw); }

std::vector<int> rank_of(const EdgeOrder& order) {
  std::vector<int> r;
  for (int e = 0; e < order.size(); ++e) r.push_back(order.rank(e));
  return r;
}

// 1. Every connected signed graph with n <= 4, m <= 6.
Tally oracle_equivalence(std::string& summary) {
  Tally t;
  std::mt19937_64 rng(1);
  std::uint64_t graphs = 0;
  for (const SignedGraph& g : oracle::signed_zoo(4)) {
    if (g.edge_count() > 6) continue;
    ++graphs;
    const EdgeOrder order = EdgeOrder::identity(g.edge_count());
    const NbcExpansion expansion(g, order);
    const QuasiPolynomial q = quasi_polynomial(expansion.census());
    for (int k = 1; k <= 6; ++k) {
      const Count brute = brute_count_k(g, k);
      const Count poly = q.evaluate(k);
      t.expect(brute == poly && brute == oracle::count_k(g, k), [&] {
        return format_graph(g) + " k=" + std::to_string(k) + " brute " + brute.str() + " poly " + poly.str();
      });
    }
    for (int trial = 0; trial < 20; ++trial) {
      const auto raw = oracle::random_lists(rng, g.vertex_count(), -5, 5, 6);
      const ListAssignment lists = lists_from(raw);
      const Count brute = brute_count_list(g, lists);
      const Count ie = inclusion_exclusion_count(g, lists);
      const Count nbc = expansion.count(lists);
      t.expect(brute == ie && brute == nbc && brute == oracle::count_colorings(g, raw), [&] {
        return format_graph(g) + format_list(lists) + "brute " + brute.str() + " ie " + ie.str() + " nbc " + nbc.str();
      });
    }
  }
  summary = std::to_string(graphs) + " signed graphs";
  return t;
}

// 2. Fixture polynomials against fixed coefficients and the interpolated
// brute-force counts.
Tally fixture_polynomials(std::string& summary) {
  Tally t;
  struct Fixture {
    const char* name;
    const SignedGraph* g;
    Poly odd;
    Poly even;
  };
  const std::vector<Fixture> fixtures = {
      {"unbalanced triangle", &kUnbalancedTriangle, {1, -3, 3, -1}, {1, -3, 3, 0}},
      {"balanced triangle", &kBalancedTriangle, {1, -3, 2, 0}, {1, -3, 2, 0}},
      {"unbalanced digon", &kDigon, {1, -2, 1}, {1, -2, 0}},
  };
  for (const auto& f : fixtures) {
    const QuasiPolynomial q = quasi_polynomial(*f.g, EdgeOrder::identity(f.g->edge_count()));
    const Poly fit_odd = oracle::fitted_polynomial(*f.g, 1);
    const Poly fit_even = oracle::fitted_polynomial(*f.g, 0);
    t.expect(fit_odd == f.odd && fit_even == f.even,
             [&] { return std::string(f.name) + ": oracle fit " + show(fit_odd) + " / " + show(fit_even); });
    t.expect(q.odd == f.odd && q.even == f.even,
             [&] { return std::string(f.name) + ": library " + show(q.odd) + " / " + show(q.even); });
  }
  summary = std::to_string(fixtures.size()) + " fixtures";
  return t;
}

// 3. Census fixtures, with the barbell graphs checked against the unpruned
// 2^m census.
Tally census_fixtures(std::string& summary) {
  Tally t;
  const auto id = [](const SignedGraph& g) { return EdgeOrder::identity(g.edge_count()); };
  const NbcCensus u = nbc_census(kUnbalancedTriangle, id(kUnbalancedTriangle));
  const NbcCensus b = nbc_census(kBalancedTriangle, id(kBalancedTriangle));
  t.expect(u == NbcCensus{{1, 3, 3, 1}, {1, 3, 3}},
           [&] { return "unbalanced triangle c=" + show(u.c) + " c*=" + show(u.c_star); });
  t.expect(b == NbcCensus{{1, 3, 2, 0}, {1, 3, 2}},
           [&] { return "balanced triangle c=" + show(b.c) + " c*=" + show(b.c_star); });

  std::ostringstream values;
  for (const SignedGraph* g : {&kDoubleDigon, &kDigonsOnPath}) {
    const EdgeOrder order = id(*g);
    const auto barbells = enumerate_barbells(*g);
    t.expect(barbells.size() == 1, [&] { return "barbells enumerated: " + std::to_string(barbells.size()); });
    if (barbells.size() != 1) continue;

    const EdgeSubset barbell = barbells.front().edge_set;
    const EdgeSubset broken(barbell.bits() & ~(std::uint64_t{1} << order.max_of(barbell)));
    const NbcExpansion x(*g, order);
    bool excluded = true;
    for (const auto& term : x.terms()) excluded = excluded && !broken.is_subset_of(term.edges);
    t.expect(excluded, [&] { return "an NBC subset contains the barbell's broken circuit"; });

    const oracle::Census expected = oracle::nbc_census(*g, rank_of(order));
    const NbcCensus got = x.census();
    t.expect(got.c == expected.c && got.c_star == expected.c_star, [&] {
      return "barbell graph c=" + show(got.c) + " c*=" + show(got.c_star) + " oracle c=" + show(expected.c) +
             " c*=" + show(expected.c_star);
    });
    values << " c=" << show(got.c) << " c*=" << show(got.c_star);
  }
  summary = "barbell graphs:" + values.str();
  return t;
}

// 4. Census under 10 random edge orders per fixture.
Tally order_invariance(std::string& summary) {
  Tally t;
  std::mt19937_64 rng(4);
  const std::vector<const SignedGraph*> fixtures = {&kUnbalancedTriangle, &kBalancedTriangle, &kDigon,
                                                    &kDoubleDigon,        &kDigonsOnPath,     &kK4Signed};
  for (const SignedGraph* g : fixtures) {
    const int m = g->edge_count();
    const NbcCensus base = nbc_census(*g, EdgeOrder::identity(m));
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < 10; ++i) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const NbcCensus c = nbc_census(*g, EdgeOrder::from_sequence(perm, m));
      t.expect(c == base, [&] { return format_graph(*g) + "order " + show(perm) + " gives c=" + show(c.c); });
    }
  }
  summary = std::to_string(fixtures.size()) + " fixtures x 10 orders";
  return t;
}

// 5. Random (g, X, L) triples: counts and beta survive switching.
Tally switching_invariance(std::string& summary) {
  Tally t;
  std::mt19937_64 rng(5);
  std::uint64_t components = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const SignedGraph g = oracle::random_signed_graph(rng, 6, 9, true, true);
    const auto raw = oracle::random_lists(rng, g.vertex_count(), -5, 5, 5);
    const ListAssignment lists = lists_from(raw);
    std::vector<int> at;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (rng() & 1U) at.push_back(v);
    }
    const SignedGraph sg = switch_graph(g, at);
    const ListAssignment sl = switch_list(lists, at);
    const Count before = oracle::count_colorings(g, raw);
    const Count after = brute_count_list(sg, sl);
    const Count after_ie = inclusion_exclusion_count(sg, sl);
    t.expect(before == after && before == after_ie && before == brute_count_list(g, lists),
             [&] { return format_graph(g) + "switch at " + show(at) + ": " + before.str() + " vs " + after.str(); });

    for (std::uint64_t f : {EdgeSubset::all(g.edge_count()).bits(), rng() & EdgeSubset::all(g.edge_count()).bits()}) {
      for (const Component& c : components_of(g, EdgeSubset(f)).components) {
        if (!c.balanced) continue;
        ++components;
        const Count a = beta(g, c, lists);
        const Count b = beta_from_anchored_side(g, c, lists);
        t.expect(a == b, [&] { return format_graph(g) + "beta " + a.str() + " vs " + b.str(); });
      }
    }
  }
  summary = "100 triples, " + std::to_string(components) + " balanced components";
  return t;
}

struct SearchCase {
  const char* name;
  const SignedGraph* g;
};
const std::vector<SearchCase> kTriangles = {{"unbalanced triangle", &kUnbalancedTriangle},
                                            {"balanced triangle", &kBalancedTriangle}};

SearchOutcome search(const SignedGraph& g, int k, ListMode mode, bool symmetry) {
  SearchOptions o;
  o.mode = mode;
  o.universe = 4;
  o.use_symmetry = symmetry;
  return minimize_over_assignments(g, k, o);
}

std::string describe(const char* name, const SearchOutcome& o) {
  std::ostringstream out;
  out << name << " " << to_string(o.mode) << " k=" << o.k << ": " << o.evaluated << " assignments, min "
      << o.min_count << ", canonical " << o.canonical_count << ", attaining " << o.attaining;
  return out.str();
}

// 6. k = 4, any lists from [-4, 4], both with and without symmetry pruning.
Tally no_counterexample_any(std::string& summary) {
  Tally t;
  const ThresholdReport th = thresholds(3);
  t.expect(th.t1 == 3, [&] { return "t1(3) = " + th.t1.str(); });
  std::ostringstream out;
  for (const auto& c : kTriangles) {
    for (bool symmetry : {true, false}) {
      const SearchOutcome o = search(*c.g, 4, ListMode::Any, symmetry);
      t.expect(!o.counterexample_found && o.attaining > 0 && o.attaining_edge_failures == 0, [&] {
        return describe(c.name, o) + ", edge failures " + std::to_string(o.attaining_edge_failures);
      });
      if (!symmetry) out << (out.tellp() > 0 ? "; " : "") << c.name << " min " << o.min_count << " over " << o.evaluated;
    }
  }
  summary = out.str();
  return t;
}

// 7. k = 3 zero-included and k = 4 zero-free over [-4, 4].
Tally no_counterexample_parity(std::string& summary) {
  Tally t;
  std::ostringstream out;
  for (const auto& c : kTriangles) {
    for (auto [mode, k] : {std::pair{ListMode::ZeroIncluded, 3}, std::pair{ListMode::ZeroFree, 4}}) {
      for (bool symmetry : {true, false}) {
        const SearchOutcome o = search(*c.g, k, mode, symmetry);
        const bool closed = c.g != &kUnbalancedTriangle || o.attaining_negation_failures == 0;
        t.expect(!o.counterexample_found && o.attaining > 0 && closed, [&] {
          return describe(c.name, o) + ", negation failures " + std::to_string(o.attaining_negation_failures);
        });
        if (!symmetry) {
          out << (out.tellp() > 0 ? "; " : "") << c.name << " " << to_string(mode) << " min " << o.min_count;
        }
      }
    }
  }
  summary = out.str();
  return t;
}

// 8. Random forests: library and oracle agree on both sides and the
// inequality holds.
Tally forest_gap(std::string& summary) {
  Tally t;
  std::mt19937_64 rng(8);
  std::uint64_t tight = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 4);
    const SignedGraph f = oracle::random_forest(rng, n);
    const auto raw = oracle::random_k_lists(rng, n, k, 4);
    const auto [lhs, rhs] = oracle::forest_gap(f, raw, k);
    const ForestGap gap = forest_gap_check(f, lists_from(raw), k);
    tight += lhs == rhs ? 1 : 0;
    t.expect(lhs <= rhs && gap.holds() && gap.lhs == lhs && gap.rhs == rhs, [&] {
      return format_graph(f) + format_list(lists_from(raw)) + "k=" + std::to_string(k) + " lhs " + lhs.str() +
             " rhs " + rhs.str();
    });
  }
  summary = "10000 forests, " + std::to_string(tight) + " with equality";
  return t;
}

// 9. All-positive graphs: one polynomial, equal to the classical count.
Tally balanced_reduction(std::string& summary) {
  Tally t;
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const SignedGraph g = oracle::random_signed_graph(rng, 5, 10, false, false);
    const QuasiPolynomial q = quasi_polynomial(g, EdgeOrder::identity(g.edge_count()));
    t.expect(q.odd == q.even, [&] { return format_graph(g) + "P1 " + show(q.odd) + " P0 " + show(q.even); });
    for (int k = 1; k <= 5; ++k) {
      const Count classical = oracle::classical_count(g, k);
      const Count brute = brute_count_k(g, k);
      const Count poly = q.evaluate(k);
      t.expect(classical == brute && classical == poly, [&] {
        return format_graph(g) + "k=" + std::to_string(k) + " classical " + classical.str() + " poly " + poly.str();
      });
    }
  }
  summary = "50 graphs";
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Tally(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence on all small signed graphs", oracle_equivalence},
      {2, "fixture quasi-polynomials", fixture_polynomials},
      {3, "NBC census fixtures", census_fixtures},
      {4, "edge-order invariance", order_invariance},
      {5, "switching invariance", switching_invariance},
      {6, "no counterexample for k=4 lists", no_counterexample_any},
      {7, "no counterexample for 0-included k=3 and 0-free k=4", no_counterexample_parity},
      {8, "forest gap inequality", forest_gap},
      {9, "balanced reduction to the chromatic polynomial", balanced_reduction},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string summary;
    Tally t;
    try {
      t = c.run(summary);
    } catch (const std::exception& e) {
      ++t.failures;
      t.detail << "\n    exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures == 0;
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << t.checks
              << " checks, " << t.failures << " failures";
    if (!summary.empty()) std::cout << "; " << summary;
    std::cout << "; " << std::fixed << std::setprecision(2) << seconds << "s)";
    std::cout << t.detail.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
