#include "sgcolor/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "sgcolor/errors.hpp"

namespace sgcolor {

namespace {

std::size_t uz(int v) { return static_cast<std::size_t>(v); }

Count binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  Count out = 1;
  for (int i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

void require_k_lists(const ListAssignment& lists, int k) {
  for (int v = 0; v < lists.vertex_count(); ++v) {
    if (static_cast<int>(lists[v].size()) != k) {
      throw ContractViolation("list of vertex " + std::to_string(v) + " has size " +
                              std::to_string(lists[v].size()) + ", expected " + std::to_string(k));
    }
  }
}

// All k-subsets of a sorted pool, in lexicographic order.
std::vector<ColorList> subsets_of(const std::vector<int>& pool, int k) {
  std::vector<ColorList> out;
  const int n = static_cast<int>(pool.size());
  if (k > n || k < 0) return out;
  std::vector<int> pick(uz(k));
  for (int i = 0; i < k; ++i) pick[uz(i)] = i;
  while (true) {
    ColorList l;
    l.reserve(uz(k));
    for (int i : pick) l.push_back(pool[uz(i)]);
    out.push_back(std::move(l));
    int i = k - 1;
    while (i >= 0 && pick[uz(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[uz(i)];
    for (int j = i + 1; j < k; ++j) pick[uz(j)] = pick[uz(j - 1)] + 1;
  }
  return out;
}

struct Universe {
  std::vector<int> pool;  // colors chosen freely
  bool force_zero = false;
  int free_picks = 0;     // colors drawn from the pool per list

  ColorList complete(ColorList picked) const {
    if (force_zero) {
      picked.push_back(0);
      std::sort(picked.begin(), picked.end());
    }
    return picked;
  }
};

Universe make_universe(ListMode mode, int bound, int k) {
  Universe u;
  for (int c = -bound; c <= bound; ++c) {
    if (c == 0 && mode != ListMode::Any) continue;
    u.pool.push_back(c);
  }
  u.force_zero = mode == ListMode::ZeroIncluded;
  u.free_picks = u.force_zero ? k - 1 : k;
  return u;
}

// One representative per orbit of k-subsets of [-U, U] under the maps
// c -> ±π(|c|): p colors paired with their negatives, s unpaired, plus 0.
std::vector<ColorList> orbit_representatives(ListMode mode, int bound, int k) {
  std::vector<ColorList> out;
  for (int z = 0; z <= 1; ++z) {
    if (mode == ListMode::ZeroFree && z == 1) continue;
    if (mode == ListMode::ZeroIncluded && z == 0) continue;
    for (int p = 0; 2 * p + z <= k; ++p) {
      const int s = k - z - 2 * p;
      if (p + s > bound) continue;
      ColorList l;
      for (int a = 1; a <= p; ++a) {
        l.push_back(a);
        l.push_back(-a);
      }
      for (int a = p + 1; a <= p + s; ++a) l.push_back(a);
      if (z == 1) l.push_back(0);
      std::sort(l.begin(), l.end());
      out.push_back(std::move(l));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void consider(SearchOutcome& out, const SignedGraph& g, const ListAssignment& lists, const Count& count, int k) {
  ++out.evaluated;
  if (out.evaluated == 1 || count < out.min_count || (count == out.min_count && lists < out.argmin)) {
    out.min_count = count;
    out.argmin = lists;
  }
  if (count == out.canonical_count) {
    ++out.attaining;
    const MinimizerStructure s = check_minimizer_structure(g, lists, k);
    if (!s.edges_match) ++out.attaining_edge_failures;
    if (!s.negation_closed) ++out.attaining_negation_failures;
  }
}

}  // namespace

int alpha(const SignedGraph& g, int edge, const ListAssignment& lists, int k) {
  detail::require_lists_match(g, lists);
  if (edge < 0 || edge >= g.edge_count()) throw ContractViolation("edge position out of range");
  const Edge& e = g.edge(edge);
  const ColorList& lu = lists[e.u];
  const ColorList& lv = lists[e.v];
  if (static_cast<int>(lu.size()) != k || static_cast<int>(lv.size()) != k) {
    throw ContractViolation("alpha needs lists of size k on both endpoints");
  }
  const std::size_t common = e.sign == Sign::Positive ? intersection_size(lu, lv) : intersection_size(negate(lu), lv);
  return k - static_cast<int>(common);
}

ThresholdReport thresholds(int m) {
  if (m < 0) throw ContractViolation("negative edge count");
  ThresholdReport r;
  r.m = m;
  r.t1 = binomial(m, 3) + binomial(m, 4) + m - 1;
  r.t2 = static_cast<double>(m - 1) / kLnOnePlusSqrtTwo;
  int k = std::max(1, static_cast<int>(std::floor(r.t2)) + 1);
  while (static_cast<double>(k) <= r.t2) ++k;
  r.min_odd_k = k % 2 == 1 ? k : k + 1;
  r.min_even_k = k % 2 == 0 ? k : k + 1;
  return r;
}

std::string to_string(ListMode mode) {
  switch (mode) {
    case ListMode::Any:
      return "any";
    case ListMode::ZeroFree:
      return "zero-free";
    case ListMode::ZeroIncluded:
      return "zero-included";
  }
  return "?";
}

std::optional<ListMode> parse_mode(std::string_view text) {
  if (text == "any") return ListMode::Any;
  if (text == "zero-free") return ListMode::ZeroFree;
  if (text == "zero-included") return ListMode::ZeroIncluded;
  return std::nullopt;
}

ListCounter::ListCounter(const SignedGraph& g, CircuitLimits limits) : graph_(g) {
  if (g.edge_count() <= limits.max_edges) {
    try {
      expansion_.emplace(g, EdgeOrder::identity(g.edge_count()), limits);
    } catch (const ResourceError&) {
      expansion_.reset();
    }
  }
}

Count ListCounter::operator()(const ListAssignment& lists) const {
  if (expansion_) {
    // Brute force visits at most ∏|L(v)| partial colorings; the expansion
    // touches every term once per vertex.
    const double nbc_cost = static_cast<double>(expansion_->term_count()) * std::max(1, graph_.vertex_count());
    double brute_cost = 1.0;
    for (const auto& l : lists.lists()) brute_cost *= static_cast<double>(l.size());
    if (nbc_cost < brute_cost) return expansion_->count(lists);
  }
  return brute_count_list(graph_, lists);
}

SearchOutcome minimize_over_assignments(const SignedGraph& g, int k, const SearchOptions& options) {
  if (k < 1) throw ContractViolation("k must be positive");
  if (options.mode == ListMode::ZeroFree && k % 2 == 1) {
    throw ContractViolation("zero-free mode compares against P^0 and needs even k");
  }
  if (options.mode == ListMode::ZeroIncluded && k % 2 == 0) {
    throw ContractViolation("zero-included mode compares against P^1 and needs odd k");
  }
  const int bound = options.universe > 0 ? options.universe : k;
  const int n = g.vertex_count();
  const Universe universe = make_universe(options.mode, bound, k);
  if (universe.free_picks > static_cast<int>(universe.pool.size())) {
    throw ContractViolation("universe [-" + std::to_string(bound) + ", " + std::to_string(bound) +
                            "] holds no list of size " + std::to_string(k) + " in mode " + to_string(options.mode));
  }

  const ListCounter counter(g, options.limits);
  SearchOutcome out;
  out.mode = options.mode;
  out.k = k;
  out.universe = bound;
  out.strategy = options.strategy;
  out.canonical_count = counter(ListAssignment::uniform(n, k));

  if (options.strategy.kind == SearchStrategy::Kind::Exhaustive) {
    const Count per_vertex = binomial(static_cast<int>(universe.pool.size()), universe.free_picks);
    Count total = 1;
    for (int v = 0; v < n; ++v) total *= per_vertex;
    if (total > options.budget) {
      throw ResourceError("budget", options.budget,
                          "exhaustive search over " + total.str() + " assignments exceeds the budget of " +
                              std::to_string(options.budget) + "; use the random strategy");
    }
    std::vector<ColorList> choices;
    for (auto& picked : subsets_of(universe.pool, universe.free_picks)) choices.push_back(universe.complete(picked));
    std::sort(choices.begin(), choices.end());
    const std::vector<ColorList> first =
        options.use_symmetry && n > 0 ? orbit_representatives(options.mode, bound, k) : choices;

    std::vector<std::size_t> digit(uz(n), 0);
    std::vector<ColorList> lists(uz(n));
    while (true) {
      for (int v = 0; v < n; ++v) lists[uz(v)] = (v == 0 ? first : choices)[digit[uz(v)]];
      const ListAssignment assignment(lists);
      consider(out, g, assignment, counter(assignment), k);
      int pos = n - 1;
      while (pos >= 0) {
        const std::size_t limit = (pos == 0 ? first : choices).size();
        if (++digit[uz(pos)] < limit) break;
        digit[uz(pos--)] = 0;
      }
      if (pos < 0) break;
    }
  } else {
    std::mt19937_64 rng(options.strategy.seed);
    std::vector<int> pool = universe.pool;
    for (std::uint64_t trial = 0; trial < options.strategy.trials; ++trial) {
      std::vector<ColorList> lists(uz(n));
      for (int v = 0; v < n; ++v) {
        // Partial Fisher-Yates: the first free_picks entries form a uniform subset.
        for (int i = 0; i < universe.free_picks; ++i) {
          std::uniform_int_distribution<std::size_t> pick(uz(i), pool.size() - 1);
          std::swap(pool[uz(i)], pool[pick(rng)]);
        }
        ColorList l(pool.begin(), pool.begin() + universe.free_picks);
        std::sort(l.begin(), l.end());
        lists[uz(v)] = universe.complete(std::move(l));
      }
      const ListAssignment assignment(std::move(lists));
      consider(out, g, assignment, counter(assignment), k);
    }
  }
  out.counterexample_found = out.evaluated > 0 && out.min_count < out.canonical_count;
  return out;
}

std::string format_outcome(const SearchOutcome& o) {
  std::ostringstream out;
  out << "mode: " << to_string(o.mode) << '\n';
  out << "k: " << o.k << '\n';
  out << "U: " << o.universe << '\n';
  if (o.strategy.kind == SearchStrategy::Kind::Exhaustive) {
    out << "strategy: exhaustive\n";
  } else {
    out << "strategy: random seed=" << o.strategy.seed << '\n';
  }
  out << "trials: " << o.evaluated << '\n';
  out << "minCount: " << o.min_count << '\n';
  out << "canonicalCount: " << o.canonical_count << '\n';
  out << "counterexampleFound: " << (o.counterexample_found ? "true" : "false") << '\n';
  out << "attaining: " << o.attaining << '\n';
  out << "attainingEdgeFailures: " << o.attaining_edge_failures << '\n';
  out << "attainingNegationFailures: " << o.attaining_negation_failures << '\n';
  out << "argmin:\n" << format_list(o.argmin);
  return out.str();
}

MinimizerStructure check_minimizer_structure(const SignedGraph& g, const ListAssignment& lists, int k) {
  detail::require_lists_match(g, lists);
  require_k_lists(lists, k);
  MinimizerStructure s;
  for (int e = 0; e < g.edge_count(); ++e) {
    s.alphas.push_back(alpha(g, e, lists, k));
    if (s.alphas.back() != 0) s.edges_match = false;
  }
  const ComponentReport report = components_of(g, EdgeSubset::all(g.edge_count()));
  for (int v : report.unbalanced_vertices) {
    if (negate(lists[v]) != lists[v]) s.open_vertices.push_back(v);
  }
  s.negation_closed = s.open_vertices.empty();
  return s;
}

ForestGap forest_gap_check(const SignedGraph& forest, const ListAssignment& lists, int k) {
  detail::require_lists_match(forest, lists);
  require_k_lists(lists, k);
  const ComponentReport report = components_of(forest, EdgeSubset::all(forest.edge_count()));

  std::vector<int> negated;
  for (const Component& c : report.components) {
    if (c.edges.size() + 1 != c.vertices.size()) throw ContractViolation("forest_gap_check: component is not a tree");
    const HararySplit split = harary_split(forest, c);
    negated.insert(negated.end(), split.negated.begin(), split.negated.end());
  }
  const ListAssignment switched = switch_list(lists, negated);

  Count product = 1;
  for (const Component& c : report.components) {
    ColorList common = switched[c.vertices.front()];
    for (int v : c.vertices) {
      ColorList next;
      std::set_intersection(common.begin(), common.end(), switched[v].begin(), switched[v].end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    product *= common.size();
  }
  Count defect = 0;
  for (const Edge& e : forest.edges()) defect += k - static_cast<int>(intersection_size(switched[e.u], switched[e.v]));

  const auto trees = static_cast<unsigned>(report.components.size());
  ForestGap gap;
  gap.lhs = boost::multiprecision::pow(Count(k), trees) - product;
  gap.rhs = trees == 0 ? Count(0) : boost::multiprecision::pow(Count(k), trees - 1) * defect;
  return gap;
}

}  // namespace sgcolor
