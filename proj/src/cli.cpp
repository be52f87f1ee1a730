#include "sgcolor/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "sgcolor/circuits.hpp"
#include "sgcolor/counting.hpp"
#include "sgcolor/errors.hpp"
#include "sgcolor/extremal.hpp"
#include "sgcolor/graph.hpp"

namespace sgcolor::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ContractViolation(std::string(what) + ": \"" + tok + "\" is not an integer");
    }
  }
  return out;
}

EdgeOrder order_for(const SignedGraph& g, const std::string& spec) {
  if (spec.empty()) return EdgeOrder::identity(g.edge_count());
  return EdgeOrder::from_sequence(parse_int_list(spec, "--order"), g.edge_count());
}

template <typename T>
std::string joined(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return out.str();
}

std::string labelled(const char* label, const std::string& body) {
  return body.empty() ? std::string(label) + ":" : std::string(label) + ": " + body;
}

struct Common {
  std::string graph_path;
  std::string order;
  int max_edges = 20;
  std::size_t max_circuits = 100000;

  CircuitLimits limits() const { return {max_circuits, max_edges}; }
};

void add_common(CLI::App* sub, Common& c, bool with_order) {
  sub->add_option("graph", c.graph_path, "Signed graph file (.sg)")->required();
  if (with_order) sub->add_option("--order", c.order, "Edge order as a comma-separated permutation of 0..m-1");
  sub->add_option("--max-edges", c.max_edges, "Cap on m for 2^m subset sums")->capture_default_str();
  sub->add_option("--max-circuits", c.max_circuits, "Cap on enumerated circuits")->capture_default_str();
}

void print_poly(const SignedGraph& g, const EdgeOrder& order, CircuitLimits limits, std::ostream& out) {
  const NbcCensus census = nbc_census(g, order, limits);
  const QuasiPolynomial q = quasi_polynomial(census);
  out << labelled("c", joined(census.c)) << '\n';
  out << labelled("c*", joined(census.c_star)) << '\n';
  out << labelled("P1", joined(q.odd)) << '\n';
  out << labelled("P0", joined(q.even)) << '\n';
}

std::string edge_list(EdgeSubset s) { return joined(s.members()); }

void print_circuits(const SignedGraph& g, const EdgeOrder& order, CircuitLimits limits, std::ostream& out) {
  const auto cycles = enumerate_cycles(g, limits);
  out << "cycles: " << cycles.size() << '\n';
  for (const Cycle& c : cycles) {
    out << "  {" << edge_list(c.edge_set) << "} " << (c.balanced ? "balanced" : "unbalanced") << '\n';
  }
  const auto barbells = enumerate_barbells(g, limits);
  out << "barbells: " << barbells.size() << '\n';
  for (const Barbell& b : barbells) {
    out << "  {" << edge_list(b.edge_set) << "} cycles {" << edge_list(b.first.edge_set) << "} {"
        << edge_list(b.second.edge_set) << "} path {" << joined(b.path) << "}\n";
  }
  const BrokenCircuitSet bcs = broken_circuits(g, order, limits);
  out << "broken circuits: " << bcs.broken.size() << '\n';
  for (const BrokenCircuit& b : bcs.broken) {
    out << "  {" << edge_list(b.edges) << "} removed " << b.removed_edge << " multiplicity " << b.multiplicity
        << '\n';
  }
  out << "minimal broken circuits: " << bcs.minimal.size() << '\n';
  for (EdgeSubset s : bcs.minimal) out << "  {" << edge_list(s) << "}\n";
}

// Cross-checks every counting route and the structural invariants on one
// graph. Returns false on any mismatch.
struct Verifier {
  const SignedGraph& g;
  CircuitLimits limits;
  std::ostream& out;
  bool all_ok = true;

  void report(const std::string& name, bool ok, const std::string& detail = {}) {
    out << (ok ? "ok   " : "FAIL ") << name;
    if (!ok && !detail.empty()) out << ": " << detail;
    out << '\n';
    all_ok = all_ok && ok;
  }

  ListAssignment random_lists(std::mt19937_64& rng) const {
    std::vector<int> pool(11);
    std::iota(pool.begin(), pool.end(), -5);
    std::uniform_int_distribution<int> size(1, 5);
    std::vector<ColorList> lists;
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::shuffle(pool.begin(), pool.end(), rng);
      lists.emplace_back(pool.begin(), pool.begin() + size(rng));
    }
    return ListAssignment(std::move(lists));
  }

  void run(int kmax, int trials, std::uint64_t seed) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const bool ie_ok = m <= limits.max_edges;
    const EdgeOrder identity = EdgeOrder::identity(m);
    const NbcExpansion expansion(g, identity, limits);
    const QuasiPolynomial q = quasi_polynomial(expansion.census());
    std::mt19937_64 rng(seed);

    for (int k = 1; k <= kmax; ++k) {
      const Count brute = brute_count_k(g, k);
      const ListAssignment uniform = ListAssignment::uniform(n, k);
      const Count poly = q.evaluate(k);
      const Count nbc = expansion.count(uniform);
      std::ostringstream detail;
      detail << "brute " << brute << " poly " << poly << " nbc " << nbc;
      bool ok = brute == poly && brute == nbc;
      if (ie_ok) {
        const Count ie = inclusion_exclusion_count(g, uniform, {limits.max_edges});
        detail << " ie " << ie;
        ok = ok && brute == ie;
      }
      report("P(k) methods agree at k=" + std::to_string(k) + " (" + brute.str() + ")", ok, detail.str());
    }

    int list_failures = 0;
    int switch_failures = 0;
    int beta_failures = 0;
    std::string first_failure;
    for (int t = 0; t < trials; ++t) {
      const ListAssignment lists = random_lists(rng);
      const Count brute = brute_count_list(g, lists);
      const Count nbc = expansion.count(lists);
      const Count general = expansion.count(lists, NbcPath::General);
      const Count ie = ie_ok ? inclusion_exclusion_count(g, lists, {limits.max_edges}) : brute;
      if (brute != nbc || brute != general || brute != ie) {
        if (list_failures++ == 0) first_failure = format_list(lists);
      }

      std::vector<int> at;
      for (int v = 0; v < n; ++v) {
        if (rng() & 1U) at.push_back(v);
      }
      if (brute_count_list(switch_graph(g, at), switch_list(lists, at)) != brute) ++switch_failures;

      const EdgeSubset subset(m == 0 ? 0 : rng() & EdgeSubset::all(m).bits());
      for (const Component& c : components_of(g, subset).components) {
        if (c.balanced && beta(g, c, lists) != beta_from_anchored_side(g, c, lists)) ++beta_failures;
      }
    }
    report("P(L) brute = inclusion-exclusion = NBC on " + std::to_string(trials) + " random lists",
           list_failures == 0, std::to_string(list_failures) + " mismatches, first:\n" + first_failure);
    report("switching invariance", switch_failures == 0, std::to_string(switch_failures) + " mismatches");
    report("beta independent of Harary side", beta_failures == 0, std::to_string(beta_failures) + " mismatches");

    int order_failures = 0;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < trials; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      if (nbc_census(g, EdgeOrder::from_sequence(perm, m), limits) != expansion.census()) ++order_failures;
    }
    report("NBC census independent of edge order", order_failures == 0,
           std::to_string(order_failures) + " permutations disagree");

    int shape_failures = 0;
    for (const auto& term : expansion.terms()) {
      const ComponentReport r = components_of(g, term.edges);
      for (const Component& c : r.components) {
        const std::size_t want = c.vertices.size() - (c.balanced ? 1 : 0);
        if (c.edges.size() != want) ++shape_failures;
      }
      if (r.balanced_count != n - term.edges.size()) ++shape_failures;
    }
    report("NBC subsets are forests plus unbalanced unicycles", shape_failures == 0,
           std::to_string(shape_failures) + " violations");

    const EdgeSubset all = EdgeSubset::all(m);
    const bool balanced = components_of(g, all).balanced_count == static_cast<int>(components_of(g, all).components.size());
    report("balance test agrees with unbalanced-cycle search", balanced == !find_unbalanced_cycle(g, all).has_value());
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coloring counts and chromatic quasi-polynomials of signed graphs", "sgcolor"};
  app.require_subcommand(1, 1);

  Common common;

  auto* poly = app.add_subcommand("poly", "NBC census and the quasi-polynomial pair P1/P0");
  add_common(poly, common, true);

  int k = 0;
  std::string list_path;
  std::string method = "nbc";
  auto* count = app.add_subcommand("count", "Count proper colorings for a palette size or a list file");
  add_common(count, common, true);
  auto* k_opt = count->add_option("-k", k, "Palette size (colors M_k)");
  auto* list_opt = count->add_option("--list", list_path, "List assignment file (.lst)");
  k_opt->excludes(list_opt);
  count->add_option("--method", method, "brute | ie | nbc")
      ->check(CLI::IsMember({"brute", "ie", "nbc"}))
      ->capture_default_str();

  auto* circuits = app.add_subcommand("circuits", "Cycles, barbells and broken circuits");
  add_common(circuits, common, true);

  int kmax = 5;
  int trials = 20;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Cross-check all counting methods and invariants");
  add_common(verify, common, false);
  verify->add_option("--kmax", kmax, "Largest palette size to check")->capture_default_str();
  verify->add_option("--trials", trials, "Random list assignments and permutations")->capture_default_str();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();

  std::string mode_text;
  int universe = 0;
  std::uint64_t random_trials = 0;
  std::uint64_t budget = SearchOptions{}.budget;
  auto* minimize = app.add_subcommand("minimize", "Search k-assignments for the fewest list colorings");
  add_common(minimize, common, false);
  minimize->add_option("-k", k, "List size")->required();
  minimize->add_option("--mode", mode_text, "any | zero-free | zero-included")
      ->required()
      ->check(CLI::IsMember({"any", "zero-free", "zero-included"}));
  minimize->add_option("--universe", universe, "Colors come from [-U, U] (default U = k)");
  auto* exhaustive_flag = minimize->add_flag("--exhaustive", "Enumerate every assignment (default)");
  auto* random_opt = minimize->add_option("--random", random_trials, "Sample this many random assignments");
  exhaustive_flag->excludes(random_opt);
  minimize->add_option("--seed", seed, "Random seed")->capture_default_str();
  minimize->add_option("--budget", budget, "Cap on exhaustive candidates")->capture_default_str();

  std::string at;
  auto* sw = app.add_subcommand("switch", "Switch the graph at a vertex set");
  add_common(sw, common, false);
  sw->add_option("--at", at, "Comma-separated vertices")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const SignedGraph g = parse_graph(read_file(common.graph_path));
    const CircuitLimits limits = common.limits();

    if (poly->parsed()) {
      print_poly(g, order_for(g, common.order), limits, out);
    } else if (count->parsed()) {
      if (k_opt->count() == 0 && list_opt->count() == 0) {
        err << "error: count needs -k K or --list FILE\n";
        return kUsage;
      }
      const ListAssignment lists = list_opt->count() > 0 ? parse_list(read_file(list_path), g.vertex_count())
                                                         : ListAssignment();
      if (k_opt->count() > 0 && k < 0) throw ContractViolation("-k must be non-negative");
      Count result;
      if (method == "brute") {
        result = k_opt->count() > 0 ? brute_count_k(g, k) : brute_count_list(g, lists);
      } else if (k_opt->count() > 0 && k == 0) {
        result = g.vertex_count() == 0 ? 1 : 0;
      } else {
        const ListAssignment effective = k_opt->count() > 0 ? ListAssignment::uniform(g.vertex_count(), k) : lists;
        result = method == "ie" ? inclusion_exclusion_count(g, effective, {limits.max_edges})
                                : nbc_list_count(g, effective, order_for(g, common.order), limits);
      }
      out << result << '\n';
    } else if (circuits->parsed()) {
      print_circuits(g, order_for(g, common.order), limits, out);
    } else if (verify->parsed()) {
      Verifier v{g, limits, out};
      v.run(kmax, trials, seed);
      return v.all_ok ? kOk : kMismatch;
    } else if (minimize->parsed()) {
      SearchOptions options;
      options.mode = *parse_mode(mode_text);
      options.universe = universe;
      options.budget = budget;
      options.limits = limits;
      options.strategy = random_opt->count() > 0 ? SearchStrategy::random(random_trials, seed)
                                                 : SearchStrategy::exhaustive();
      out << format_outcome(minimize_over_assignments(g, k, options));
    } else if (sw->parsed()) {
      out << format_graph(switch_graph(g, parse_int_list(at, "--at")));
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace sgcolor::cli
