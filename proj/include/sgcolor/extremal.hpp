#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgcolor/circuits.hpp"
#include "sgcolor/counting.hpp"
#include "sgcolor/graph.hpp"

namespace sgcolor {

// k - |L(u) ∩ L(v)| on a positive edge, k - |(-L(u)) ∩ L(v)| on a negative one.
int alpha(const SignedGraph& g, int edge, const ListAssignment& lists, int k);

inline constexpr double kLnOnePlusSqrtTwo = 0.88137358701954302523;

struct ThresholdReport {
  int m = 0;
  Count t1;          // C(m,3) + C(m,4) + m - 1
  double t2 = 0.0;   // (m - 1) / ln(1 + sqrt 2)
  int min_odd_k = 1;   // smallest odd k >= 1 with k > t2
  int min_even_k = 2;  // smallest even k >= 2 with k > t2
};

ThresholdReport thresholds(int m);

enum class ListMode { Any, ZeroFree, ZeroIncluded };

std::string to_string(ListMode mode);
std::optional<ListMode> parse_mode(std::string_view text);

struct SearchStrategy {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  static SearchStrategy exhaustive() { return {}; }
  static SearchStrategy random(std::uint64_t trials, std::uint64_t seed) { return {Kind::Random, trials, seed}; }
};

struct SearchOptions {
  ListMode mode = ListMode::Any;
  int universe = 0;  // colors drawn from [-U, U]; 0 means U = k
  SearchStrategy strategy;
  // Exhaustive search refuses when the unpruned candidate count exceeds this.
  std::uint64_t budget = 100'000'000;
  // Restrict the first vertex's list to one representative per orbit of the
  // sign-respecting relabelings of [-U, U].
  bool use_symmetry = true;
  CircuitLimits limits;
};

struct SearchOutcome {
  ListMode mode = ListMode::Any;
  int k = 0;
  int universe = 0;
  SearchStrategy strategy;
  std::uint64_t evaluated = 0;
  Count min_count;
  ListAssignment argmin;  // lexicographically smallest minimizer seen
  Count canonical_count;  // P(Σ, k)
  bool counterexample_found = false;  // min_count < canonical_count

  // Assignments with P(Σ, L) == canonical_count and how many of them failed
  // the structure checks.
  std::uint64_t attaining = 0;
  std::uint64_t attaining_edge_failures = 0;
  std::uint64_t attaining_negation_failures = 0;
};

SearchOutcome minimize_over_assignments(const SignedGraph& g, int k, const SearchOptions& options);

std::string format_outcome(const SearchOutcome& outcome);

struct MinimizerStructure {
  std::vector<int> alphas;     // per edge
  bool edges_match = true;     // α(e, L) = 0 on every edge, i.e. L(u) = σ(e) L(v)
  bool negation_closed = true;  // L(v) = -L(v) on every unbalanced component
  std::vector<int> open_vertices;  // unbalanced-component vertices with L(v) != -L(v)
};

MinimizerStructure check_minimizer_structure(const SignedGraph& g, const ListAssignment& lists, int k);

struct ForestGap {
  Count lhs;  // k^c - ∏ |∩ L'(v)| over the c trees
  Count rhs;  // k^(c-1) Σ over tree edges of (k - |L'(u) ∩ L'(v)|)
  bool holds() const { return lhs <= rhs; }
};

// Evaluates the tree-product gap inequality for a forest carrying k-lists.
// Trees with negative edges are switched to all-positive form first (lists
// switched along). Throws ContractViolation on a cycle or a list of size != k.
ForestGap forest_gap_check(const SignedGraph& forest, const ListAssignment& lists, int k);

// P(Σ, L) by whichever exact method is cheapest for the given lists.
class ListCounter {
 public:
  explicit ListCounter(const SignedGraph& g, CircuitLimits limits = {});
  Count operator()(const ListAssignment& lists) const;
  bool has_expansion() const { return expansion_.has_value(); }

 private:
  SignedGraph graph_;
  std::optional<NbcExpansion> expansion_;
};

}  // namespace sgcolor
