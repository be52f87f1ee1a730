#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "sgcolor/counting.hpp"
#include "sgcolor/graph.hpp"

namespace sgcolor {

struct Cycle {
  std::vector<int> edges;     // traversal order
  std::vector<int> vertices;  // sorted
  EdgeSubset edge_set;
  bool balanced = true;  // even number of negative edges
};

// Two unbalanced cycles joined by a possibly empty path; first touches the
// path only at its end vertex, second likewise, and nothing else is shared.
struct Barbell {
  Cycle first;
  Cycle second;
  std::vector<int> path;  // edge positions from first towards second
  EdgeSubset edge_set;
};

struct Circuit {
  std::variant<Cycle, Barbell> shape;

  bool is_barbell() const { return std::holds_alternative<Barbell>(shape); }
  EdgeSubset edge_set() const {
    return std::visit([](const auto& s) { return s.edge_set; }, shape);
  }
};

struct CircuitLimits {
  std::size_t max_circuits = 100000;
  int max_edges = 20;  // NBC enumeration walks subsets of E
};

// A linear order on E. `sequence` lists edge positions from smallest to
// largest; `rank[e]` is the inverse permutation.
class EdgeOrder {
 public:
  static EdgeOrder identity(int m);
  // Throws ContractViolation unless `sequence` is a permutation of 0..m-1.
  static EdgeOrder from_sequence(std::vector<int> sequence, int m);

  int size() const { return static_cast<int>(sequence_.size()); }
  const std::vector<int>& sequence() const { return sequence_; }
  int rank(int e) const { return rank_.at(static_cast<std::size_t>(e)); }
  // Largest member of a nonempty subset.
  int max_of(EdgeSubset subset) const;

 private:
  std::vector<int> sequence_;
  std::vector<int> rank_;
};

struct BrokenCircuit {
  EdgeSubset edges;
  int removed_edge = -1;       // maximum edge of the first source circuit
  std::size_t source = 0;      // index of the first circuit producing it
  std::size_t multiplicity = 1;
};

struct BrokenCircuitSet {
  std::vector<Circuit> circuits;
  std::vector<BrokenCircuit> broken;  // one entry per distinct edge set
  std::vector<EdgeSubset> minimal;    // inclusion-minimal broken circuits
};

// Counts of NBC subsets by size. c has n+1 entries. c_star counts those whose
// spanning subgraph is balanced and has n entries, except for the empty
// graph where it is {1}.
struct NbcCensus {
  std::vector<std::uint64_t> c;
  std::vector<std::uint64_t> c_star;

  bool operator==(const NbcCensus&) const = default;
};

// Coefficients by descending power, constant term last, n+1 entries each.
struct QuasiPolynomial {
  std::vector<std::int64_t> odd;   // P^1, used at odd k
  std::vector<std::int64_t> even;  // P^0, used at even k

  Count evaluate(int k) const;
  bool operator==(const QuasiPolynomial&) const = default;
};

// All simple cycles, 2-cycles on parallel edges included, ordered by edge set
// bit pattern.
std::vector<Cycle> enumerate_cycles(const SignedGraph& g, CircuitLimits limits = {});

std::vector<Barbell> enumerate_barbells(const SignedGraph& g, CircuitLimits limits = {});

// Balanced cycles and barbells, ordered by edge set bit pattern.
std::vector<Circuit> enumerate_circuits(const SignedGraph& g, CircuitLimits limits = {});

BrokenCircuitSet broken_circuits(const SignedGraph& g, const EdgeOrder& order, CircuitLimits limits = {});

enum class NbcPath {
  Auto,     // skip γ for 0-included lists, skip unbalanced subsets for 0-free lists
  General,  // evaluate γ on every term
};

// Every NBC subset of E with the shape of its spanning subgraph, ready to be
// evaluated against any number of list assignments.
class NbcExpansion {
 public:
  NbcExpansion(const SignedGraph& g, const EdgeOrder& order, CircuitLimits limits = {});

  const NbcCensus& census() const { return census_; }
  std::size_t term_count() const { return terms_.size(); }
  int vertex_count() const { return n_; }

  Count count(const ListAssignment& lists, NbcPath path = NbcPath::Auto) const;

  // Per-term structure, exposed for structural checks.
  struct Term {
    EdgeSubset edges;
    bool balanced = true;
    std::uint32_t groups_begin = 0;  // into group_ends_
    std::uint32_t groups_end = 0;
    std::uint32_t unbalanced_begin = 0;  // into unbalanced_vertices_
    std::uint32_t unbalanced_end = 0;
  };
  const std::vector<Term>& terms() const { return terms_; }
  // Balanced components of a term's spanning subgraph as (vertex, negated)
  // lists; each is a tree for NBC subsets.
  std::vector<std::vector<std::pair<int, bool>>> balanced_components(const Term& term) const;
  std::vector<int> unbalanced_vertices(const Term& term) const;

 private:
  int n_ = 0;
  NbcCensus census_;
  std::vector<Term> terms_;
  std::vector<std::uint32_t> group_ends_;        // end offsets into members_
  std::vector<std::pair<int, bool>> members_;    // (vertex, on negated side)
  std::vector<int> unbalanced_vertices_;
};

NbcCensus nbc_census(const SignedGraph& g, const EdgeOrder& order, CircuitLimits limits = {});

QuasiPolynomial quasi_polynomial(const NbcCensus& census);
QuasiPolynomial quasi_polynomial(const SignedGraph& g, const EdgeOrder& order, CircuitLimits limits = {});

Count nbc_list_count(const SignedGraph& g, const ListAssignment& lists, const EdgeOrder& order,
                     CircuitLimits limits = {}, NbcPath path = NbcPath::Auto);

}  // namespace sgcolor
