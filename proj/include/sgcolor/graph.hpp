#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgcolor {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flip(Sign s) noexcept { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

struct Edge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::Positive;

  bool operator==(const Edge&) const = default;
  int other(int w) const noexcept { return w == u ? v : u; }
};

// Vertices are 0..n-1. Edge identity is its position in the edge list, and
// that position order is the default linear order on the edges. Parallel
// edges are allowed, loops are not.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int n);
  SignedGraph(int n, std::vector<Edge> edges);

  int add_edge(int u, int v, Sign sign);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool operator==(const SignedGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// F ⊆ E as a bit mask over edge positions. Exponential routines never run
// beyond a few dozen edges, so 64 bits is the hard ceiling.
class EdgeSubset {
 public:
  static constexpr int kMaxEdges = 64;

  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(std::uint64_t bits) : bits_(bits) {}

  static EdgeSubset all(int m);
  static EdgeSubset of(std::span<const int> edges);

  constexpr bool contains(int e) const noexcept { return (bits_ >> e) & 1U; }
  constexpr void insert(int e) noexcept { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(int e) noexcept { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool is_subset_of(EdgeSubset other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> members() const;

  constexpr auto operator<=>(const EdgeSubset&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Throws ResourceError when g has more edges than an EdgeSubset can address.
void require_addressable(const SignedGraph& g);

struct Component {
  std::vector<int> vertices;  // sorted
  std::vector<int> edges;     // sorted edge positions
  bool balanced = true;
};

struct ComponentReport {
  std::vector<Component> components;  // ordered by smallest vertex
  int balanced_count = 0;             // b(F)
  std::vector<int> unbalanced_vertices;
};

// Harary bipartition of a balanced connected component. `negated` is the
// side to switch at to make every edge positive; `anchored` is the side that
// holds the component's smallest vertex. An all-positive component therefore
// reports negated = {} and anchored = V(T).
struct HararySplit {
  std::vector<int> negated;
  std::vector<int> anchored;
};

SignedGraph parse_graph(std::string_view text);
std::string format_graph(const SignedGraph& g);

SignedGraph switch_graph(const SignedGraph& g, std::span<const int> vertices);

ComponentReport components_of(const SignedGraph& g, EdgeSubset subset);

HararySplit harary_split(const SignedGraph& g, const Component& component);

// Edge positions of a simple cycle with an odd number of negative edges, in
// traversal order, or nullopt when <F> is balanced.
std::optional<std::vector<int>> find_unbalanced_cycle(const SignedGraph& g, EdgeSubset subset);

}  // namespace sgcolor
