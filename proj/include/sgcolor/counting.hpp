#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgcolor/graph.hpp"

namespace sgcolor {

using Count = boost::multiprecision::cpp_int;

// Sorted, duplicate-free set of integer colors.
using ColorList = std::vector<int>;

// The signed palette M_k: {0, ±1, ..., ±t} for k = 2t+1, {±1, ..., ±t} for
// k = 2t. Returned sorted; k = 0 gives the empty palette.
ColorList color_set(int k);

// Elementwise negation, kept sorted.
ColorList negate(const ColorList& colors);

std::size_t intersection_size(const ColorList& a, const ColorList& b);

class ListAssignment {
 public:
  ListAssignment() = default;
  // Sorts each list. Throws ContractViolation on an empty list or a repeated
  // color.
  explicit ListAssignment(std::vector<ColorList> lists);

  // L*_k: every vertex gets M_k.
  static ListAssignment uniform(int n, int k);

  int vertex_count() const noexcept { return static_cast<int>(lists_.size()); }
  const ColorList& operator[](int v) const { return lists_.at(static_cast<std::size_t>(v)); }
  const std::vector<ColorList>& lists() const noexcept { return lists_; }

  bool zero_free() const;
  bool zero_included() const;
  // Common list size, if every list has the same size.
  std::optional<int> uniform_size() const;

  auto operator<=>(const ListAssignment&) const = default;
  bool operator==(const ListAssignment&) const = default;

 private:
  std::vector<ColorList> lists_;
};

// Negates L(v) for every v in `vertices`.
ListAssignment switch_list(const ListAssignment& lists, std::span<const int> vertices);
ListAssignment negate_all(const ListAssignment& lists);

ListAssignment parse_list(std::string_view text, int n);
std::string format_list(const ListAssignment& lists);

// Number of maps V -> M_k with c(u) != sigma(e) c(v) on every edge, by
// exhaustive backtracking over colorings.
Count brute_count_k(const SignedGraph& g, int k);

// Number of proper colorings with c(v) in L(v), by exhaustive backtracking.
Count brute_count_list(const SignedGraph& g, const ListAssignment& lists);

// |∩ L1(v)| over the component, where L1 negates the lists on the negated
// side of its Harary split. Throws ContractViolation if the component is not
// balanced and connected.
Count beta(const SignedGraph& g, const Component& component, const ListAssignment& lists);

// Same value computed with the anchored side negated instead.
Count beta_from_anchored_side(const SignedGraph& g, const Component& component, const ListAssignment& lists);

// 0 if some vertex of an unbalanced component of <F> lacks color 0, else 1.
int gamma(const SignedGraph& g, EdgeSubset subset, const ListAssignment& lists);

struct CountLimits {
  int max_edges = 20;  // 2^m subsets are summed
};

// Sum over all F ⊆ E of (-1)^|F| γ(<F>, L) ∏ β(T_j, L) over the balanced
// components T_j of <F>.
Count inclusion_exclusion_count(const SignedGraph& g, const ListAssignment& lists, CountLimits limits = {});

namespace detail {
void require_lists_match(const SignedGraph& g, const ListAssignment& lists);
void require_edge_cap(const SignedGraph& g, int max_edges, const char* what);
}  // namespace detail

}  // namespace sgcolor
