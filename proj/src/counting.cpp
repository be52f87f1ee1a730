#include "sgcolor/counting.hpp"

#include <algorithm>
#include <sstream>

#include "sgcolor/detail/list_masks.hpp"
#include "sgcolor/detail/signed_dsu.hpp"
#include "sgcolor/errors.hpp"
#include "text_lines.hpp"

namespace sgcolor {

namespace detail {

void require_lists_match(const SignedGraph& g, const ListAssignment& lists) {
  if (lists.vertex_count() != g.vertex_count()) {
    throw ContractViolation("list assignment covers " + std::to_string(lists.vertex_count()) +
                            " vertices, graph has " + std::to_string(g.vertex_count()));
  }
}

void require_edge_cap(const SignedGraph& g, int max_edges, const char* what) {
  require_addressable(g);
  if (g.edge_count() > max_edges) {
    throw ResourceError("max-edges", static_cast<std::uint64_t>(max_edges),
                        std::string(what) + ": graph has " + std::to_string(g.edge_count()) +
                            " edges, above the cap of " + std::to_string(max_edges) + " (2^m terms)");
  }
}

}  // namespace detail

namespace {

std::size_t uz(int v) { return static_cast<std::size_t>(v); }

// Edges to lower-indexed neighbours, grouped by the higher endpoint.
std::vector<std::vector<std::pair<int, int>>> backward_constraints(const SignedGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> back(uz(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    const int hi = std::max(e.u, e.v);
    const int lo = std::min(e.u, e.v);
    back[uz(hi)].emplace_back(lo, to_int(e.sign));
  }
  return back;
}

Count intersection_count(const SignedGraph& g, const Component& component, const ListAssignment& lists,
                         const std::vector<int>& negated) {
  std::vector<bool> flip(uz(g.vertex_count()), false);
  for (int v : negated) flip[uz(v)] = true;
  std::optional<ColorList> acc;
  for (int v : component.vertices) {
    const ColorList l = flip[uz(v)] ? negate(lists[v]) : lists[v];
    if (!acc) {
      acc = l;
      continue;
    }
    ColorList next;
    std::set_intersection(acc->begin(), acc->end(), l.begin(), l.end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return Count(acc ? acc->size() : 0);
}

}  // namespace

ColorList color_set(int k) {
  if (k < 0) throw ContractViolation("negative palette size");
  const int t = k / 2;
  ColorList out;
  out.reserve(uz(k));
  for (int c = -t; c <= t; ++c) {
    if (c != 0 || k % 2 == 1) out.push_back(c);
  }
  return out;
}

ColorList negate(const ColorList& colors) {
  ColorList out(colors.rbegin(), colors.rend());
  for (int& c : out) c = -c;
  return out;
}

std::size_t intersection_size(const ColorList& a, const ColorList& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

ListAssignment::ListAssignment(std::vector<ColorList> lists) : lists_(std::move(lists)) {
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    auto& l = lists_[v];
    if (l.empty()) throw ContractViolation("empty list at vertex " + std::to_string(v));
    std::sort(l.begin(), l.end());
    if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
      throw ContractViolation("repeated color in list of vertex " + std::to_string(v));
    }
  }
}

ListAssignment ListAssignment::uniform(int n, int k) {
  if (k <= 0) throw ContractViolation("uniform assignment needs k >= 1");
  return ListAssignment(std::vector<ColorList>(uz(n), color_set(k)));
}

bool ListAssignment::zero_free() const {
  return std::none_of(lists_.begin(), lists_.end(),
                      [](const ColorList& l) { return std::binary_search(l.begin(), l.end(), 0); });
}

bool ListAssignment::zero_included() const {
  return std::all_of(lists_.begin(), lists_.end(),
                     [](const ColorList& l) { return std::binary_search(l.begin(), l.end(), 0); });
}

std::optional<int> ListAssignment::uniform_size() const {
  if (lists_.empty()) return std::nullopt;
  const std::size_t k = lists_.front().size();
  for (const auto& l : lists_) {
    if (l.size() != k) return std::nullopt;
  }
  return static_cast<int>(k);
}

ListAssignment switch_list(const ListAssignment& lists, std::span<const int> vertices) {
  std::vector<ColorList> out = lists.lists();
  std::vector<bool> in(out.size(), false);
  for (int v : vertices) {
    if (v < 0 || v >= lists.vertex_count()) throw ContractViolation("switching vertex out of range");
    in[uz(v)] = true;
  }
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (in[v]) out[v] = negate(out[v]);
  }
  return ListAssignment(std::move(out));
}

ListAssignment negate_all(const ListAssignment& lists) {
  std::vector<ColorList> out;
  out.reserve(uz(lists.vertex_count()));
  for (const auto& l : lists.lists()) out.push_back(negate(l));
  return ListAssignment(std::move(out));
}

ListAssignment parse_list(std::string_view text, int n) {
  using Kind = ParseError::Kind;
  std::vector<std::optional<ColorList>> lists(uz(n));
  int last_line = 0;
  for (const auto& line : detail::data_lines(text)) {
    last_line = line.number;
    std::size_t first_color = 1;
    std::string_view head = line.tokens[0];
    if (head.size() > 1 && head.back() == ':') {
      head.remove_suffix(1);
    } else if (line.tokens.size() > 1 && line.tokens[1] == ":") {
      first_color = 2;
    } else {
      throw ParseError(Kind::Malformed, line.number, "list line must be \"v: c1 c2 ...\"");
    }
    const auto v = detail::parse_int(head);
    if (!v) throw ParseError(Kind::Malformed, line.number, "vertex index is not an integer");
    if (*v < 0 || *v >= n) {
      throw ParseError(Kind::VertexOutOfRange, line.number, "vertex index outside 0.." + std::to_string(n - 1));
    }
    if (lists[uz(*v)]) throw ParseError(Kind::DuplicateVertex, line.number, "vertex listed twice");
    ColorList colors;
    for (std::size_t i = first_color; i < line.tokens.size(); ++i) {
      const auto c = detail::parse_int(line.tokens[i]);
      if (!c) throw ParseError(Kind::Malformed, line.number, "color is not an integer");
      colors.push_back(*c);
    }
    if (colors.empty()) throw ParseError(Kind::EmptyList, line.number, "empty list");
    std::sort(colors.begin(), colors.end());
    if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) {
      throw ParseError(Kind::DuplicateColor, line.number, "repeated color");
    }
    lists[uz(*v)] = std::move(colors);
  }
  std::vector<ColorList> out;
  out.reserve(uz(n));
  for (int v = 0; v < n; ++v) {
    if (!lists[uz(v)]) {
      throw ParseError(Kind::MissingVertex, last_line, "no list for vertex " + std::to_string(v));
    }
    out.push_back(std::move(*lists[uz(v)]));
  }
  return ListAssignment(std::move(out));
}

std::string format_list(const ListAssignment& lists) {
  std::ostringstream out;
  for (int v = 0; v < lists.vertex_count(); ++v) {
    out << v << ':';
    for (int c : lists[v]) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

Count brute_count_k(const SignedGraph& g, int k) {
  if (k < 0) throw ContractViolation("negative palette size");
  const int n = g.vertex_count();
  if (n == 0) return 1;
  if (k == 0) return 0;

  // Plain odometer over all k^n maps.
  const ColorList palette = color_set(k);
  std::vector<int> digit(uz(n), 0);
  std::uint64_t proper = 0;
  while (true) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      const int cu = palette[uz(digit[uz(e.u)])];
      const int cv = palette[uz(digit[uz(e.v)])];
      if (cu == to_int(e.sign) * cv) {
        ok = false;
        break;
      }
    }
    if (ok) ++proper;
    int pos = n - 1;
    while (pos >= 0 && ++digit[uz(pos)] == k) digit[uz(pos--)] = 0;
    if (pos < 0) break;
  }
  return Count(proper);
}

Count brute_count_list(const SignedGraph& g, const ListAssignment& lists) {
  detail::require_lists_match(g, lists);
  const int n = g.vertex_count();
  const auto back = backward_constraints(g);
  std::vector<int> color(uz(n), 0);
  std::uint64_t proper = 0;

  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++proper;
      return;
    }
    for (int c : lists[v]) {
      bool ok = true;
      for (const auto& [w, s] : back[uz(v)]) {
        if (color[uz(w)] == s * c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[uz(v)] = c;
      self(self, v + 1);
    }
  };
  extend(extend, 0);
  return Count(proper);
}

Count beta(const SignedGraph& g, const Component& component, const ListAssignment& lists) {
  detail::require_lists_match(g, lists);
  const HararySplit split = harary_split(g, component);
  return intersection_count(g, component, lists, split.negated);
}

Count beta_from_anchored_side(const SignedGraph& g, const Component& component, const ListAssignment& lists) {
  detail::require_lists_match(g, lists);
  const HararySplit split = harary_split(g, component);
  return intersection_count(g, component, lists, split.anchored);
}

int gamma(const SignedGraph& g, EdgeSubset subset, const ListAssignment& lists) {
  detail::require_lists_match(g, lists);
  const ComponentReport report = components_of(g, subset);
  for (int v : report.unbalanced_vertices) {
    if (!std::binary_search(lists[v].begin(), lists[v].end(), 0)) return 0;
  }
  return 1;
}

Count inclusion_exclusion_count(const SignedGraph& g, const ListAssignment& lists, CountLimits limits) {
  detail::require_lists_match(g, lists);
  detail::require_edge_cap(g, limits.max_edges, "inclusion-exclusion");

  const int n = g.vertex_count();
  const int m = g.edge_count();
  const detail::ListMasks masks(lists);
  const std::size_t words = masks.words();
  detail::SignedDsu dsu(n);
  std::vector<std::uint64_t> acc(uz(n) * words);
  std::vector<std::uint8_t> started(uz(n));
  Count sum = 0;

  auto leaf = [&](int size) {
    for (int v = 0; v < n; ++v) {
      if (dsu.root_unbalanced(dsu.find(v).root) && !masks.has_zero(v)) return;
    }
    std::fill(started.begin(), started.end(), 0);
    for (int v = 0; v < n; ++v) {
      const auto [root, parity] = dsu.find(v);
      if (dsu.root_unbalanced(root)) continue;
      std::uint64_t* a = acc.data() + uz(root) * words;
      if (!started[uz(root)]) {
        masks.assign(a, v, parity != 0);
        started[uz(root)] = 1;
      } else {
        masks.intersect(a, v, parity != 0);
      }
    }
    detail::Product product;
    for (int r = 0; r < n && !product.is_zero(); ++r) {
      if (started[uz(r)]) product.times(masks.popcount(acc.data() + uz(r) * words));
    }
    product.add_to(sum, size % 2 == 1);
  };

  auto walk = [&](auto&& self, int e, int size) -> void {
    if (e == m) {
      leaf(size);
      return;
    }
    self(self, e + 1, size);
    const Edge& edge = g.edge(e);
    dsu.unite(edge.u, edge.v, edge.sign == Sign::Negative);
    self(self, e + 1, size + 1);
    dsu.rollback();
  };
  walk(walk, 0, 0);
  return sum;
}

}  // namespace sgcolor
