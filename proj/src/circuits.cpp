#include "sgcolor/circuits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sgcolor/detail/list_masks.hpp"
#include "sgcolor/detail/signed_dsu.hpp"
#include "sgcolor/errors.hpp"

namespace sgcolor {

namespace {

std::size_t uz(int v) { return static_cast<std::size_t>(v); }

[[noreturn]] void circuit_cap_exceeded(std::size_t cap) {
  throw ResourceError("max-circuits", cap,
                      "circuit enumeration exceeded the cap of " + std::to_string(cap) + " circuits");
}

std::vector<std::vector<int>> incidence(const SignedGraph& g) {
  std::vector<std::vector<int>> inc(uz(g.vertex_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    inc[uz(g.edge(e).u)].push_back(e);
    inc[uz(g.edge(e).v)].push_back(e);
  }
  return inc;
}

Cycle make_cycle(const SignedGraph& g, std::vector<int> edges) {
  Cycle c;
  int negatives = 0;
  for (int e : edges) {
    c.edge_set.insert(e);
    c.vertices.push_back(g.edge(e).u);
    c.vertices.push_back(g.edge(e).v);
    if (g.edge(e).sign == Sign::Negative) ++negatives;
  }
  std::sort(c.vertices.begin(), c.vertices.end());
  c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
  c.balanced = negatives % 2 == 0;
  c.edges = std::move(edges);
  return c;
}

bool shares_vertex(const std::vector<int>& a, const std::vector<int>& b, int* shared, int* count) {
  *count = 0;
  for (int v : a) {
    if (std::binary_search(b.begin(), b.end(), v)) {
      *shared = v;
      ++*count;
    }
  }
  return *count > 0;
}

}  // namespace

EdgeOrder EdgeOrder::identity(int m) {
  std::vector<int> seq(uz(m));
  std::iota(seq.begin(), seq.end(), 0);
  return from_sequence(std::move(seq), m);
}

EdgeOrder EdgeOrder::from_sequence(std::vector<int> sequence, int m) {
  if (static_cast<int>(sequence.size()) != m) {
    throw ContractViolation("edge order has " + std::to_string(sequence.size()) + " entries, expected " +
                            std::to_string(m));
  }
  EdgeOrder order;
  order.rank_.assign(uz(m), -1);
  for (int i = 0; i < m; ++i) {
    const int e = sequence[uz(i)];
    if (e < 0 || e >= m || order.rank_[uz(e)] != -1) {
      throw ContractViolation("edge order is not a permutation of 0.." + std::to_string(m - 1));
    }
    order.rank_[uz(e)] = i;
  }
  order.sequence_ = std::move(sequence);
  return order;
}

int EdgeOrder::max_of(EdgeSubset subset) const {
  int best = -1;
  for (int e : subset.members()) {
    if (best == -1 || rank(e) > rank(best)) best = e;
  }
  if (best == -1) throw ContractViolation("max_of on an empty edge set");
  return best;
}

Count QuasiPolynomial::evaluate(int k) const {
  const auto& coeffs = k % 2 == 0 ? even : odd;
  Count value = 0;
  for (std::int64_t a : coeffs) value = value * k + a;
  return value;
}

std::vector<Cycle> enumerate_cycles(const SignedGraph& g, CircuitLimits limits) {
  require_addressable(g);
  const auto inc = incidence(g);
  std::vector<Cycle> cycles;
  std::vector<bool> on_path(uz(g.vertex_count()), false);
  std::vector<int> path;

  // Each cycle is reported once: from its lowest-position edge (u, v), as the
  // unique path v -> u through higher-position edges.
  for (int first = 0; first < g.edge_count(); ++first) {
    const int target = g.edge(first).u;
    const int start = g.edge(first).v;
    auto extend = [&](auto&& self, int w) -> void {
      for (int e : inc[uz(w)]) {
        if (e <= first) continue;
        const int x = g.edge(e).other(w);
        if (x == target) {
          path.push_back(e);
          std::vector<int> edges{first};
          edges.insert(edges.end(), path.begin(), path.end());
          cycles.push_back(make_cycle(g, std::move(edges)));
          if (cycles.size() > limits.max_circuits) circuit_cap_exceeded(limits.max_circuits);
          path.pop_back();
          continue;
        }
        if (on_path[uz(x)]) continue;
        on_path[uz(x)] = true;
        path.push_back(e);
        self(self, x);
        path.pop_back();
        on_path[uz(x)] = false;
      }
    };
    on_path[uz(start)] = true;
    on_path[uz(target)] = true;
    extend(extend, start);
    on_path[uz(start)] = false;
    on_path[uz(target)] = false;
  }
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) { return a.edge_set < b.edge_set; });
  return cycles;
}

namespace {

std::vector<Barbell> barbells_from(const SignedGraph& g, const std::vector<Cycle>& cycles, CircuitLimits limits) {
  std::vector<const Cycle*> unbalanced;
  for (const Cycle& c : cycles) {
    if (!c.balanced) unbalanced.push_back(&c);
  }
  const auto inc = incidence(g);
  std::map<EdgeSubset, Barbell> found;
  auto record = [&](const Cycle& a, const Cycle& b, std::vector<int> path) {
    Barbell bb{a, b, std::move(path), EdgeSubset(a.edge_set.bits() | b.edge_set.bits())};
    for (int e : bb.path) bb.edge_set.insert(e);
    found.try_emplace(bb.edge_set, std::move(bb));
    if (found.size() > limits.max_circuits) circuit_cap_exceeded(limits.max_circuits);
  };

  std::vector<std::uint8_t> zone(uz(g.vertex_count()));  // 1 = first cycle, 2 = second, 3 = on path
  std::vector<int> path;
  for (std::size_t i = 0; i < unbalanced.size(); ++i) {
    for (std::size_t j = i + 1; j < unbalanced.size(); ++j) {
      const Cycle& a = *unbalanced[i];
      const Cycle& b = *unbalanced[j];
      int shared = -1;
      int count = 0;
      shares_vertex(a.vertices, b.vertices, &shared, &count);
      if (count == 1) {
        record(a, b, {});
        continue;
      }
      if (count > 1) continue;

      std::fill(zone.begin(), zone.end(), 0);
      for (int v : a.vertices) zone[uz(v)] = 1;
      for (int v : b.vertices) zone[uz(v)] = 2;
      auto walk = [&](auto&& self, int w) -> void {
        for (int e : inc[uz(w)]) {
          const int x = g.edge(e).other(w);
          if (zone[uz(x)] == 2) {
            path.push_back(e);
            record(a, b, path);
            path.pop_back();
            continue;
          }
          if (zone[uz(x)] != 0) continue;
          zone[uz(x)] = 3;
          path.push_back(e);
          self(self, x);
          path.pop_back();
          zone[uz(x)] = 0;
        }
      };
      for (int v1 : a.vertices) walk(walk, v1);
    }
  }
  std::vector<Barbell> out;
  out.reserve(found.size());
  for (auto& [key, bb] : found) out.push_back(std::move(bb));
  return out;
}

}  // namespace

std::vector<Barbell> enumerate_barbells(const SignedGraph& g, CircuitLimits limits) {
  return barbells_from(g, enumerate_cycles(g, limits), limits);
}

std::vector<Circuit> enumerate_circuits(const SignedGraph& g, CircuitLimits limits) {
  const auto cycles = enumerate_cycles(g, limits);
  std::vector<Circuit> out;
  for (const Cycle& c : cycles) {
    if (c.balanced) out.push_back({c});
  }
  for (Barbell& bb : barbells_from(g, cycles, limits)) out.push_back({std::move(bb)});
  if (out.size() > limits.max_circuits) circuit_cap_exceeded(limits.max_circuits);
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) { return a.edge_set() < b.edge_set(); });
  return out;
}

BrokenCircuitSet broken_circuits(const SignedGraph& g, const EdgeOrder& order, CircuitLimits limits) {
  if (order.size() != g.edge_count()) throw ContractViolation("edge order does not match the graph");
  BrokenCircuitSet out;
  out.circuits = enumerate_circuits(g, limits);

  std::map<EdgeSubset, std::size_t> index;
  for (std::size_t i = 0; i < out.circuits.size(); ++i) {
    EdgeSubset bc = out.circuits[i].edge_set();
    const int top = order.max_of(bc);
    bc.erase(top);
    const auto [it, inserted] = index.try_emplace(bc, out.broken.size());
    if (inserted) {
      out.broken.push_back({bc, top, i, 1});
    } else {
      ++out.broken[it->second].multiplicity;
    }
  }

  std::vector<EdgeSubset> by_size;
  for (const auto& b : out.broken) by_size.push_back(b.edges);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](EdgeSubset a, EdgeSubset b) { return a.size() < b.size(); });
  for (EdgeSubset s : by_size) {
    const bool redundant =
        std::any_of(out.minimal.begin(), out.minimal.end(), [&](EdgeSubset kept) { return kept.is_subset_of(s); });
    if (!redundant) out.minimal.push_back(s);
  }
  std::sort(out.minimal.begin(), out.minimal.end());
  return out;
}

NbcExpansion::NbcExpansion(const SignedGraph& g, const EdgeOrder& order, CircuitLimits limits)
    : n_(g.vertex_count()) {
  detail::require_edge_cap(g, limits.max_edges, "NBC enumeration");
  const int m = g.edge_count();
  const BrokenCircuitSet bcs = broken_circuits(g, order, limits);

  // Minimal broken circuits indexed by each member edge: adding edge e can only
  // complete one that contains e.
  std::vector<std::vector<EdgeSubset>> completing(uz(m));
  for (EdgeSubset s : bcs.minimal) {
    for (int e : s.members()) completing[uz(e)].push_back(s);
  }

  census_.c.assign(uz(n_) + 1, 0);
  census_.c_star.assign(n_ == 0 ? 1 : uz(n_), 0);

  detail::SignedDsu dsu(n_);
  std::vector<std::vector<std::pair<int, bool>>> groups(uz(n_));

  auto record = [&](EdgeSubset f) {
    const int size = f.size();
    if (size > n_) throw std::logic_error("NBC subset larger than the vertex count");
    Term t;
    t.edges = f;
    t.balanced = dsu.balanced();
    t.groups_begin = static_cast<std::uint32_t>(group_ends_.size());
    t.unbalanced_begin = static_cast<std::uint32_t>(unbalanced_vertices_.size());
    for (auto& gr : groups) gr.clear();
    for (int v = 0; v < n_; ++v) {
      const auto [root, parity] = dsu.find(v);
      if (dsu.root_unbalanced(root)) {
        unbalanced_vertices_.push_back(v);
      } else {
        groups[uz(root)].emplace_back(v, parity != 0);
      }
    }
    for (const auto& gr : groups) {
      if (gr.empty()) continue;
      members_.insert(members_.end(), gr.begin(), gr.end());
      group_ends_.push_back(static_cast<std::uint32_t>(members_.size()));
    }
    t.groups_end = static_cast<std::uint32_t>(group_ends_.size());
    t.unbalanced_end = static_cast<std::uint32_t>(unbalanced_vertices_.size());
    terms_.push_back(t);

    ++census_.c[uz(size)];
    if (t.balanced) {
      if (uz(size) >= census_.c_star.size()) throw std::logic_error("balanced NBC subset of size n");
      ++census_.c_star[uz(size)];
    }
  };

  auto grow = [&](auto&& self, EdgeSubset f, int next) -> void {
    record(f);
    for (int e = next; e < m; ++e) {
      EdgeSubset h = f;
      h.insert(e);
      const auto& cands = completing[uz(e)];
      if (std::any_of(cands.begin(), cands.end(), [&](EdgeSubset s) { return s.is_subset_of(h); })) continue;
      const Edge& edge = g.edge(e);
      dsu.unite(edge.u, edge.v, edge.sign == Sign::Negative);
      self(self, h, e + 1);
      dsu.rollback();
    }
  };
  grow(grow, EdgeSubset{}, 0);
}

std::vector<std::vector<std::pair<int, bool>>> NbcExpansion::balanced_components(const Term& term) const {
  std::vector<std::vector<std::pair<int, bool>>> out;
  for (std::uint32_t gi = term.groups_begin; gi < term.groups_end; ++gi) {
    const std::uint32_t begin = gi == 0 ? 0 : group_ends_[gi - 1];
    out.emplace_back(members_.begin() + begin, members_.begin() + group_ends_[gi]);
  }
  return out;
}

std::vector<int> NbcExpansion::unbalanced_vertices(const Term& term) const {
  return {unbalanced_vertices_.begin() + term.unbalanced_begin, unbalanced_vertices_.begin() + term.unbalanced_end};
}

Count NbcExpansion::count(const ListAssignment& lists, NbcPath path) const {
  if (lists.vertex_count() != n_) throw ContractViolation("list assignment does not match the graph");
  const detail::ListMasks masks(lists);
  const bool skip_gamma = path == NbcPath::Auto && lists.zero_included();
  const bool balanced_only = path == NbcPath::Auto && lists.zero_free();
  std::vector<std::uint64_t> acc(masks.words());
  Count sum = 0;

  for (const Term& t : terms_) {
    if (balanced_only && !t.balanced) continue;
    if (!skip_gamma) {
      bool gamma_one = true;
      for (std::uint32_t i = t.unbalanced_begin; i < t.unbalanced_end && gamma_one; ++i) {
        gamma_one = masks.has_zero(unbalanced_vertices_[i]);
      }
      if (!gamma_one) continue;
    }
    detail::Product product;
    for (std::uint32_t gi = t.groups_begin; gi < t.groups_end && !product.is_zero(); ++gi) {
      const std::uint32_t begin = gi == 0 ? 0 : group_ends_[gi - 1];
      const std::uint32_t end = group_ends_[gi];
      masks.assign(acc.data(), members_[begin].first, members_[begin].second);
      for (std::uint32_t i = begin + 1; i < end; ++i) masks.intersect(acc.data(), members_[i].first, members_[i].second);
      product.times(masks.popcount(acc.data()));
    }
    product.add_to(sum, t.edges.size() % 2 == 1);
  }
  return sum;
}

NbcCensus nbc_census(const SignedGraph& g, const EdgeOrder& order, CircuitLimits limits) {
  return NbcExpansion(g, order, limits).census();
}

QuasiPolynomial quasi_polynomial(const NbcCensus& census) {
  const std::size_t n = census.c.size() - 1;
  QuasiPolynomial q;
  if (n == 0) {
    q.odd = {1};
    q.even = {1};
    return q;
  }
  q.odd.resize(n + 1);
  q.even.assign(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    const std::int64_t sign = i % 2 == 0 ? 1 : -1;
    q.odd[i] = sign * static_cast<std::int64_t>(census.c[i]);
    if (i < n) q.even[i] = sign * static_cast<std::int64_t>(census.c_star[i]);
  }
  return q;
}

QuasiPolynomial quasi_polynomial(const SignedGraph& g, const EdgeOrder& order, CircuitLimits limits) {
  return quasi_polynomial(nbc_census(g, order, limits));
}

Count nbc_list_count(const SignedGraph& g, const ListAssignment& lists, const EdgeOrder& order,
                     CircuitLimits limits, NbcPath path) {
  detail::require_lists_match(g, lists);
  return NbcExpansion(g, order, limits).count(lists, path);
}

}  // namespace sgcolor
