#include "sgcolor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

#include "sgcolor/errors.hpp"
#include "text_lines.hpp"

namespace sgcolor {

namespace {

void check_edge(int n, const Edge& e) {
  if (e.u == e.v) throw ContractViolation("loop at vertex " + std::to_string(e.u));
  if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
    throw ContractViolation("edge endpoint out of range 0.." + std::to_string(n - 1));
  }
}

std::optional<Sign> parse_sign(std::string_view tok) {
  if (tok == "+" || tok == "+1") return Sign::Positive;
  if (tok == "-" || tok == "-1") return Sign::Negative;
  return std::nullopt;
}

// BFS spanning forest of <F>: label = parity of negative edges from the root.
struct Forest {
  std::vector<int> root;
  std::vector<int> parent_edge;
  std::vector<int> depth;
  std::vector<std::uint8_t> label;
};

std::vector<std::vector<int>> incidence(const SignedGraph& g, EdgeSubset subset) {
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.vertex_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!subset.contains(e)) continue;
    inc[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
    inc[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
  }
  return inc;
}

Forest spanning_forest(const SignedGraph& g, const std::vector<std::vector<int>>& inc) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Forest f{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, 0),
           std::vector<std::uint8_t>(n, 0)};
  std::queue<int> queue;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (f.root[static_cast<std::size_t>(s)] != -1) continue;
    f.root[static_cast<std::size_t>(s)] = s;
    queue.push(s);
    while (!queue.empty()) {
      const int w = queue.front();
      queue.pop();
      const auto wi = static_cast<std::size_t>(w);
      for (int e : inc[wi]) {
        const Edge& edge = g.edge(e);
        const auto x = static_cast<std::size_t>(edge.other(w));
        if (f.root[x] != -1) continue;
        f.root[x] = s;
        f.parent_edge[x] = e;
        f.depth[x] = f.depth[wi] + 1;
        f.label[x] = f.label[wi] ^ (edge.sign == Sign::Negative ? 1 : 0);
        queue.push(static_cast<int>(x));
      }
    }
  }
  return f;
}

bool conflicts(const Forest& f, const Edge& e) {
  const std::uint8_t want = e.sign == Sign::Negative ? 1 : 0;
  return (f.label[static_cast<std::size_t>(e.u)] ^ f.label[static_cast<std::size_t>(e.v)]) != want;
}

}  // namespace

SignedGraph::SignedGraph(int n) : n_(n) {
  if (n < 0) throw ContractViolation("negative vertex count");
}

SignedGraph::SignedGraph(int n, std::vector<Edge> edges) : SignedGraph(n) {
  for (const Edge& e : edges) check_edge(n, e);
  edges_ = std::move(edges);
}

int SignedGraph::add_edge(int u, int v, Sign sign) {
  const Edge e{u, v, sign};
  check_edge(n_, e);
  edges_.push_back(e);
  return edge_count() - 1;
}

EdgeSubset EdgeSubset::all(int m) {
  if (m < 0 || m > kMaxEdges) throw ContractViolation("edge subset size out of range");
  return EdgeSubset(m == kMaxEdges ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

EdgeSubset EdgeSubset::of(std::span<const int> edges) {
  EdgeSubset s;
  for (int e : edges) {
    if (e < 0 || e >= kMaxEdges) throw ContractViolation("edge position out of range");
    s.insert(e);
  }
  return s;
}

std::vector<int> EdgeSubset::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

void require_addressable(const SignedGraph& g) {
  if (g.edge_count() > EdgeSubset::kMaxEdges) {
    throw ResourceError("edge-subset width", EdgeSubset::kMaxEdges,
                        "graph has " + std::to_string(g.edge_count()) + " edges; edge subsets address at most " +
                            std::to_string(EdgeSubset::kMaxEdges));
  }
}

SignedGraph parse_graph(std::string_view text) {
  using Kind = ParseError::Kind;
  const auto lines = detail::data_lines(text);
  if (lines.empty()) throw ParseError(Kind::Malformed, 0, "missing header line \"n m\"");

  const auto& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError(Kind::Malformed, header.number, "header must be \"n m\"");
  const auto n = detail::parse_int(header.tokens[0]);
  const auto m = detail::parse_int(header.tokens[1]);
  if (!n || !m || *n < 0 || *m < 0) {
    throw ParseError(Kind::Malformed, header.number, "header must hold two non-negative integers");
  }
  if (static_cast<long long>(lines.size()) - 1 != *m) {
    throw ParseError(Kind::EdgeCountMismatch, header.number,
                     "header declares " + std::to_string(*m) + " edges but " + std::to_string(lines.size() - 1) +
                         " edge lines follow");
  }

  SignedGraph g(*n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 3) throw ParseError(Kind::Malformed, line.number, "edge line must be \"u v s\"");
    const auto u = detail::parse_int(line.tokens[0]);
    const auto v = detail::parse_int(line.tokens[1]);
    const auto s = parse_sign(line.tokens[2]);
    if (!u || !v) throw ParseError(Kind::Malformed, line.number, "vertex index is not an integer");
    if (!s) throw ParseError(Kind::Malformed, line.number, "sign must be one of + - +1 -1");
    if (*u < 0 || *v < 0 || *u >= *n || *v >= *n) {
      throw ParseError(Kind::VertexOutOfRange, line.number, "vertex index outside 0.." + std::to_string(*n - 1));
    }
    if (*u == *v) throw ParseError(Kind::Loop, line.number, "loop at vertex " + std::to_string(*u));
    g.add_edge(*u, *v, *s);
  }
  return g;
}

std::string format_graph(const SignedGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << (e.sign == Sign::Positive ? '+' : '-') << '\n';
  return out.str();
}

SignedGraph switch_graph(const SignedGraph& g, std::span<const int> vertices) {
  std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count()) throw ContractViolation("switching vertex out of range");
    in[static_cast<std::size_t>(v)] = true;
  }
  SignedGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    const bool crosses = in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)];
    out.add_edge(e.u, e.v, crosses ? flip(e.sign) : e.sign);
  }
  return out;
}

ComponentReport components_of(const SignedGraph& g, EdgeSubset subset) {
  require_addressable(g);
  const auto inc = incidence(g, subset);
  const Forest f = spanning_forest(g, inc);

  ComponentReport report;
  std::vector<int> index_of_root(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto r = static_cast<std::size_t>(f.root[static_cast<std::size_t>(v)]);
    if (index_of_root[r] == -1) {
      index_of_root[r] = static_cast<int>(report.components.size());
      report.components.emplace_back();
    }
    report.components[static_cast<std::size_t>(index_of_root[r])].vertices.push_back(v);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!subset.contains(e)) continue;
    const Edge& edge = g.edge(e);
    auto& comp = report.components[static_cast<std::size_t>(
        index_of_root[static_cast<std::size_t>(f.root[static_cast<std::size_t>(edge.u)])])];
    comp.edges.push_back(e);
    if (conflicts(f, edge)) comp.balanced = false;
  }
  for (const Component& c : report.components) {
    if (c.balanced) {
      ++report.balanced_count;
    } else {
      report.unbalanced_vertices.insert(report.unbalanced_vertices.end(), c.vertices.begin(), c.vertices.end());
    }
  }
  std::sort(report.unbalanced_vertices.begin(), report.unbalanced_vertices.end());
  return report;
}

HararySplit harary_split(const SignedGraph& g, const Component& component) {
  if (component.vertices.empty()) throw ContractViolation("empty component");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> label(n, -1);
  std::vector<bool> member(n, false);
  for (int v : component.vertices) {
    if (v < 0 || v >= g.vertex_count()) throw ContractViolation("component vertex out of range");
    member[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::vector<int>> inc(n);
  for (int e : component.edges) {
    const Edge& edge = g.edge(e);
    if (!member[static_cast<std::size_t>(edge.u)] || !member[static_cast<std::size_t>(edge.v)]) {
      throw ContractViolation("component edge leaves the component");
    }
    inc[static_cast<std::size_t>(edge.u)].push_back(e);
    inc[static_cast<std::size_t>(edge.v)].push_back(e);
  }

  const int start = *std::min_element(component.vertices.begin(), component.vertices.end());
  label[static_cast<std::size_t>(start)] = 0;
  std::queue<int> queue;
  queue.push(start);
  while (!queue.empty()) {
    const int w = queue.front();
    queue.pop();
    for (int e : inc[static_cast<std::size_t>(w)]) {
      const Edge& edge = g.edge(e);
      const int x = edge.other(w);
      const int want = label[static_cast<std::size_t>(w)] ^ (edge.sign == Sign::Negative ? 1 : 0);
      int& lx = label[static_cast<std::size_t>(x)];
      if (lx == -1) {
        lx = want;
        queue.push(x);
      } else if (lx != want) {
        throw ContractViolation("harary_split called on an unbalanced component");
      }
    }
  }

  HararySplit split;
  for (int v : component.vertices) {
    const int l = label[static_cast<std::size_t>(v)];
    if (l == -1) throw ContractViolation("harary_split called on a disconnected component");
    (l == 0 ? split.anchored : split.negated).push_back(v);
  }
  std::sort(split.anchored.begin(), split.anchored.end());
  std::sort(split.negated.begin(), split.negated.end());
  return split;
}

std::optional<std::vector<int>> find_unbalanced_cycle(const SignedGraph& g, EdgeSubset subset) {
  require_addressable(g);
  const auto inc = incidence(g, subset);
  const Forest f = spanning_forest(g, inc);

  for (int e = 0; e < g.edge_count(); ++e) {
    if (!subset.contains(e)) continue;
    const Edge& edge = g.edge(e);
    if (f.parent_edge[static_cast<std::size_t>(edge.u)] == e || f.parent_edge[static_cast<std::size_t>(edge.v)] == e) {
      continue;
    }
    if (!conflicts(f, edge)) continue;

    // Walk both endpoints up to their lowest common ancestor.
    std::vector<int> from_v;
    std::vector<int> from_u;
    int a = edge.v;
    int b = edge.u;
    auto up = [&](int& w, std::vector<int>& path) {
      const int pe = f.parent_edge[static_cast<std::size_t>(w)];
      path.push_back(pe);
      w = g.edge(pe).other(w);
    };
    while (f.depth[static_cast<std::size_t>(a)] > f.depth[static_cast<std::size_t>(b)]) up(a, from_v);
    while (f.depth[static_cast<std::size_t>(b)] > f.depth[static_cast<std::size_t>(a)]) up(b, from_u);
    while (a != b) {
      up(a, from_v);
      up(b, from_u);
    }
    std::vector<int> cycle{e};
    cycle.insert(cycle.end(), from_v.begin(), from_v.end());
    cycle.insert(cycle.end(), from_u.rbegin(), from_u.rend());
    return cycle;
  }
  return std::nullopt;
}

}  // namespace sgcolor
