#pragma once

// Dense simple undirected graphs with bitset adjacency rows, plus the
// neighbourhood bookkeeping used throughout the spectral extremal arguments:
// d_S(v), e(S,T), the strata N_i(u), N^2(u) and W = V \ N[u].

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "specturan/errors.hpp"

namespace specturan {

using vertex = std::uint32_t;

/// Fixed-capacity set of vertices backed by `Words` machine words.
template <std::size_t Words>
class vertex_set {
 public:
  static constexpr std::size_t capacity = 64 * Words;

  constexpr vertex_set() = default;
  vertex_set(std::initializer_list<vertex> vs) {
    for (vertex v : vs) insert(v);
  }
  template <typename Range>
  static vertex_set from_range(const Range& r) {
    vertex_set s;
    for (auto v : r) s.insert(static_cast<vertex>(v));
    return s;
  }
  /// {0, ..., n-1}
  static vertex_set prefix(std::size_t n) {
    vertex_set s;
    for (std::size_t i = 0; i < Words; ++i) {
      if (n >= 64 * (i + 1)) {
        s.w_[i] = ~std::uint64_t{0};
      } else if (n > 64 * i) {
        s.w_[i] = (std::uint64_t{1} << (n - 64 * i)) - 1;
      }
    }
    return s;
  }

  bool contains(vertex v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }
  void insert(vertex v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(vertex v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool empty() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  /// Smallest member, or `capacity` when empty.
  vertex first() const {
    for (std::size_t i = 0; i < Words; ++i)
      if (w_[i]) return static_cast<vertex>(64 * i + std::countr_zero(w_[i]));
    return static_cast<vertex>(capacity);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < Words; ++i) {
      std::uint64_t x = w_[i];
      while (x) {
        f(static_cast<vertex>(64 * i + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }
  std::vector<vertex> to_vector() const {
    std::vector<vertex> out;
    out.reserve(size());
    for_each([&](vertex v) { out.push_back(v); });
    return out;
  }

  vertex_set& operator&=(const vertex_set& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  vertex_set& operator|=(const vertex_set& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  /// Set difference.
  vertex_set& operator-=(const vertex_set& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend vertex_set operator&(vertex_set a, const vertex_set& b) { return a &= b; }
  friend vertex_set operator|(vertex_set a, const vertex_set& b) { return a |= b; }
  friend vertex_set operator-(vertex_set a, const vertex_set& b) { return a -= b; }
  friend bool operator==(const vertex_set&, const vertex_set&) = default;

  bool intersects(const vertex_set& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  std::size_t intersection_size(const vertex_set& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < Words; ++i)
      c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return c;
  }
  bool subset_of(const vertex_set& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  const std::array<std::uint64_t, Words>& words() const { return w_; }

 private:
  std::array<std::uint64_t, Words> w_{};
};

/// Simple undirected graph on vertices 0..n-1 with n <= 64 * Words.
///
/// Adjacency is kept symmetric with an empty diagonal, and the edge count is
/// maintained incrementally so `size()` is O(1).
template <std::size_t Words = 1>
class basic_graph {
 public:
  using set_type = vertex_set<Words>;
  static constexpr std::size_t max_vertices = 64 * Words;
  static constexpr std::size_t words = Words;

  basic_graph() = default;
  explicit basic_graph(std::size_t n) : adj_(n) {
    if (n > max_vertices)
      throw domain_error("graph order " + std::to_string(n) + " exceeds capacity " +
                         std::to_string(max_vertices));
  }
  basic_graph(std::size_t n, std::initializer_list<std::pair<vertex, vertex>> edges)
      : basic_graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }
  template <typename EdgeRange>
  static basic_graph from_edges(std::size_t n, const EdgeRange& edges) {
    basic_graph g(n);
    for (const auto& e : edges) g.add_edge(e.first, e.second);
    return g;
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return m_; }

  bool adjacent(vertex u, vertex v) const { return adj_[u].contains(v); }
  const set_type& neighbors(vertex u) const { return adj_[u]; }
  std::size_t degree(vertex u) const { return adj_[u].size(); }
  set_type vertices() const { return set_type::prefix(order()); }

  void add_edge(vertex u, vertex v) {
    check(u);
    check(v);
    if (u == v) throw domain_error("self-loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v)) return;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++m_;
  }
  void remove_edge(vertex u, vertex v) {
    check(u);
    check(v);
    if (!adj_[u].contains(v)) return;
    adj_[u].erase(v);
    adj_[v].erase(u);
    --m_;
  }
  vertex add_vertex() {
    if (order() == max_vertices) throw domain_error("graph capacity exhausted");
    adj_.emplace_back();
    return static_cast<vertex>(adj_.size() - 1);
  }

  /// Edges (u, v) with u < v in row-major order.
  std::vector<std::pair<vertex, vertex>> edges() const {
    std::vector<std::pair<vertex, vertex>> out;
    out.reserve(m_);
    for (vertex u = 0; u < order(); ++u)
      adj_[u].for_each([&](vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }
  /// Degrees sorted non-increasingly.
  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> d(order());
    for (vertex u = 0; u < order(); ++u) d[u] = degree(u);
    std::sort(d.rbegin(), d.rend());
    return d;
  }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (vertex u = 0; u < order(); ++u) d = std::max(d, degree(u));
    return d;
  }

  void check(vertex v) const {
    if (v >= order())
      throw domain_error("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(order()));
  }
  void check(const set_type& s) const {
    if (!s.subset_of(vertices())) throw domain_error("vertex set not contained in graph");
  }

  friend bool operator==(const basic_graph& a, const basic_graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<set_type> adj_;
  std::size_t m_ = 0;
};

using graph = basic_graph<1>;
using wide_graph = basic_graph<4>;

/// Copies `g` into a graph with a different row width.
template <std::size_t To, std::size_t From>
basic_graph<To> convert(const basic_graph<From>& g) {
  basic_graph<To> out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

/// d_S(v) = |N(v) ∩ S|.
template <std::size_t W>
std::size_t degree_in(const basic_graph<W>& g, vertex v, const vertex_set<W>& s) {
  g.check(v);
  return g.neighbors(v).intersection_size(s);
}

/// e(S,T): edges with one endpoint in S and the other in T. S and T may
/// overlap; e(S,S) counts each edge inside S once.
template <std::size_t W>
std::size_t edge_count(const basic_graph<W>& g, const vertex_set<W>& s, const vertex_set<W>& t) {
  g.check(s);
  g.check(t);
  std::size_t ordered = 0;
  s.for_each([&](vertex x) { ordered += g.neighbors(x).intersection_size(t); });
  const auto both = s & t;
  std::size_t inside_twice = 0;
  both.for_each([&](vertex x) { inside_twice += g.neighbors(x).intersection_size(both); });
  return ordered - inside_twice / 2;
}

/// e(S)
template <std::size_t W>
std::size_t edge_count(const basic_graph<W>& g, const vertex_set<W>& s) {
  return edge_count(g, s, s);
}

template <std::size_t W>
struct neighborhood_strata {
  vertex center = 0;
  vertex_set<W> closed;  // N[u]
  vertex_set<W> open;    // N(u)
  /// by_inner_degree[i] = N_i(u), neighbours with exactly i neighbours inside N(u)
  std::vector<vertex_set<W>> by_inner_degree;
  vertex_set<W> second;  // N^2(u), vertices at distance exactly 2
  vertex_set<W> far;     // W = V \ N[u]

  const vertex_set<W>& n0() const { return by_inner_degree.at(0); }
  vertex_set<W> n1() const { return ni(1); }
  vertex_set<W> ni(std::size_t i) const {
    return i < by_inner_degree.size() ? by_inner_degree[i] : vertex_set<W>{};
  }
  /// N_+(u) = N(u) \ N_0(u)
  vertex_set<W> non_isolated() const { return open - n0(); }
};

template <std::size_t W>
neighborhood_strata<W> strata(const basic_graph<W>& g, vertex u) {
  g.check(u);
  neighborhood_strata<W> s;
  s.center = u;
  s.open = g.neighbors(u);
  s.closed = s.open;
  s.closed.insert(u);
  s.far = g.vertices() - s.closed;
  s.by_inner_degree.resize(1);
  s.open.for_each([&](vertex v) {
    const std::size_t i = g.neighbors(v).intersection_size(s.open);
    if (i >= s.by_inner_degree.size()) s.by_inner_degree.resize(i + 1);
    s.by_inner_degree[i].insert(v);
  });
  s.open.for_each([&](vertex v) { s.second |= g.neighbors(v); });
  s.second -= s.closed;
  return s;
}

/// Connected components, each listed by its member set, ordered by smallest vertex.
template <std::size_t W>
std::vector<vertex_set<W>> components(const basic_graph<W>& g) {
  std::vector<vertex_set<W>> out;
  auto left = g.vertices();
  while (!left.empty()) {
    vertex_set<W> comp;
    vertex_set<W> frontier;
    frontier.insert(left.first());
    while (!frontier.empty()) {
      comp |= frontier;
      vertex_set<W> next;
      frontier.for_each([&](vertex v) { next |= g.neighbors(v); });
      frontier = next - comp;
    }
    left -= comp;
    out.push_back(comp);
  }
  return out;
}

template <std::size_t W>
bool is_connected(const basic_graph<W>& g) {
  return g.order() <= 1 || components(g).size() == 1;
}

/// Subgraph induced on `s`, relabelled in increasing vertex order. `labels`
/// receives the original vertex for each new index.
template <std::size_t W>
basic_graph<W> induced_subgraph(const basic_graph<W>& g, const vertex_set<W>& s,
                                std::vector<vertex>* labels = nullptr) {
  const auto vs = s.to_vector();
  std::vector<vertex> index(g.order(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<vertex>(i);
  basic_graph<W> h(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    (g.neighbors(vs[i]) & s).for_each([&](vertex w) {
      if (index[w] > i) h.add_edge(static_cast<vertex>(i), index[w]);
    });
  if (labels) *labels = vs;
  return h;
}

/// Drops isolated vertices, keeping the relative order of the rest.
template <std::size_t W>
basic_graph<W> without_isolated(const basic_graph<W>& g) {
  vertex_set<W> keep;
  for (vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) keep.insert(v);
  return induced_subgraph(g, keep);
}

/// Graph with vertex `perm[i]` of `g` renamed to i.
template <std::size_t W>
basic_graph<W> relabel(const basic_graph<W>& g, const std::vector<vertex>& perm) {
  std::vector<vertex> inv(g.order());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<vertex>(i);
  basic_graph<W> h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(inv[u], inv[v]);
  return h;
}

/// Disjoint union, `b` relabelled after `a`.
template <std::size_t W>
basic_graph<W> disjoint_union(const basic_graph<W>& a, const basic_graph<W>& b) {
  basic_graph<W> h(a.order() + b.order());
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  const auto off = static_cast<vertex>(a.order());
  for (auto [u, v] : b.edges()) h.add_edge(u + off, v + off);
  return h;
}

struct bipartition_result {
  bool bipartite = true;
  /// 0/1 colour per vertex when bipartite.
  std::vector<int> colour;
  /// Closed walk v0 v1 ... vk (vk adjacent to v0) of odd length when not bipartite.
  std::vector<vertex> odd_cycle;
};

template <std::size_t W>
bipartition_result bipartition(const basic_graph<W>& g) {
  const std::size_t n = g.order();
  bipartition_result r;
  r.colour.assign(n, -1);
  std::vector<vertex> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);
  for (vertex s = 0; s < n; ++s) {
    if (r.colour[s] != -1) continue;
    r.colour[s] = 0;
    parent[s] = s;
    std::vector<vertex> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const vertex v = queue[qi];
      for (vertex w : g.neighbors(v).to_vector()) {
        if (r.colour[w] == -1) {
          r.colour[w] = 1 - r.colour[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (r.colour[w] == r.colour[v]) {
          // BFS tree paths from v and w to their lowest common ancestor close an odd cycle.
          std::vector<vertex> left{v}, right{w};
          vertex a = v, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          r.odd_cycle = left;
          r.odd_cycle.insert(r.odd_cycle.end(), right.rbegin(), right.rend());
          r.bipartite = false;
          r.colour.clear();
          return r;
        }
      }
    }
  }
  return r;
}

template <std::size_t W>
bool is_bipartite(const basic_graph<W>& g) {
  return bipartition(g).bipartite;
}

/// Articulation points via DFS low-link.
template <std::size_t W>
vertex_set<W> cut_vertices(const basic_graph<W>& g) {
  const std::size_t n = g.order();
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, unseen), low(n, 0);
  std::vector<vertex> parent(n, 0);
  vertex_set<W> cuts;
  std::size_t timer = 0;
  struct frame {
    vertex v;
    std::vector<vertex> nbrs;
    std::size_t next = 0;
    std::size_t children = 0;
  };
  for (vertex root = 0; root < n; ++root) {
    if (disc[root] != unseen) continue;
    std::vector<frame> stack;
    disc[root] = low[root] = timer++;
    parent[root] = root;
    stack.push_back({root, g.neighbors(root).to_vector()});
    while (!stack.empty()) {
      frame& f = stack.back();
      if (f.next < f.nbrs.size()) {
        const vertex w = f.nbrs[f.next++];
        if (disc[w] == unseen) {
          parent[w] = f.v;
          ++f.children;
          disc[w] = low[w] = timer++;
          stack.push_back({w, g.neighbors(w).to_vector()});
        } else if (w != parent[f.v]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const vertex v = f.v;
      const std::size_t children = f.children;
      stack.pop_back();
      if (stack.empty()) {
        if (children >= 2) cuts.insert(v);
      } else {
        const vertex p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) cuts.insert(p);
      }
    }
  }
  return cuts;
}

}  // namespace specturan
