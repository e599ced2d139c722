#pragma once

// Cycle and C_t^+ detection with re-checkable witnesses, and the shape
// classifier for components of the subgraph induced by a neighbourhood.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specturan/errors.hpp"
#include "specturan/graph.hpp"

namespace specturan {

enum class motif_kind { cycle, ct_plus };

/// For a cycle: `vertices` lists the t cycle vertices in order.
/// For C_t^+: the t cycle vertices in order, then the apex, which is adjacent
/// to vertices[0] and vertices[1].
struct motif_witness {
  motif_kind kind = motif_kind::cycle;
  std::size_t t = 0;
  std::vector<vertex> vertices;

  std::string name() const {
    if (kind == motif_kind::ct_plus) return "C" + std::to_string(t) + "+";
    return "C" + std::to_string(t);
  }
};

/// Re-checks a witness against `g` by direct adjacency lookups.
template <std::size_t W>
bool verify_witness(const basic_graph<W>& g, const motif_witness& w) {
  const std::size_t want = w.kind == motif_kind::cycle ? w.t : w.t + 1;
  if (w.t < 3 || w.vertices.size() != want) return false;
  std::vector<vertex> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (vertex v : sorted)
    if (v >= g.order()) return false;
  for (std::size_t i = 0; i < w.t; ++i)
    if (!g.adjacent(w.vertices[i], w.vertices[(i + 1) % w.t])) return false;
  if (w.kind == motif_kind::ct_plus) {
    const vertex apex = w.vertices[w.t];
    if (!g.adjacent(apex, w.vertices[0]) || !g.adjacent(apex, w.vertices[1])) return false;
  }
  return true;
}

namespace detail {

template <std::size_t W>
std::optional<motif_witness> find_triangle(const basic_graph<W>& g) {
  for (auto [u, v] : g.edges()) {
    const auto common = g.neighbors(u) & g.neighbors(v);
    if (!common.empty()) return motif_witness{motif_kind::cycle, 3, {u, v, static_cast<vertex>(common.first())}};
  }
  return std::nullopt;
}

template <std::size_t W>
std::optional<motif_witness> find_quadrilateral(const basic_graph<W>& g) {
  const std::size_t n = g.order();
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v) {
      const auto common = g.neighbors(u) & g.neighbors(v);
      if (common.size() < 2) continue;
      const auto c = common.to_vector();
      return motif_witness{motif_kind::cycle, 4, {u, c[0], v, c[1]}};
    }
  return std::nullopt;
}

/// BFS distances to `target` inside `allowed`; unreachable vertices get n + 1.
template <std::size_t W>
std::vector<std::size_t> distances_to(const basic_graph<W>& g, vertex target, const vertex_set<W>& allowed) {
  const std::size_t n = g.order();
  std::vector<std::size_t> dist(n, n + 1);
  std::vector<vertex> queue{target};
  dist[target] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const vertex x = queue[head];
    (g.neighbors(x) & allowed).for_each([&](vertex y) {
      if (dist[y] > n) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    });
  }
  return dist;
}

/// Depth-first search for a simple path from path.back() to `target` with
/// exactly `edges_left` more edges, using only vertices in `allowed`.
template <std::size_t W>
bool extend_path(const basic_graph<W>& g, vertex target, std::size_t edges_left, vertex_set<W>& allowed,
                 const std::vector<std::size_t>& dist, std::vector<vertex>& path) {
  const vertex x = path.back();
  if (edges_left == 1) return g.adjacent(x, target);
  bool found = false;
  (g.neighbors(x) & allowed).for_each([&](vertex y) {
    if (found || y == target || dist[y] > edges_left - 1) return;
    allowed.erase(y);
    path.push_back(y);
    if (extend_path(g, target, edges_left - 1, allowed, dist, path)) {
      found = true;
    } else {
      path.pop_back();
    }
    allowed.insert(y);
  });
  return found;
}

/// Simple path a = p_0, ..., p_len = b avoiding `avoid`, if one exists.
template <std::size_t W>
std::optional<std::vector<vertex>> path_of_length(const basic_graph<W>& g, vertex a, vertex b, std::size_t len,
                                                  vertex_set<W> allowed) {
  allowed.insert(b);
  allowed.erase(a);
  const auto dist = distances_to(g, b, allowed);
  if (dist[a] > g.order() && !g.adjacent(a, b)) return std::nullopt;
  std::vector<vertex> path{a};
  if (!extend_path(g, b, len, allowed, dist, path)) return std::nullopt;
  path.push_back(b);
  return path;
}

}  // namespace detail

/// A cycle of length exactly t as a subgraph, if one exists.
template <std::size_t W>
std::optional<motif_witness> contains_cycle(const basic_graph<W>& g, std::size_t t) {
  if (t < 3) throw domain_error("cycle length must be at least 3");
  if (t > g.order()) return std::nullopt;
  if (t == 3) return detail::find_triangle(g);
  if (t == 4) return detail::find_quadrilateral(g);
  // The cycle through its smallest vertex s, entered via the edge s-a.
  for (vertex s = 0; s < g.order(); ++s) {
    auto above = vertex_set<W>::prefix(g.order()) - vertex_set<W>::prefix(s + 1);
    for (vertex a : (g.neighbors(s) & above).to_vector()) {
      auto allowed = above;
      allowed.erase(a);
      allowed.insert(s);
      if (auto p = detail::path_of_length(g, a, s, t - 1, allowed)) {
        // p = a, ..., s; the cycle is s, a, ...
        std::vector<vertex> vs{s};
        vs.insert(vs.end(), p->begin(), p->end() - 1);
        return motif_witness{motif_kind::cycle, t, std::move(vs)};
      }
    }
  }
  return std::nullopt;
}

/// C_t^+ as a subgraph: an edge ab with a common neighbour z and a simple
/// b-to-a path with t-1 edges avoiding z.
template <std::size_t W>
std::optional<motif_witness> contains_ct_plus(const basic_graph<W>& g, std::size_t t) {
  if (t < 3) throw domain_error("cycle length must be at least 3");
  if (t + 1 > g.order()) return std::nullopt;
  const auto all = vertex_set<W>::prefix(g.order());
  for (auto [a, b] : g.edges()) {
    const auto common = g.neighbors(a) & g.neighbors(b);
    for (vertex z : common.to_vector()) {
      auto allowed = all;
      allowed.erase(z);
      if (auto p = detail::path_of_length(g, b, a, t - 1, allowed)) {
        // p = b, ..., a; the cycle is a, b, ..., with apex z.
        std::vector<vertex> vs{a};
        vs.insert(vs.end(), p->begin(), p->end() - 1);
        vs.push_back(z);
        return motif_witness{motif_kind::ct_plus, t, std::move(vs)};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Neighbourhood component shapes.

enum class component_shape { star, double_star, s1, c4_spanning, other };
enum class c4_spanning_kind { c4, c3_plus, k4 };

struct component_class {
  component_shape shape = component_shape::other;
  /// star: r; double_star: a, b (a <= b); s1: r (the graph is S^1_{r+1}).
  std::size_t a = 0;
  std::size_t b = 0;
  c4_spanning_kind spanning = c4_spanning_kind::c4;

  std::string to_string() const {
    switch (shape) {
      case component_shape::star: return "Star(" + std::to_string(a) + ")";
      case component_shape::double_star: return "DoubleStar(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case component_shape::s1: return "S1(" + std::to_string(a) + ")";
      case component_shape::c4_spanning:
        switch (spanning) {
          case c4_spanning_kind::c4: return "C4Spanning(C4)";
          case c4_spanning_kind::c3_plus: return "C4Spanning(C3Plus)";
          case c4_spanning_kind::k4: return "C4Spanning(K4)";
        }
        break;
      case component_shape::other: break;
    }
    return "Other";
  }
  friend bool operator==(const component_class&, const component_class&) = default;
};

/// Shape of a connected graph, checked in the order star, double star,
/// S^1_{r+1}, 4-vertex graph with a spanning C_4.
template <std::size_t W>
component_class classify_component(const basic_graph<W>& l) {
  const std::size_t k = l.order();
  const std::size_t e = l.size();
  std::vector<std::size_t> deg(k);
  for (vertex v = 0; v < k; ++v) deg[v] = l.degree(v);
  const std::size_t maxdeg = k ? *std::max_element(deg.begin(), deg.end()) : 0;
  component_class c;
  if (e + 1 == k && (k == 1 || maxdeg == k - 1)) {
    c.shape = component_shape::star;
    c.a = k - 1;
    return c;
  }
  if (e + 1 == k && k >= 4) {
    // Tree: a double star has exactly two non-leaves and they are adjacent.
    std::vector<vertex> inner;
    for (vertex v = 0; v < k; ++v)
      if (deg[v] > 1) inner.push_back(v);
    if (inner.size() == 2 && l.adjacent(inner[0], inner[1])) {
      c.shape = component_shape::double_star;
      c.a = std::min(deg[inner[0]], deg[inner[1]]) - 1;
      c.b = std::max(deg[inner[0]], deg[inner[1]]) - 1;
      return c;
    }
  }
  if (e == k && k >= 3 && maxdeg == k - 1) {
    // Star plus one edge between two leaves (a triangle when k = 3).
    std::size_t hubs = 0;
    for (vertex v = 0; v < k; ++v) hubs += deg[v] == k - 1;
    std::size_t twos = 0;
    for (vertex v = 0; v < k; ++v) twos += deg[v] == 2;
    if (k == 3 || (hubs == 1 && twos == 2)) {
      c.shape = component_shape::s1;
      c.a = k - 1;
      return c;
    }
  }
  if (k == 4 && e >= 4 && contains_cycle(l, 4)) {
    c.shape = component_shape::c4_spanning;
    c.spanning = e == 4 ? c4_spanning_kind::c4 : e == 5 ? c4_spanning_kind::c3_plus : c4_spanning_kind::k4;
    return c;
  }
  return c;
}

struct classified_component {
  std::vector<vertex> vertices;
  component_class cls;
};

/// Components of G[N(u)], ordered by smallest vertex, with their shapes.
template <std::size_t W>
std::vector<classified_component> classify_neighborhood_components(const basic_graph<W>& g, vertex u) {
  g.check(u);
  std::vector<vertex> labels;
  const basic_graph<W> h = induced_subgraph(g, g.neighbors(u), &labels);
  std::vector<classified_component> out;
  for (const auto& comp : components(h)) {
    std::vector<vertex> local;
    const basic_graph<W> l = induced_subgraph(h, comp, &local);
    classified_component cc;
    for (vertex v : local) cc.vertices.push_back(labels[v]);
    cc.cls = classify_component(l);
    out.push_back(std::move(cc));
  }
  return out;
}

}  // namespace specturan
