#pragma once

// Spectral radius with a certified enclosing interval, Perron vectors,
// equitable partitions and their quotient matrices, and edge rotation.
//
// The floating-point eigenpair comes from a dense symmetric eigensolver on
// the component attaining the spectral radius. The interval is certified
// against the exact characteristic polynomial of that component's coarsest
// equitable quotient: for a connected graph the largest eigenvalue of any
// equitable quotient equals the spectral radius, and the quotient polynomial
// divides det(xI - A), so it is real-rooted and Descartes' rule counts its
// roots above a rational point exactly.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specturan/charpoly.hpp"
#include "specturan/errors.hpp"
#include "specturan/graph.hpp"
#include "specturan/poly.hpp"

namespace specturan {

inline constexpr double default_tol = 1e-10;

struct spectral_result {
  double rho = 0.0;
  /// Largest root of `bracket.poly()` lies in (lo, hi]; it equals rho(G).
  certified_root bracket;
  /// Unit-norm, nonnegative, supported on `component`.
  std::vector<double> perron;
  vertex ustar = 0;
  /// Vertices of the component attaining rho.
  std::vector<vertex> component;
  /// ||A x - rho x||_inf for the returned vector.
  double residual = 0.0;

  double lo() const { return bracket.lo().convert_to<double>(); }
  double hi() const { return bracket.hi().convert_to<double>(); }
};

/// Coarsest equitable refinement of a partition, with its quotient matrix.
struct quotient_matrix {
  std::vector<std::vector<vertex>> cells;
  /// b[i][j] = |N(u) ∩ cells[j]| for any u in cells[i].
  int_matrix b;
};

namespace detail {

struct eigen_pair {
  double value = 0.0;
  std::vector<double> vec;
};

template <std::size_t W>
eigen_pair top_eigenpair(const basic_graph<W>& h) {
  const auto n = static_cast<Eigen::Index>(h.order());
  if (n == 1) return {0.0, {1.0}};
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : h.edges()) a(u, v) = a(v, u) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  eigen_pair r;
  r.value = es.eigenvalues()(n - 1);
  Eigen::VectorXd x = es.eigenvectors().col(n - 1);
  if (x.sum() < 0) x = -x;
  x = x.cwiseAbs();
  x /= x.norm();
  r.vec.assign(x.data(), x.data() + n);
  return r;
}

}  // namespace detail

/// Floating-point spectral radius only (max over components).
template <std::size_t W>
double spectral_radius_estimate(const basic_graph<W>& g) {
  double best = 0.0;
  for (const auto& comp : components(g)) {
    if (comp.size() < 2) continue;
    best = std::max(best, detail::top_eigenpair(induced_subgraph(g, comp)).value);
  }
  return best;
}

template <std::size_t W>
bool is_equitable(const basic_graph<W>& g, const std::vector<std::vector<vertex>>& cells) {
  std::vector<vertex_set<W>> sets;
  for (const auto& c : cells) sets.push_back(vertex_set<W>::from_range(c));
  for (const auto& c : cells)
    for (const auto& s : sets) {
      const std::size_t want = g.neighbors(c.front()).intersection_size(s);
      for (vertex u : c)
        if (g.neighbors(u).intersection_size(s) != want) return false;
    }
  return true;
}

/// Coarsest equitable refinement of `seed` (default: the trivial partition).
/// Cells are returned ordered by their smallest vertex.
template <std::size_t W>
quotient_matrix equitable_partition(const basic_graph<W>& g,
                                    std::optional<std::vector<std::vector<vertex>>> seed = {}) {
  const std::size_t n = g.order();
  std::vector<std::size_t> cell_of(n, 0);
  std::size_t ncells = n > 0 ? 1 : 0;
  if (seed) {
    std::vector<char> seen(n, 0);
    ncells = 0;
    for (const auto& c : *seed) {
      if (c.empty()) throw domain_error("seed partition has an empty cell");
      for (vertex v : c) {
        g.check(v);
        if (seen[v]) throw domain_error("vertex " + std::to_string(v) + " appears in two cells");
        seen[v] = 1;
        cell_of[v] = ncells;
      }
      ++ncells;
    }
    for (vertex v = 0; v < n; ++v)
      if (!seen[v]) throw domain_error("seed partition misses vertex " + std::to_string(v));
  }

  while (true) {
    std::vector<vertex_set<W>> sets(ncells);
    for (vertex v = 0; v < n; ++v) sets[cell_of[v]].insert(v);
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (vertex v = 0; v < n; ++v) {
      std::vector<std::size_t> sig{cell_of[v]};
      for (const auto& s : sets) sig.push_back(g.neighbors(v).intersection_size(s));
      next[v] = ids.emplace(std::move(sig), ids.size()).first->second;
    }
    const bool stable = ids.size() == ncells;
    cell_of = std::move(next);
    ncells = ids.size();
    if (stable) break;
  }

  quotient_matrix q;
  std::vector<std::size_t> order(ncells, n);
  for (vertex v = 0; v < n; ++v) order[cell_of[v]] = std::min<std::size_t>(order[cell_of[v]], v);
  std::vector<std::size_t> rank(ncells);
  {
    std::vector<std::size_t> idx(ncells);
    for (std::size_t i = 0; i < ncells; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return order[a] < order[b]; });
    for (std::size_t i = 0; i < ncells; ++i) rank[idx[i]] = i;
  }
  q.cells.assign(ncells, {});
  for (vertex v = 0; v < n; ++v) q.cells[rank[cell_of[v]]].push_back(v);
  std::vector<vertex_set<W>> sets;
  for (const auto& c : q.cells) sets.push_back(vertex_set<W>::from_range(c));
  q.b.assign(ncells, std::vector<std::int64_t>(ncells, 0));
  for (std::size_t i = 0; i < ncells; ++i)
    for (std::size_t j = 0; j < ncells; ++j)
      q.b[i][j] = static_cast<std::int64_t>(g.neighbors(q.cells[i].front()).intersection_size(sets[j]));
  return q;
}

/// Exact det(xI - A(G)).
template <std::size_t W>
int_poly char_poly(const basic_graph<W>& g) {
  return characteristic_polynomial(g);
}

/// Certified spectral radius. Disconnected graphs are handled per component;
/// among components with equal spectral radius the one with the lowest vertex wins.
template <std::size_t W>
spectral_result spectral_radius(const basic_graph<W>& g, double tol = default_tol) {
  if (!(tol > 0)) throw domain_error("tolerance must be positive");
  if (g.order() == 0) throw domain_error("spectral radius of the empty graph");
  const rational width = certified_root::dyadic_at_most(rational(tol));

  struct candidate {
    vertex_set<W> comp;
    basic_graph<W> sub;
    std::vector<vertex> labels;
    detail::eigen_pair pair;
  };
  auto certify = [&](const candidate& c) {
    const quotient_matrix q = equitable_partition(c.sub);
    return certified_root::around(characteristic_polynomial(q.b), root_counting::descartes,
                                  c.pair.value, width);
  };

  std::optional<candidate> best;
  std::optional<certified_root> best_root;
  for (const auto& comp : components(g)) {
    candidate c;
    c.comp = comp;
    c.sub = induced_subgraph(g, comp, &c.labels);
    c.pair = detail::top_eigenpair(c.sub);
    if (!best) {
      best = std::move(c);
      continue;
    }
    const double diff = c.pair.value - best->pair.value;
    if (diff < -1e-8) continue;
    if (diff > 1e-8) {
      best = std::move(c);
      best_root.reset();
      continue;
    }
    if (!best_root) best_root = certify(*best);
    const certified_root r = certify(c);
    if (compare(r, *best_root) > 0) {
      best = std::move(c);
      best_root = r;
    }
  }

  spectral_result res;
  res.bracket = best_root ? *best_root : certify(*best);
  res.rho = std::clamp(best->pair.value, res.lo(), res.hi());
  res.perron.assign(g.order(), 0.0);
  for (std::size_t i = 0; i < best->labels.size(); ++i) res.perron[best->labels[i]] = best->pair.vec[i];
  res.component = best->labels;

  double mx = -1.0;
  for (vertex v : res.component) mx = std::max(mx, res.perron[v]);
  for (vertex v : res.component)
    if (res.perron[v] >= mx - 1e-12) {
      res.ustar = v;
      break;
    }
  for (vertex v = 0; v < g.order(); ++v) {
    double ax = 0.0;
    g.neighbors(v).for_each([&](vertex w) { ax += res.perron[w]; });
    res.residual = std::max(res.residual, std::fabs(ax - res.rho * res.perron[v]));
  }
  return res;
}

/// Exact ordering of two spectral radii: -1, 0 or 1.
inline int compare(const spectral_result& a, const spectral_result& b) {
  return compare(a.bracket, b.bracket);
}

/// G' = G - sum v_i v + sum v_i u for v_i in `moved`.
template <std::size_t W>
basic_graph<W> rotate_edges(const basic_graph<W>& g, vertex v, vertex u, const vertex_set<W>& moved) {
  if (v >= g.order()) throw rotation_error("vertex " + std::to_string(v) + " out of range");
  if (u >= g.order()) throw rotation_error("vertex " + std::to_string(u) + " out of range");
  if (u == v) throw rotation_error("rotation needs distinct vertices, got " + std::to_string(u) + " twice");
  if (moved.contains(u)) throw rotation_error("target vertex " + std::to_string(u) + " is in the moved set");
  if (moved.contains(v)) throw rotation_error("source vertex " + std::to_string(v) + " is in the moved set");
  basic_graph<W> h = g;
  for (vertex w : moved.to_vector()) {
    if (w >= g.order()) throw rotation_error("vertex " + std::to_string(w) + " out of range");
    if (!g.adjacent(w, v))
      throw rotation_error("vertex " + std::to_string(w) + " is not a neighbour of " + std::to_string(v));
    if (g.adjacent(w, u))
      throw rotation_error("vertex " + std::to_string(w) + " is already a neighbour of " + std::to_string(u));
    h.remove_edge(w, v);
    h.add_edge(w, u);
  }
  return h;
}

/// A bound or other algebraic number given as the largest root of a polynomial.
inline certified_root algebraic_largest_root(const int_poly& p, const rational& width = rational(1, bigint(1) << 40)) {
  return certified_root::largest(p, root_counting::sturm, width);
}

}  // namespace specturan
