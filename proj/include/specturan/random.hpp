#pragma once

// Seeded random graphs for property sweeps.

#include <algorithm>
#include <random>
#include <vector>

#include "specturan/graph.hpp"

namespace specturan {

/// G(n, p).
template <std::size_t W = 1, class Rng>
basic_graph<W> random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  basic_graph<W> g(n);
  for (vertex a = 0; a < n; ++a)
    for (vertex b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

/// Random labelled tree on n vertices plus each remaining pair with probability p.
template <std::size_t W = 1, class Rng>
basic_graph<W> random_connected_graph(std::size_t n, double p, Rng& rng) {
  basic_graph<W> g(n);
  std::vector<vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<vertex>(i);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    g.add_edge(order[i], order[pick(rng)]);
  }
  std::bernoulli_distribution coin(p);
  for (vertex a = 0; a < n; ++a)
    for (vertex b = a + 1; b < n; ++b)
      if (!g.adjacent(a, b) && coin(rng)) g.add_edge(a, b);
  return g;
}

}  // namespace specturan
