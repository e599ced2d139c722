#pragma once

// Canonical labelling by individualisation and refinement.
//
// Each connected component is labelled separately: its vertex partition is
// refined to equitability, then a search individualises the vertices of the
// first non-singleton cell one at a time, and the lexicographically least
// relabelled adjacency over all leaves is kept. Branches are skipped when an
// automorphism fixing the current prefix (either a twin transposition or one
// discovered from two leaves with equal adjacency) maps them onto an
// explored branch. Components are then concatenated in sorted order.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "specturan/graph.hpp"
#include "specturan/graph6.hpp"

namespace specturan {

namespace detail {

template <std::size_t W>
class component_canonizer {
 public:
  using set_type = vertex_set<W>;
  using key_type = std::vector<std::array<std::uint64_t, W>>;

  explicit component_canonizer(const basic_graph<W>& g) : g_(g), n_(g.order()) {}

  void run() {
    std::vector<std::vector<vertex>> cells;
    if (n_ > 0) {
      cells.emplace_back(n_);
      std::iota(cells[0].begin(), cells[0].end(), vertex{0});
    }
    refine(cells);
    std::vector<vertex> prefix;
    search(cells, prefix);
  }

  const std::vector<vertex>& labelling() const { return best_lab_; }
  const key_type& key() const { return best_key_; }

 private:
  void refine(std::vector<std::vector<vertex>>& cells) const {
    bool changed = true;
    std::vector<std::size_t> count(n_);
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size(); ++s) {
        const set_type splitter = set_type::from_range(cells[s]);
        for (std::size_t c = 0; c < cells.size(); ++c) {
          auto& cell = cells[c];
          if (cell.size() == 1) continue;
          bool uniform = true;
          for (vertex v : cell) {
            count[v] = g_.neighbors(v).intersection_size(splitter);
            if (count[v] != count[cell[0]]) uniform = false;
          }
          if (uniform) continue;
          std::stable_sort(cell.begin(), cell.end(),
                           [&](vertex a, vertex b) { return count[a] < count[b]; });
          std::vector<std::vector<vertex>> parts;
          for (vertex v : cell) {
            if (parts.empty() || count[parts.back().front()] != count[v]) parts.emplace_back();
            parts.back().push_back(v);
          }
          const std::size_t k = parts.size();
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
          c += k - 1;
          changed = true;
        }
      }
    }
  }

  key_type leaf_key(const std::vector<vertex>& lab) const {
    std::vector<vertex> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[lab[i]] = static_cast<vertex>(i);
    key_type key(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      set_type row;
      g_.neighbors(lab[i]).for_each([&](vertex w) { row.insert(pos[w]); });
      key[i] = row.words();
    }
    return key;
  }

  bool twins(vertex a, vertex b) const {
    set_type na = g_.neighbors(a);
    set_type nb = g_.neighbors(b);
    na.erase(b);
    nb.erase(a);
    return na == nb;
  }

  void search(std::vector<std::vector<vertex>>& cells, std::vector<vertex>& prefix) {
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      std::vector<vertex> lab(n_);
      for (std::size_t i = 0; i < n_; ++i) lab[i] = cells[i][0];
      key_type key = leaf_key(lab);
      if (best_lab_.empty() && n_ > 0) {
        best_lab_ = std::move(lab);
        best_key_ = std::move(key);
      } else if (key < best_key_) {
        best_lab_ = std::move(lab);
        best_key_ = std::move(key);
      } else if (key == best_key_ && automorphisms_.size() < max_generators) {
        // best_lab_[i] -> lab[i] preserves adjacency.
        std::vector<vertex> gamma(n_);
        for (std::size_t i = 0; i < n_; ++i) gamma[best_lab_[i]] = lab[i];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }

    const std::vector<vertex> cell = cells[target];
    std::vector<vertex> explored;
    for (vertex v : cell) {
      if (equivalent_to_explored(v, explored, prefix)) continue;
      explored.push_back(v);
      std::vector<std::vector<vertex>> child = cells;
      auto& tc = child[target];
      tc.erase(std::find(tc.begin(), tc.end(), v));
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), std::vector<vertex>{v});
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  // True when some automorphism fixing `prefix` pointwise (a product of
  // twin transpositions and stored generators) maps v to an explored vertex.
  bool equivalent_to_explored(vertex v, const std::vector<vertex>& explored,
                              const std::vector<vertex>& prefix) const {
    if (explored.empty()) return false;
    for (vertex e : explored)
      if (twins(v, e)) return true;
    std::vector<const std::vector<vertex>*> usable;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (vertex p : prefix)
        if (gamma[p] != p) {
          fixes = false;
          break;
        }
      if (fixes) usable.push_back(&gamma);
    }
    if (usable.empty()) return false;
    // Orbit of v under the group generated by `usable`.
    std::vector<char> seen(n_, 0);
    std::vector<vertex> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      const vertex x = stack.back();
      stack.pop_back();
      for (const auto* gamma : usable) {
        const vertex y = (*gamma)[x];
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    for (vertex e : explored)
      if (seen[e]) return true;
    return false;
  }

  static constexpr std::size_t max_generators = 64;

  const basic_graph<W>& g_;
  std::size_t n_;
  std::vector<vertex> best_lab_;
  key_type best_key_;
  std::vector<std::vector<vertex>> automorphisms_;
};

}  // namespace detail

/// Canonical labelling: position i of the canonical form holds vertex lab[i] of g.
template <std::size_t W>
std::vector<vertex> canonical_labelling(const basic_graph<W>& g) {
  struct piece {
    std::size_t order;
    typename detail::component_canonizer<W>::key_type key;
    std::vector<vertex> lab;  // original vertices in canonical order
  };
  std::vector<piece> pieces;
  for (const auto& comp : components(g)) {
    std::vector<vertex> labels;
    const basic_graph<W> h = induced_subgraph(g, comp, &labels);
    detail::component_canonizer<W> c(h);
    c.run();
    piece p{h.order(), c.key(), {}};
    for (vertex v : c.labelling()) p.lab.push_back(labels[v]);
    pieces.push_back(std::move(p));
  }
  // Larger components first, then by adjacency key.
  std::stable_sort(pieces.begin(), pieces.end(), [](const piece& a, const piece& b) {
    if (a.order != b.order) return a.order > b.order;
    return a.key < b.key;
  });
  std::vector<vertex> lab;
  lab.reserve(g.order());
  for (const auto& p : pieces) lab.insert(lab.end(), p.lab.begin(), p.lab.end());
  return lab;
}

template <std::size_t W>
basic_graph<W> canonical_form(const basic_graph<W>& g) {
  return relabel(g, canonical_labelling(g));
}

/// graph6 of the canonical form; equal iff the graphs are isomorphic.
template <std::size_t W>
std::string certificate(const basic_graph<W>& g) {
  return graph6_encode(canonical_form(g));
}

template <std::size_t A, std::size_t B>
bool isomorphic(const basic_graph<A>& a, const basic_graph<B>& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return certificate(a) == certificate(b);
}

}  // namespace specturan
