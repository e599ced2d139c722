#pragma once

// Isomorph-free generation of graphs with exactly m edges and no isolated
// vertices, by canonical augmentation on edges.
//
// Level k holds one canonical representative per class with k edges. A child
// C = P + e of a parent P is accepted when e could be C's canonical deletion:
// its invariant is maximal among C's edges, and deleting C's canonical edge e*
// (and any vertex it isolates) gives a graph isomorphic to P. Each class then
// has a unique parent class; children of one parent are deduplicated by
// certificate. Subgraph-closed filters (F-free) prune during growth, the rest
// are applied at level m.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "specturan/canonical.hpp"
#include "specturan/errors.hpp"
#include "specturan/graph.hpp"
#include "specturan/graph6.hpp"
#include "specturan/motifs.hpp"
#include "specturan/poly.hpp"
#include "specturan/spectral.hpp"

namespace specturan {

enum filter_flag : unsigned {
  c3_free = 1u << 0,
  c4_free = 1u << 1,
  c4_plus_free = 1u << 2,
  c5_plus_free = 1u << 3,
  non_bipartite = 1u << 4,
  connected = 1u << 5,
};

inline const std::vector<std::pair<filter_flag, std::string_view>>& filter_names() {
  static const std::vector<std::pair<filter_flag, std::string_view>> names = {
      {c3_free, "c3free"},           {c4_free, "c4free"},           {c4_plus_free, "c4plusfree"},
      {c5_plus_free, "c5plusfree"},  {non_bipartite, "nonbipartite"}, {connected, "connected"},
  };
  return names;
}

struct enum_filter {
  std::size_t m = 0;
  unsigned flags = 0;

  bool has(filter_flag f) const { return (flags & f) != 0; }

  /// Comma-separated flag names, or "none".
  std::string flag_string() const {
    std::string s;
    for (const auto& [f, name] : filter_names())
      if (has(f)) s += (s.empty() ? "" : ",") + std::string(name);
    return s.empty() ? "none" : s;
  }

  static unsigned parse_flags(std::string_view text) {
    unsigned flags = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string_view tok = text.substr(pos, comma - pos);
      if (!tok.empty() && tok != "none") {
        bool known = false;
        for (const auto& [f, name] : filter_names())
          if (name == tok) {
            flags |= f;
            known = true;
          }
        if (!known) throw domain_error("unknown filter flag '" + std::string(tok) + "'");
      }
      pos = comma + 1;
    }
    return flags;
  }
};

/// Checks the subgraph-closed flags.
template <std::size_t W>
bool passes_forbidden(const basic_graph<W>& g, unsigned flags) {
  if ((flags & c3_free) && contains_cycle(g, 3)) return false;
  if ((flags & c4_free) && contains_cycle(g, 4)) return false;
  if ((flags & c4_plus_free) && contains_ct_plus(g, 4)) return false;
  if ((flags & c5_plus_free) && contains_ct_plus(g, 5)) return false;
  return true;
}

/// Full membership test for the filtered class (edge count and isolated vertices included).
template <std::size_t W>
bool passes(const basic_graph<W>& g, const enum_filter& f) {
  if (g.size() != f.m) return false;
  for (vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return false;
  if (!passes_forbidden(g, f.flags)) return false;
  if (f.has(non_bipartite) && is_bipartite(g)) return false;
  if (f.has(connected) && !is_connected(g)) return false;
  return true;
}

struct enum_options {
  std::size_t threads = 1;
  /// Above this m a request fails unless `allow_large` is set.
  std::size_t soft_cap = 14;
  bool allow_large = false;
  static constexpr std::size_t hard_cap = 18;
};

struct enumerated_graph {
  graph g;           // canonical form
  std::string cert;  // graph6 of `g`
};

namespace detail {

using edge_invariant = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

inline edge_invariant invariant_of(const graph& g, vertex a, vertex b) {
  const std::size_t da = g.degree(a);
  const std::size_t db = g.degree(b);
  std::size_t nsum = 0;
  g.neighbors(a).for_each([&](vertex w) { nsum += g.degree(w); });
  g.neighbors(b).for_each([&](vertex w) { nsum += g.degree(w); });
  return {std::max(da, db), std::min(da, db), g.neighbors(a).intersection_size(g.neighbors(b)), nsum};
}

/// Deletes edge ab and drops the vertices it isolates.
inline graph delete_edge(const graph& g, vertex a, vertex b) {
  graph h = g;
  h.remove_edge(a, b);
  return without_isolated(h);
}

/// C is kept if the added edge ab has maximal invariant and deleting C's
/// canonical edge reproduces the parent class.
inline std::optional<enumerated_graph> accept(const graph& child, vertex a, vertex b, const std::string& parent_cert) {
  const edge_invariant mine = invariant_of(child, a, b);
  std::vector<std::pair<vertex, vertex>> best;
  for (auto [u, v] : child.edges()) {
    const edge_invariant inv = invariant_of(child, u, v);
    if (inv > mine) return std::nullopt;
    if (inv == mine) best.emplace_back(u, v);
  }
  const std::vector<vertex> lab = canonical_labelling(child);
  std::vector<vertex> pos(child.order());
  for (std::size_t i = 0; i < lab.size(); ++i) pos[lab[i]] = static_cast<vertex>(i);
  // Canonical edge: among maximal-invariant edges, the lexicographically
  // largest (max position, min position) pair in the canonical labelling.
  auto key = [&](std::pair<vertex, vertex> e) {
    return std::make_pair(std::max(pos[e.first], pos[e.second]), std::min(pos[e.first], pos[e.second]));
  };
  const auto star = *std::max_element(best.begin(), best.end(),
                                      [&](auto x, auto y) { return key(x) < key(y); });
  if (star != std::make_pair(std::min(a, b), std::max(a, b)) &&
      certificate(delete_edge(child, star.first, star.second)) != parent_cert)
    return std::nullopt;
  graph canon = relabel(child, lab);
  std::string cert = graph6_encode(canon);
  return enumerated_graph{std::move(canon), std::move(cert)};
}

inline std::vector<enumerated_graph> children_of(const enumerated_graph& parent, unsigned prune_flags) {
  const graph& p = parent.g;
  const auto n = static_cast<vertex>(p.order());
  std::vector<enumerated_graph> out;
  std::set<std::string> seen;
  auto consider = [&](graph child, vertex a, vertex b) {
    child.add_edge(a, b);
    if (!passes_forbidden(child, prune_flags)) return;
    if (auto c = accept(child, a, b, parent.cert))
      if (seen.insert(c->cert).second) out.push_back(std::move(*c));
  };
  // Between existing vertices.
  for (vertex a = 0; a < n; ++a)
    for (vertex b = a + 1; b < n; ++b)
      if (!p.adjacent(a, b)) consider(p, a, b);
  // An existing vertex to a new one.
  if (n + 1 <= graph::max_vertices) {
    graph grown = p;
    grown.add_vertex();
    for (vertex a = 0; a < n; ++a) consider(grown, a, n);
  }
  // Two new vertices.
  if (n + 2 <= graph::max_vertices) {
    graph grown = p;
    grown.add_vertex();
    grown.add_vertex();
    consider(grown, n, n + 1);
  }
  return out;
}

/// Runs `work(i)` for i in [0, count) on `threads` workers.
inline void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& work) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

inline void check_caps(const enum_filter& f, const enum_options& opt) {
  if (f.m > enum_options::hard_cap)
    throw resource_error("m = " + std::to_string(f.m) + " exceeds the enumeration hard cap of " +
                         std::to_string(enum_options::hard_cap));
  if (f.m > opt.soft_cap && !opt.allow_large)
    throw resource_error("m = " + std::to_string(f.m) + " exceeds the soft cap of " + std::to_string(opt.soft_cap) +
                         "; raise it explicitly to proceed");
}

}  // namespace detail

/// All classes in the filtered family, sorted by certificate.
inline std::vector<enumerated_graph> enumerate_classes(const enum_filter& f, const enum_options& opt = {}) {
  detail::check_caps(f, opt);
  if (f.m == 0) return {};
  const unsigned prune = f.flags & (c3_free | c4_free | c4_plus_free | c5_plus_free);
  std::vector<enumerated_graph> level{{graph(0), graph6_encode(graph(0))}};
  for (std::size_t k = 0; k < f.m; ++k) {
    std::vector<std::vector<enumerated_graph>> parts(level.size());
    detail::parallel_for(level.size(), opt.threads,
                         [&](std::size_t i) { parts[i] = detail::children_of(level[i], prune); });
    std::vector<enumerated_graph> next;
    for (auto& part : parts)
      for (auto& c : part) next.push_back(std::move(c));
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.cert < b.cert; });
    level = std::move(next);
  }
  std::vector<enumerated_graph> out;
  for (auto& e : level) {
    if (f.has(non_bipartite) && is_bipartite(e.g)) continue;
    if (f.has(connected) && !is_connected(e.g)) continue;
    out.push_back(std::move(e));
  }
  return out;
}

/// Visits every class once, in certificate order, on the calling thread.
inline std::size_t enumerate(const enum_filter& f, const std::function<void(const enumerated_graph&)>& visit,
                             const enum_options& opt = {}) {
  const auto all = enumerate_classes(f, opt);
  for (const auto& e : all) visit(e);
  return all.size();
}

struct ranked_graph {
  enumerated_graph graph;
  spectral_result spectrum;
};

struct extremal_result {
  std::size_t count = 0;
  /// All classes attaining the maximum (certified ties).
  std::vector<ranked_graph> extremal;
  /// Next classes in decreasing order of rho, at most five.
  std::vector<ranked_graph> runners_up;
};

/// Class of maximum spectral radius under certified comparison.
inline extremal_result extremal_rho(const enum_filter& f, const enum_options& opt = {}, double tol = default_tol) {
  auto all = enumerate_classes(f, opt);
  if (all.empty()) throw empty_family_error("no graph with m = " + std::to_string(f.m) + " passes " + f.flag_string());
  std::vector<double> est(all.size());
  detail::parallel_for(all.size(), opt.threads, [&](std::size_t i) { est[i] = spectral_radius_estimate(all[i].g); });
  std::vector<std::size_t> order(all.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return est[a] > est[b]; });

  // Certify every class whose estimate is within 1e-8 of one of the first
  // six distinct values, then order them exactly.
  std::vector<ranked_graph> ranked;
  std::size_t distinct = 0;
  double last = 0.0;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const double e = est[order[idx]];
    if (idx == 0 || last - e > 1e-8) {
      if (++distinct > 6) break;
      last = e;
    }
    ranked.push_back({all[order[idx]], spectral_radius(all[order[idx]].g, tol)});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const ranked_graph& a, const ranked_graph& b) {
    const int c = compare(a.spectrum, b.spectrum);
    return c != 0 ? c > 0 : a.graph.cert < b.graph.cert;
  });

  extremal_result r;
  r.count = all.size();
  std::size_t i = 0;
  while (i < ranked.size() && (i == 0 || compare(ranked[i].spectrum, ranked[0].spectrum) == 0))
    r.extremal.push_back(ranked[i++]);
  for (; i < ranked.size() && r.runners_up.size() < 5; ++i) r.runners_up.push_back(ranked[i]);
  return r;
}

/// Classes whose characteristic polynomial is divisible by `p`.
inline std::vector<enumerated_graph> find_matching_graphs(const enum_filter& f, const int_poly& p,
                                                          const enum_options& opt = {}) {
  if (p.is_zero()) throw domain_error("cannot divide by the zero polynomial");
  if (p.degree() > static_cast<int>(2 * f.m)) return {};
  const auto all = enumerate_classes(f, opt);
  std::vector<char> hit(all.size(), 0);
  detail::parallel_for(all.size(), opt.threads, [&](std::size_t i) {
    const auto& g = all[i].g;
    if (static_cast<int>(g.order()) < p.degree()) return;
    hit[i] = char_poly(g).divisible_by(p);
  });
  std::vector<enumerated_graph> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (hit[i]) out.push_back(all[i]);
  return out;
}

/// Extremal class of an enumerated family as produced by `extremal_rho`,
/// in a form that can be stored and re-validated.
struct extremal_record {
  enum_filter filter;
  std::size_t count = 0;
  std::vector<std::string> certs;
  /// Exact endpoints of the certified bracket (lo, hi] of the maximum.
  std::string lo;
  std::string hi;
};

inline extremal_record make_record(const enum_filter& f, const extremal_result& r) {
  extremal_record rec;
  rec.filter = f;
  rec.count = r.count;
  for (const auto& e : r.extremal) rec.certs.push_back(e.graph.cert);
  rec.lo = r.extremal.front().spectrum.bracket.lo().str();
  rec.hi = r.extremal.front().spectrum.bracket.hi().str();
  return rec;
}

/// Re-checks a record: every certificate decodes to a member of the filtered
/// family, and its recomputed spectral radius lies in the stored bracket.
/// Throws hypothesis_error on any mismatch.
inline void validate_record(const extremal_record& rec) {
  if (rec.certs.empty()) throw hypothesis_error("extremal record lists no graph");
  rational lo;
  rational hi;
  try {
    lo = rational(rec.lo);
    hi = rational(rec.hi);
  } catch (const std::exception&) {
    throw hypothesis_error("extremal record has a malformed bracket");
  }
  for (const auto& cert : rec.certs) {
    graph g;
    try {
      g = graph6_decode(cert);
    } catch (const parse_error& e) {
      throw hypothesis_error(std::string("extremal record certificate does not decode: ") + e.what());
    }
    if (certificate(g) != cert) throw hypothesis_error("extremal record certificate " + cert + " is not canonical");
    if (!passes(g, rec.filter))
      throw hypothesis_error("graph " + cert + " is not in the family m = " + std::to_string(rec.filter.m) + ", " +
                             rec.filter.flag_string());
    const auto sp = spectral_radius(g);
    if (sp.bracket.hi() <= lo || hi <= sp.bracket.lo())
      throw hypothesis_error("spectral radius of " + cert + " lies outside the recorded bracket");
  }
}

}  // namespace specturan
