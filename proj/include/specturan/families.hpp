#pragma once

// Constructors for the named graph families.
//
// Labelling convention: hubs and centres first, then structured vertices
// (matched leaves, cycle vertices, the dominating clique), then pendants.
// Equitable partitions of the results are therefore positionally predictable.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specturan/errors.hpp"
#include "specturan/graph.hpp"

namespace specturan {

enum class family {
  path,                // Path(n): P_n
  cycle,               // Cycle(n): C_n
  star,                // Star(n): K_{1,n}
  complete_bipartite,  // CompleteBipartite(a,b): K_{a,b}
  snk,                 // Snk(n,k): S_n^k, K_{1,n-1} plus k disjoint edges among leaves
  sn_k,                // Sn_k(n,k): S_{n,k}, K_k joined to n-k independent vertices
  sn_k_minus,          // Sn_k_minus(n,k): S_{n,k} minus an edge at a degree-2 vertex
  ct_plus,             // CtPlus(t): C_t and C_3 sharing an edge
  sk2,                 // SK2(h): K_{2,h} with one edge subdivided
  c5_star_dot,         // C5StarDot(m): C_5 with one vertex identified with the centre of K_{1,m-5}
  sm_e,                // SmE(m): K_{1,m-1} with a pendant attached to a leaf
  g10,                 // G10(m): K_{1,m-2}, one edge u1u2 among leaves, pendant on u1
  g11,                 // G11(m): no graph matches its polynomial; construction always fails
  g12,                 // G12(m): as G11
  g11_candidate,       // G11Candidate(m): K_{1,m-4}, one leaf carrying a triangle and a pendant
  g12_candidate,       // G12Candidate(m): K_{1,m-3}, one leaf carrying a triangle
  g14,                 // G14(r,t): hub over K_{1,r} plus t pendants at the hub
};

struct family_info {
  family kind;
  std::string_view name;
  std::vector<std::string_view> params;
};

inline const std::vector<family_info>& family_table() {
  static const std::vector<family_info> table = {
      {family::path, "Path", {"n"}},
      {family::cycle, "Cycle", {"n"}},
      {family::star, "Star", {"n"}},
      {family::complete_bipartite, "CompleteBipartite", {"a", "b"}},
      {family::snk, "Snk", {"n", "k"}},
      {family::sn_k, "Sn_k", {"n", "k"}},
      {family::sn_k_minus, "Sn_k_minus", {"n", "k"}},
      {family::ct_plus, "CtPlus", {"t"}},
      {family::sk2, "SK2", {"h"}},
      {family::c5_star_dot, "C5StarDot", {"m"}},
      {family::sm_e, "SmE", {"m"}},
      {family::g10, "G10", {"m"}},
      {family::g11, "G11", {"m"}},
      {family::g12, "G12", {"m"}},
      {family::g11_candidate, "G11Candidate", {"m"}},
      {family::g12_candidate, "G12Candidate", {"m"}},
      {family::g14, "G14", {"r", "t"}},
  };
  return table;
}

inline const family_info& info(family f) {
  for (const auto& e : family_table())
    if (e.kind == f) return e;
  throw domain_error("unknown family");
}

inline std::optional<family> parse_family(std::string_view name) {
  for (const auto& e : family_table())
    if (e.name == name) return e.kind;
  return std::nullopt;
}

/// Family name plus its integer parameters in the order of `family_info::params`.
struct family_spec {
  family kind = family::path;
  std::vector<std::int64_t> params;

  std::int64_t param(std::size_t i) const {
    if (i >= params.size())
      throw construction_error(std::string(info(kind).name) + ": missing parameter '" +
                               std::string(info(kind).params.at(i)) + "'");
    return params[i];
  }
  std::string to_string() const {
    std::string s(info(kind).name);
    s += "(";
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s + ")";
  }

  static family_spec path(std::int64_t n) { return {family::path, {n}}; }
  static family_spec cycle(std::int64_t n) { return {family::cycle, {n}}; }
  static family_spec star(std::int64_t n) { return {family::star, {n}}; }
  static family_spec complete_bipartite(std::int64_t a, std::int64_t b) { return {family::complete_bipartite, {a, b}}; }
  static family_spec snk(std::int64_t n, std::int64_t k) { return {family::snk, {n, k}}; }
  static family_spec sn_k(std::int64_t n, std::int64_t k) { return {family::sn_k, {n, k}}; }
  static family_spec sn_k_minus(std::int64_t n, std::int64_t k) { return {family::sn_k_minus, {n, k}}; }
  static family_spec ct_plus(std::int64_t t) { return {family::ct_plus, {t}}; }
  static family_spec sk2(std::int64_t h) { return {family::sk2, {h}}; }
  static family_spec c5_star_dot(std::int64_t m) { return {family::c5_star_dot, {m}}; }
  static family_spec sm_e(std::int64_t m) { return {family::sm_e, {m}}; }
  static family_spec g10(std::int64_t m) { return {family::g10, {m}}; }
  static family_spec g11(std::int64_t m) { return {family::g11, {m}}; }
  static family_spec g12(std::int64_t m) { return {family::g12, {m}}; }
  static family_spec g11_candidate(std::int64_t m) { return {family::g11_candidate, {m}}; }
  static family_spec g12_candidate(std::int64_t m) { return {family::g12_candidate, {m}}; }
  static family_spec g14(std::int64_t r, std::int64_t t) { return {family::g14, {r, t}}; }
};

namespace detail {

inline void require(bool ok, const family_spec& s, const std::string& constraint) {
  if (!ok) throw construction_error(s.to_string() + ": requires " + constraint);
}

}  // namespace detail

/// Edge count of a valid instance, from its closed form.
inline std::int64_t expected_edges(const family_spec& s) {
  const auto p = [&](std::size_t i) { return s.param(i); };
  switch (s.kind) {
    case family::path: return p(0) - 1;
    case family::cycle: return p(0);
    case family::star: return p(0);
    case family::complete_bipartite: return p(0) * p(1);
    case family::snk: return p(0) - 1 + p(1);
    case family::sn_k: return p(1) * (p(1) - 1) / 2 + p(1) * (p(0) - p(1));
    case family::sn_k_minus: return p(1) * (p(1) - 1) / 2 + p(1) * (p(0) - p(1)) - 1;
    case family::ct_plus: return p(0) + 2;
    case family::sk2: return 2 * p(0) + 1;
    case family::c5_star_dot:
    case family::sm_e:
    case family::g10:
    case family::g11:
    case family::g12:
    case family::g11_candidate:
    case family::g12_candidate: return p(0);
    case family::g14: return 2 * p(0) + p(1) + 1;
  }
  return 0;
}

/// Vertex count of a valid instance.
inline std::int64_t expected_order(const family_spec& s) {
  const auto p = [&](std::size_t i) { return s.param(i); };
  switch (s.kind) {
    case family::path:
    case family::cycle: return p(0);
    case family::star: return p(0) + 1;
    case family::complete_bipartite: return p(0) + p(1);
    case family::snk:
    case family::sn_k:
    case family::sn_k_minus: return p(0);
    case family::ct_plus: return p(0) + 1;
    case family::sk2: return p(0) + 3;
    case family::c5_star_dot: return p(0);
    case family::sm_e: return p(0) + 1;
    case family::g10: return p(0);
    case family::g11:
    case family::g12:
    case family::g11_candidate:
    case family::g12_candidate: return p(0);
    case family::g14: return p(0) + p(1) + 2;
  }
  return 0;
}

template <std::size_t W = 4>
basic_graph<W> build(const family_spec& s);

/// G_10: centre 0, leaves 1..m-2, edge 1-2 between two leaves, pendant m-1 on vertex 1.
template <std::size_t W = 4>
basic_graph<W> build_g10(std::int64_t m) {
  const auto s = family_spec::g10(m);
  detail::require(m >= 6, s, "m >= 6");
  detail::require(static_cast<std::size_t>(m) <= basic_graph<W>::max_vertices, s, "m <= vertex capacity");
  basic_graph<W> g(static_cast<std::size_t>(m));
  for (vertex v = 1; v + 1 < m; ++v) g.add_edge(0, v);
  g.add_edge(1, 2);
  g.add_edge(1, static_cast<vertex>(m - 1));
  return g;
}

/// C_5 on 0..4 (u* = 0) with leaves 5..m-1 on vertex 0.
template <std::size_t W = 4>
basic_graph<W> build_c5_dot_star(std::int64_t m) {
  const auto s = family_spec::c5_star_dot(m);
  detail::require(m >= 6, s, "m >= 6");
  detail::require(static_cast<std::size_t>(m) <= basic_graph<W>::max_vertices, s, "m <= vertex capacity");
  basic_graph<W> g(static_cast<std::size_t>(m));
  for (vertex i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (vertex v = 5; v < m; ++v) g.add_edge(0, v);
  return g;
}

/// Outcome of the search for G_11 / G_12: graphs with m edges, e(N_1(u*)) = 0,
/// e(W) = 1, C_4-free and non-bipartite whose characteristic polynomial is
/// divisible by the printed h_2 / h_3. The search (all graphs, m = 7..12) finds
/// none, so these constructors always fail and name the structural candidates.
inline std::string g11_g12_report(std::string_view which) {
  return std::string(which) +
         ": no graph with e(N1(u*)) = 0, e(W) = 1, C4-free and non-bipartite has a characteristic polynomial "
         "divisible by the printed polynomial (exhaustive search over all graphs with m = 7..12 edges found no "
         "match at all); the same subcase yields only C5StarDot, G11Candidate (quotient x^5 - x^4 - (m-1)x^3 + "
         "(m-3)x^2 + (3m-15)x - (m-5)) and G12Candidate (quotient x^4 - x^3 - (m-1)x^2 + (m-3)x + 2m-8) at the "
         "top of the class";
}

template <std::size_t W = 4>
basic_graph<W> build_g11(std::int64_t m) {
  throw construction_error(family_spec::g11(m).to_string() + ": " + g11_g12_report("G11"));
}

template <std::size_t W = 4>
basic_graph<W> build_g12(std::int64_t m) {
  throw construction_error(family_spec::g12(m).to_string() + ": " + g11_g12_report("G12"));
}

/// Hub 0 with leaves 1..m-4; leaf 1 also carries the triangle 1,m-3,m-2 and the pendant m-1.
template <std::size_t W = 4>
basic_graph<W> build_g11_candidate(std::int64_t m) {
  const auto s = family_spec::g11_candidate(m);
  detail::require(m >= 6, s, "m >= 6");
  detail::require(static_cast<std::size_t>(m) <= basic_graph<W>::max_vertices, s, "m <= vertex capacity");
  basic_graph<W> g(static_cast<std::size_t>(m));
  const auto n = static_cast<vertex>(m);
  for (vertex v = 1; v <= n - 4; ++v) g.add_edge(0, v);
  g.add_edge(1, n - 3);
  g.add_edge(1, n - 2);
  g.add_edge(n - 3, n - 2);
  g.add_edge(1, n - 1);
  return g;
}

/// Hub 0 with leaves 1..m-3; leaf 1 also carries the triangle 1,m-2,m-1.
template <std::size_t W = 4>
basic_graph<W> build_g12_candidate(std::int64_t m) {
  const auto s = family_spec::g12_candidate(m);
  detail::require(m >= 6, s, "m >= 6");
  detail::require(static_cast<std::size_t>(m) <= basic_graph<W>::max_vertices, s, "m <= vertex capacity");
  basic_graph<W> g(static_cast<std::size_t>(m));
  const auto n = static_cast<vertex>(m);
  for (vertex v = 1; v <= n - 3; ++v) g.add_edge(0, v);
  g.add_edge(1, n - 2);
  g.add_edge(1, n - 1);
  g.add_edge(n - 2, n - 1);
  return g;
}

template <std::size_t W>
basic_graph<W> build(const family_spec& s) {
  const auto p = [&](std::size_t i) { return s.param(i); };
  const std::size_t expected_params = info(s.kind).params.size();
  detail::require(s.params.size() == expected_params, s,
                  std::to_string(expected_params) + " parameter(s)");
  if (s.kind == family::g10) return build_g10<W>(p(0));
  if (s.kind == family::c5_star_dot) return build_c5_dot_star<W>(p(0));
  if (s.kind == family::g11) return build_g11<W>(p(0));
  if (s.kind == family::g12) return build_g12<W>(p(0));
  if (s.kind == family::g11_candidate) return build_g11_candidate<W>(p(0));
  if (s.kind == family::g12_candidate) return build_g12_candidate<W>(p(0));

  switch (s.kind) {
    case family::path: detail::require(p(0) >= 1, s, "n >= 1"); break;
    case family::cycle: detail::require(p(0) >= 3, s, "n >= 3"); break;
    case family::star: detail::require(p(0) >= 1, s, "n >= 1"); break;
    case family::complete_bipartite: detail::require(p(0) >= 1 && p(1) >= 1, s, "a >= 1 and b >= 1"); break;
    case family::snk:
      detail::require(p(0) >= 2, s, "n >= 2");
      detail::require(p(1) >= 0 && 2 * p(1) <= p(0) - 1, s, "0 <= k and 2k <= n - 1");
      break;
    case family::sn_k: detail::require(p(1) >= 1 && p(0) >= p(1) + 1, s, "k >= 1 and n >= k + 1"); break;
    case family::sn_k_minus:
      // Outer vertices of S_{n,k} have degree k, so only k = 2 has a degree-2 vertex to cut at.
      detail::require(p(1) == 2, s, "k = 2 (the only k with a vertex of degree two)");
      detail::require(p(0) >= p(1) + 2, s, "n >= k + 2");
      break;
    case family::ct_plus: detail::require(p(0) >= 3, s, "t >= 3"); break;
    case family::sk2: detail::require(p(0) >= 2, s, "h >= 2"); break;
    case family::sm_e: detail::require(p(0) >= 2, s, "m >= 2"); break;
    case family::g14: detail::require(p(0) >= 1 && p(1) >= 0, s, "r >= 1 and t >= 0"); break;
    default: break;
  }
  const std::int64_t n = expected_order(s);
  detail::require(n >= 0 && static_cast<std::size_t>(n) <= basic_graph<W>::max_vertices, s,
                  "order <= vertex capacity " + std::to_string(basic_graph<W>::max_vertices));
  basic_graph<W> g(static_cast<std::size_t>(n));
  const auto N = static_cast<vertex>(n);
  switch (s.kind) {
    case family::path:
      for (vertex v = 0; v + 1 < N; ++v) g.add_edge(v, v + 1);
      break;
    case family::cycle:
      for (vertex v = 0; v < N; ++v) g.add_edge(v, (v + 1) % N);
      break;
    case family::star:
      for (vertex v = 1; v < N; ++v) g.add_edge(0, v);
      break;
    case family::complete_bipartite:
      for (vertex a = 0; a < p(0); ++a)
        for (vertex b = static_cast<vertex>(p(0)); b < N; ++b) g.add_edge(a, b);
      break;
    case family::snk:
      for (vertex v = 1; v < N; ++v) g.add_edge(0, v);
      for (vertex i = 0; i < p(1); ++i) g.add_edge(2 * i + 1, 2 * i + 2);
      break;
    case family::sn_k:
    case family::sn_k_minus: {
      const auto k = static_cast<vertex>(p(1));
      for (vertex a = 0; a < k; ++a) {
        for (vertex b = a + 1; b < k; ++b) g.add_edge(a, b);
        for (vertex o = k; o < N; ++o) g.add_edge(a, o);
      }
      if (s.kind == family::sn_k_minus) g.remove_edge(1, N - 1);
      break;
    }
    case family::ct_plus:
      for (vertex v = 0; v + 1 < N; ++v) g.add_edge(v, (v + 1) % (N - 1));
      g.add_edge(N - 1, 0);
      g.add_edge(N - 1, 1);
      break;
    case family::sk2: {
      // Parts {0,1} and {2..h+1}; the edge 1-(h+1) is subdivided by h+2.
      const auto h = static_cast<vertex>(p(0));
      for (vertex b = 2; b <= h + 1; ++b) {
        g.add_edge(0, b);
        if (b != h + 1) g.add_edge(1, b);
      }
      g.add_edge(1, h + 2);
      g.add_edge(h + 2, h + 1);
      break;
    }
    case family::sm_e:
      for (vertex v = 1; v < N - 1; ++v) g.add_edge(0, v);
      g.add_edge(N - 2, N - 1);
      break;
    case family::g14: {
      // Hub 0, star centre 1, star leaves 2..r+1, pendants r+2..r+t+1 on the hub.
      const auto r = static_cast<vertex>(p(0));
      for (vertex v = 1; v < N; ++v) g.add_edge(0, v);
      for (vertex l = 2; l <= r + 1; ++l) g.add_edge(1, l);
      break;
    }
    default: break;
  }
  return g;
}

}  // namespace specturan

