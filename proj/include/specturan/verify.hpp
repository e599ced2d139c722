#pragma once

// Claim-by-claim verification suites. Each suite returns a report whose
// claims end in one of three states: holds, fails, or out-of-hypothesis
// (the statement's preconditions are not met, so nothing is asserted; the
// observation is still recorded). Every failing claim names its witness
// graph in graph6 together with a certified spectral-radius bracket.

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "specturan/bounds.hpp"
#include "specturan/canonical.hpp"
#include "specturan/enumerate.hpp"
#include "specturan/families.hpp"
#include "specturan/graph.hpp"
#include "specturan/motifs.hpp"
#include "specturan/spectral.hpp"

namespace specturan {

using json = nlohmann::ordered_json;

enum class claim_status { holds, fails, out_of_hypothesis };

inline std::string_view to_string(claim_status s) {
  switch (s) {
    case claim_status::holds: return "holds";
    case claim_status::fails: return "fails";
    case claim_status::out_of_hypothesis: return "out-of-hypothesis";
  }
  return "?";
}

struct claim {
  std::string statement;
  claim_status status = claim_status::holds;
  std::vector<std::string> witnesses;
  json evidence = json::object();
};

struct verification_report {
  std::string suite;
  json params = json::object();
  std::vector<claim> claims;
  json warnings = json::array();
  json observations = json::array();

  bool has_failures() const {
    return std::any_of(claims.begin(), claims.end(), [](const claim& c) { return c.status == claim_status::fails; });
  }
  std::size_t count(claim_status s) const {
    return static_cast<std::size_t>(
        std::count_if(claims.begin(), claims.end(), [&](const claim& c) { return c.status == s; }));
  }
  void append(const verification_report& other) {
    claims.insert(claims.end(), other.claims.begin(), other.claims.end());
    for (const auto& w : other.warnings)
      if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
    for (const auto& o : other.observations) observations.push_back(o);
  }

  json to_json() const {
    json j;
    j["suite"] = suite;
    j["params"] = params;
    j["claims"] = json::array();
    for (const auto& c : claims) {
      json cj;
      cj["statement"] = c.statement;
      cj["status"] = std::string(to_string(c.status));
      cj["witnesses"] = c.witnesses;
      cj["evidence"] = c.evidence;
      j["claims"].push_back(cj);
    }
    j["warnings"] = warnings;
    j["observations"] = observations;
    j["summary"] = {{"holds", count(claim_status::holds)},
                    {"fails", count(claim_status::fails)},
                    {"out_of_hypothesis", count(claim_status::out_of_hypothesis)}};
    return j;
  }
};

inline json bracket_json(const certified_root& r) {
  return {{"lo", r.lo().convert_to<double>()},
          {"hi", r.hi().convert_to<double>()},
          {"lo_exact", r.lo().str()},
          {"hi_exact", r.hi().str()},
          {"poly", r.poly().to_string()}};
}

inline json warnings_json(const std::vector<poly_warning>& ws) {
  json a = json::array();
  for (const auto& w : ws)
    a.push_back({{"subject", w.subject}, {"printed", w.printed}, {"recomputed", w.recomputed}, {"note", w.note}});
  return a;
}

namespace detail {

inline claim decide(std::string statement, bool in_hypothesis, bool ok) {
  claim c;
  c.statement = std::move(statement);
  c.status = !in_hypothesis ? claim_status::out_of_hypothesis : ok ? claim_status::holds : claim_status::fails;
  c.evidence["conclusion_observed"] = ok;
  return c;
}

template <std::size_t W>
void add_witness(claim& c, const basic_graph<W>& g, const spectral_result& s) {
  c.witnesses.push_back(graph6_encode(g));
  c.evidence["rho_" + std::to_string(c.witnesses.size() - 1)] = bracket_json(s.bracket);
}

inline certified_root root_of(const int_poly& p, double tol = default_tol) { return largest_root(p, tol).bracket; }

}  // namespace detail

inline json record_to_json(const extremal_record& rec) {
  return {{"m", rec.filter.m},
          {"filter", rec.filter.flag_string()},
          {"count", rec.count},
          {"extremal", rec.certs},
          {"rho_bracket", {{"lo", rec.lo}, {"hi", rec.hi}}}};
}

/// Inverse of record_to_json. The result is not yet trusted; pass it through validate_record.
inline extremal_record record_from_json(const json& j) {
  try {
    extremal_record rec;
    rec.filter.m = j.at("m").get<std::size_t>();
    const auto f = j.at("filter").get<std::string>();
    rec.filter.flags = f == "none" ? 0u : enum_filter::parse_flags(f);
    rec.count = j.at("count").get<std::size_t>();
    rec.certs = j.at("extremal").get<std::vector<std::string>>();
    rec.lo = j.at("rho_bracket").at("lo").get<std::string>();
    rec.hi = j.at("rho_bracket").at("hi").get<std::string>();
    return rec;
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed extremal record: ") + e.what(), 0);
  }
}

// ---------------------------------------------------------------------------
// Naming observed graphs.

/// Family instances with m edges whose certificate equals that of g, e.g. "Sn_k(6,2)".
template <std::size_t W>
std::vector<std::string> identify_family(const basic_graph<W>& g) {
  const auto m = static_cast<std::int64_t>(g.size());
  const std::string cert = certificate(convert<4>(g));
  std::vector<family_spec> specs = {family_spec::star(m),         family_spec::path(m + 1),
                                    family_spec::cycle(m),        family_spec::ct_plus(m - 2),
                                    family_spec::c5_star_dot(m),  family_spec::sm_e(m),
                                    family_spec::g10(m),          family_spec::g11_candidate(m),
                                    family_spec::g12_candidate(m)};
  for (std::int64_t a = 1; a * a <= m; ++a)
    if (m % a == 0) specs.push_back(family_spec::complete_bipartite(a, m / a));
  for (std::int64_t k = 1; 3 * k <= m; ++k) specs.push_back(family_spec::snk(m + 1 - k, k));
  for (std::int64_t k = 2; k * (k - 1) / 2 + k <= m; ++k)
    if ((m - k * (k - 1) / 2) % k == 0) specs.push_back(family_spec::sn_k((m - k * (k - 1) / 2) / k + k, k));
  if ((m + 3) % 2 == 0) specs.push_back(family_spec::sn_k_minus((m + 3) / 2, 2));
  if ((m - 1) % 2 == 0) specs.push_back(family_spec::sk2((m - 1) / 2));
  for (std::int64_t r = 1; 2 * r + 1 <= m; ++r) specs.push_back(family_spec::g14(r, m - 2 * r - 1));
  std::vector<std::string> names;
  for (const auto& s : specs) {
    try {
      const auto h = build<4>(s);
      if (h.order() == g.order() && h.size() == g.size() && certificate(h) == cert) names.push_back(s.to_string());
    } catch (const construction_error&) {
    }
  }
  return names;
}

// ---------------------------------------------------------------------------
// Perron identities.

struct perron_residuals {
  double eq1 = 0.0;
  double eq2 = 0.0;
  double eq3 = 0.0;
  double max() const { return std::max({eq1, eq2, eq3}); }
};

/// Residuals of the three Perron-vector identities at u.
template <std::size_t W>
perron_residuals check_perron_identities(const basic_graph<W>& g, vertex u, const spectral_result& sp) {
  const auto& x = sp.perron;
  const double rho = sp.rho;
  const auto st = strata(g, u);
  const auto d = static_cast<double>(g.degree(u));
  double sum_n = 0.0;
  st.open.for_each([&](vertex v) { sum_n += x[v]; });
  double plus2 = 0.0;
  double plus3 = 0.0;
  st.non_isolated().for_each([&](vertex v) {
    const auto dn = static_cast<double>(degree_in(g, v, st.open));
    plus2 += dn * x[v];
    plus3 += (dn - 1) * x[v];
  });
  double second = 0.0;
  st.second.for_each([&](vertex w) { second += static_cast<double>(degree_in(g, w, st.open)) * x[w]; });
  double n0 = 0.0;
  st.n0().for_each([&](vertex v) { n0 += x[v]; });
  perron_residuals r;
  r.eq1 = std::fabs(rho * x[u] - sum_n);
  r.eq2 = std::fabs(rho * rho * x[u] - (d * x[u] + plus2 + second));
  r.eq3 = std::fabs((rho * rho - rho) * x[u] - (d * x[u] + plus3 + second - n0));
  return r;
}

template <std::size_t W>
perron_residuals check_perron_identities(const basic_graph<W>& g, vertex u) {
  if (!is_connected(g)) throw hypothesis_error("Perron identities need a connected graph");
  g.check(u);
  return check_perron_identities(g, u, spectral_radius(g));
}

// ---------------------------------------------------------------------------
// zeta(L) and the quantities around the neighbourhood of u*.

struct zeta_value {
  std::vector<vertex> component;
  double value = 0.0;
};

/// zeta(L) = sum over v in L of (d_L(v) - 1) x_v, for each component L of G[N_+(u)].
template <std::size_t W>
std::vector<zeta_value> zeta_components(const basic_graph<W>& g, vertex u, const std::vector<double>& x) {
  const auto st = strata(g, u);
  std::vector<vertex> labels;
  const auto h = induced_subgraph(g, st.non_isolated(), &labels);
  std::vector<zeta_value> out;
  for (const auto& comp : components(h)) {
    zeta_value z;
    comp.for_each([&](vertex v) {
      z.component.push_back(labels[v]);
      z.value += (static_cast<double>(h.neighbors(v).intersection_size(comp)) - 1.0) * x[labels[v]];
    });
    out.push_back(std::move(z));
  }
  return out;
}

/// sum over v in N_+(u) of (d_{N(u)}(v) - 1) x_v
template <std::size_t W>
double zeta_total(const basic_graph<W>& g, vertex u, const std::vector<double>& x) {
  const auto st = strata(g, u);
  double s = 0.0;
  st.non_isolated().for_each(
      [&](vertex v) { s += (static_cast<double>(degree_in(g, v, st.open)) - 1.0) * x[v]; });
  return s;
}

/// The four quantities of the e(W) chain at u:
/// e(W) >= 1/2 sum_{N^2} d_W >= 1/2 |N^2| >= 1/2 sum_{N_1} d_W.
struct eq5_chain {
  double e_w = 0;
  double half_sum_second = 0;
  double half_second = 0;
  double half_sum_n1 = 0;
  /// The middle step needs every vertex of N^2 to have a neighbour in W.
  bool second_has_w_neighbours = true;
  bool holds() const { return e_w >= half_sum_second && half_sum_second >= half_second && half_second >= half_sum_n1; }
  bool outer_holds() const { return e_w >= half_sum_n1; }
};

template <std::size_t W>
eq5_chain eq5_quantities(const basic_graph<W>& g, vertex u) {
  const auto st = strata(g, u);
  eq5_chain c;
  c.e_w = static_cast<double>(edge_count(g, st.far));
  st.second.for_each([&](vertex w) {
    const auto dw = degree_in(g, w, st.far);
    c.half_sum_second += static_cast<double>(dw) / 2;
    if (dw == 0) c.second_has_w_neighbours = false;
  });
  c.half_second = static_cast<double>(st.second.size()) / 2;
  st.n1().for_each([&](vertex v) { c.half_sum_n1 += static_cast<double>(degree_in(g, v, st.far)) / 2; });
  return c;
}

// ---------------------------------------------------------------------------
// Single-graph claims.

/// rho^2 <= m - (2/3)(e(N_1(u*)) + e(W)) for connected C_4-free graphs with rho >= 7.
template <std::size_t W>
claim check_eq8(const basic_graph<W>& g, double tol = default_tol) {
  const auto sp = spectral_radius(g, tol);
  const bool connected_ok = is_connected(g);
  const bool c4 = contains_cycle(g, 4).has_value();
  const bool big = compare(sp.bracket, detail::root_of(int_poly::descending({1, -7}))) >= 0;
  const auto st = strata(g, sp.ustar);
  const auto e1 = static_cast<std::int64_t>(edge_count(g, st.n1()));
  const auto ew = static_cast<std::int64_t>(edge_count(g, st.far));
  const auto m = static_cast<std::int64_t>(g.size());
  // 3 rho^2 <= 3m - 2(e1 + ew)  <=>  rho <= largest root of 3x^2 - (3m - 2(e1 + ew)).
  const std::int64_t rhs3 = 3 * m - 2 * (e1 + ew);
  bool ok = false;
  if (rhs3 >= 0) ok = compare(sp.bracket, detail::root_of(int_poly::descending({3, 0, -rhs3}))) <= 0;
  claim c = detail::decide("rho^2 <= m - (2/3)(e(N1(u*)) + e(W))", connected_ok && !c4 && big, ok);
  c.evidence["rho"] = sp.rho;
  c.evidence["rho_squared"] = sp.rho * sp.rho;
  c.evidence["rhs"] = static_cast<double>(rhs3) / 3.0;
  c.evidence["e_n1"] = e1;
  c.evidence["e_w"] = ew;
  c.evidence["ustar"] = sp.ustar;
  c.evidence["hypothesis"] = {{"connected", connected_ok}, {"c4_free", !c4}, {"rho_at_least_7", big}};
  if (c.status == claim_status::fails) detail::add_witness(c, g, sp);
  return c;
}

/// The five e(W) / zeta inequalities at the extremal vertex. `s` defaults to all vertices
/// of N_+(u*) with x_v < (1 - beta) x_{u*}.
template <std::size_t W>
std::vector<claim> check_lemma44(const basic_graph<W>& g, double beta, std::optional<vertex_set<W>> s = {},
                                 double tol = default_tol) {
  if (!(beta > 0 && beta < 1)) throw domain_error("beta must lie in (0, 1)");
  const auto sp = spectral_radius(g, tol);
  const auto m = static_cast<std::int64_t>(g.size());
  const bool connected_ok = is_connected(g);
  const bool above = m >= 2 && compare(sp.bracket, bound::golden45(m).exact(tol)) > 0;
  const bool hyp = connected_ok && above;
  const auto& x = sp.perron;
  const vertex u = sp.ustar;
  const auto st = strata(g, u);
  const auto n_plus = st.non_isolated();
  const double ew = static_cast<double>(edge_count(g, st.far));
  const double en = static_cast<double>(edge_count(g, st.open));
  const double base = en - static_cast<double>(n_plus.size()) + 1.5;
  const double small = (1 - beta) * x[u];
  std::vector<claim> out;
  auto hyp_json = json{{"connected", connected_ok}, {"rho_above_golden45", above}};

  {
    const double lhs = zeta_total(g, u, x);
    const double rhs = (ew + en - 1.5) * x[u];
    claim c = detail::decide("zeta: sum_{N+}(d_N(v)-1)x_v > (e(W)+e(N(u*))-3/2) x_u*", hyp, lhs > rhs);
    c.evidence["lhs"] = lhs;
    c.evidence["rhs"] = rhs;
    c.evidence["hypothesis"] = hyp_json;
    out.push_back(c);
  }
  {
    claim c = detail::decide("e(W): e(W) < e(N(u*)) - |N+(u*)| + 3/2", hyp, ew < base);
    c.evidence["e_w"] = ew;
    c.evidence["rhs"] = base;
    c.evidence["hypothesis"] = hyp_json;
    out.push_back(c);
  }
  {
    std::vector<vertex> vs;
    st.second.for_each([&](vertex v) {
      if (x[v] < small) vs.push_back(v);
    });
    bool ok = true;
    json per = json::array();
    for (vertex v : vs) {
      const double rhs = base - beta * static_cast<double>(degree_in(g, v, st.open));
      ok = ok && ew < rhs;
      per.push_back({{"v", v}, {"rhs", rhs}});
    }
    claim c = detail::decide("e(W) on N^2: e(W) < ... - beta d_N(v) for v in N^2(u*) with x_v < (1-beta)x_u*",
                             hyp && !vs.empty(), ok);
    c.evidence["vertices"] = per;
    c.evidence["e_w"] = ew;
    out.push_back(c);
  }
  {
    std::vector<vertex> vs;
    n_plus.for_each([&](vertex v) {
      if (x[v] < small) vs.push_back(v);
    });
    bool ok = true;
    json per = json::array();
    for (vertex v : vs) {
      const double rhs = base - beta * (static_cast<double>(degree_in(g, v, st.open)) - 1.0);
      ok = ok && ew < rhs;
      per.push_back({{"v", v}, {"rhs", rhs}});
    }
    claim c = detail::decide("e(W) on N+: e(W) < ... - beta (d_N(v)-1) for v in N+(u*) with x_v < (1-beta)x_u*",
                             hyp && !vs.empty(), ok);
    c.evidence["vertices"] = per;
    c.evidence["e_w"] = ew;
    out.push_back(c);
  }
  {
    vertex_set<W> set;
    if (s) {
      set = *s;
    } else {
      n_plus.for_each([&](vertex v) {
        if (x[v] < small) set.insert(v);
      });
    }
    bool valid = set.subset_of(n_plus) && !set.empty();
    set.for_each([&](vertex v) { valid = valid && x[v] < small; });
    double sum = 0.0;
    set.for_each([&](vertex v) { sum += static_cast<double>(degree_in(g, v, st.open)) - 1.0; });
    const double rhs = base - beta * sum;
    claim c = detail::decide("e(W) on S: e(W) < ... - beta sum_{v in S}(d_N(v)-1)", hyp && valid, ew < rhs);
    c.evidence["set"] = set.to_vector();
    c.evidence["rhs"] = rhs;
    c.evidence["e_w"] = ew;
    out.push_back(c);
  }
  for (auto& c : out) {
    c.evidence["beta"] = beta;
    if (c.status == claim_status::fails) detail::add_witness(c, g, sp);
  }
  return out;
}

/// Structural conclusions for an extremal graph whose class forbids F.
/// (iii) is asserted only when F is C_4-free and the class is exactly G(m, F).
inline std::vector<claim> check_lemma41(const extremal_record& rec) {
  validate_record(rec);
  const unsigned forb = rec.filter.flags & (c3_free | c4_free | c4_plus_free | c5_plus_free);
  const bool single = forb != 0 && (forb & (forb - 1)) == 0;
  // C_3, C_4, C_4^+, C_5^+ are all 2-connected.
  const bool two_connected = single;
  const bool f_c4_free = forb == c3_free || forb == c5_plus_free;
  const bool plain_class = !rec.filter.has(non_bipartite);
  std::vector<claim> out;
  for (const auto& cert : rec.certs) {
    const graph g = graph6_decode(cert);
    const auto sp = spectral_radius(g);
    const auto st = strata(g, sp.ustar);
    {
      claim c = detail::decide("(i) the extremal graph is connected", two_connected, is_connected(g));
      c.witnesses.push_back(cert);
      out.push_back(c);
    }
    {
      auto cuts = cut_vertices(g);
      cuts.erase(sp.ustar);
      bool deg_ok = true;
      st.far.for_each([&](vertex w) { deg_ok = deg_ok && g.degree(w) >= 2; });
      claim c = detail::decide("(ii) no cut vertex outside u*, and d(w) >= 2 on W", two_connected,
                               cuts.empty() && deg_ok);
      c.evidence["cut_vertices_outside_ustar"] = cuts.to_vector();
      c.evidence["w_min_degree_ok"] = deg_ok;
      c.evidence["ustar"] = sp.ustar;
      c.witnesses.push_back(cert);
      out.push_back(c);
    }
    {
      bool ok = true;
      for (vertex a = 0; a < g.order(); ++a)
        for (vertex b = a + 1; b < g.order(); ++b)
          if (g.degree(a) == 2 && g.degree(b) == 2 && !g.adjacent(a, b) && !(g.neighbors(a) == g.neighbors(b)))
            ok = false;
      claim c = detail::decide("(iii) non-adjacent degree-2 vertices have equal neighbourhoods",
                               two_connected && f_c4_free && plain_class, ok);
      // A conclusion that holds is reported as such even outside the F-is-C4-free case.
      if (ok) c.status = claim_status::holds;
      c.witnesses.push_back(cert);
      out.push_back(c);
    }
  }
  for (auto& c : out) {
    c.evidence["m"] = rec.filter.m;
    c.evidence["filter"] = rec.filter.flag_string();
  }
  return out;
}

/// e(W) = 0, W empty, and G[N_+(u*)] a single star K_{1,r} with r >= 3.
/// `in_hypothesis` is decided by the caller (even m >= 74, C5+-free extremal, rho above Golden45).
template <std::size_t W>
std::vector<claim> lemma46_claims(const basic_graph<W>& g, bool in_hypothesis) {
  const auto sp = spectral_radius(g);
  const auto st = strata(g, sp.ustar);
  std::vector<claim> out;
  out.push_back(detail::decide("e(W) = 0", in_hypothesis, edge_count(g, st.far) == 0));
  out.push_back(detail::decide("W is empty", in_hypothesis, st.far.empty()));
  std::vector<vertex> labels;
  const auto h = induced_subgraph(g, st.non_isolated(), &labels);
  const auto comps = components(h);
  bool one_star = false;
  std::string shape = "none";
  if (comps.size() == 1) {
    const auto l = induced_subgraph(h, comps[0]);
    const auto cls = classify_component(l);
    shape = cls.to_string();
    one_star = cls.shape == component_shape::star && cls.a >= 3;
  }
  claim c = detail::decide("G[N+(u*)] is a single star K_{1,r}, r >= 3", in_hypothesis, one_star);
  c.evidence["components"] = comps.size();
  c.evidence["shape"] = shape;
  out.push_back(c);
  for (auto& cl : out) {
    cl.evidence["ustar"] = sp.ustar;
    if (cl.status == claim_status::fails) detail::add_witness(cl, g, sp);
  }
  return out;
}

inline std::vector<claim> check_lemma46_structure(const extremal_record& rec) {
  validate_record(rec);
  const auto m = static_cast<std::int64_t>(rec.filter.m);
  std::vector<claim> out;
  for (const auto& cert : rec.certs) {
    const graph g = graph6_decode(cert);
    const auto sp = spectral_radius(g);
    const bool hyp = m % 2 == 0 && m >= 74 && rec.filter.has(c5_plus_free) &&
                     compare(sp.bracket, bound::golden45(m).exact()) > 0;
    auto cs = lemma46_claims(g, hyp);
    for (auto& c : cs) {
      if (c.witnesses.empty()) c.witnesses.push_back(cert);
      out.push_back(std::move(c));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites.

struct suite_options {
  enum_options enumeration;
  double tol = default_tol;
  std::uint64_t seed = 1;
};

/// Every triangle-free class with m edges has rho <= sqrt(m), with equality
/// exactly for complete bipartite graphs.
inline verification_report check_nosal(std::size_t m, const suite_options& opt = {}) {
  if (m > 12) throw resource_error("the Nosal suite enumerates; m must be at most 12");
  verification_report r;
  r.suite = "nosal";
  r.params["m"] = m;
  if (m == 0) return r;
  const auto all = enumerate_classes({m, c3_free}, opt.enumeration);
  const auto sq = bound::sqrt_m(static_cast<std::int64_t>(m)).exact(opt.tol);
  std::vector<spectral_result> rho(all.size());
  detail::parallel_for(all.size(), opt.enumeration.threads,
                       [&](std::size_t i) { rho[i] = spectral_radius(all[i].g, opt.tol); });
  claim upper;
  upper.statement = "every triangle-free graph with m edges has rho <= sqrt(m)";
  claim equality;
  equality.statement = "rho = sqrt(m) exactly for the complete bipartite graphs";
  json eq_certs = json::array();
  bool eq_ok = true;
  std::size_t kab = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int c = compare(rho[i].bracket, sq);
    const auto& g = all[i].g;
    bool complete_bipartite = false;
    const auto bp = bipartition(g);
    if (bp.bipartite && is_connected(g)) {
      std::size_t a = 0;
      for (vertex v = 0; v < g.order(); ++v) a += bp.colour[v] == 0;
      complete_bipartite = a * (g.order() - a) == g.size();
    }
    kab += complete_bipartite;
    if (c > 0) {
      upper.status = claim_status::fails;
      detail::add_witness(upper, g, rho[i]);
    }
    if (c == 0) eq_certs.push_back(all[i].cert);
    if ((c == 0) != complete_bipartite) {
      eq_ok = false;
      detail::add_witness(equality, g, rho[i]);
    }
  }
  equality.status = eq_ok ? claim_status::holds : claim_status::fails;
  upper.evidence["classes"] = all.size();
  equality.evidence["equality_classes"] = eq_certs;
  equality.evidence["complete_bipartite_classes"] = kab;
  r.claims.push_back(upper);
  r.claims.push_back(equality);
  return r;
}

enum class theorem { t11, t12, t13, t14i, t14ii, t15, t16 };

inline std::string_view to_string(theorem t) {
  switch (t) {
    case theorem::t11: return "T11";
    case theorem::t12: return "T12";
    case theorem::t13: return "T13";
    case theorem::t14i: return "T14i";
    case theorem::t14ii: return "T14ii";
    case theorem::t15: return "T15";
    case theorem::t16: return "T16";
  }
  return "?";
}

namespace detail {

inline json describe(const ranked_graph& r) {
  return {{"cert", r.graph.cert},
          {"names", identify_family(r.graph.g)},
          {"rho", r.spectrum.rho},
          {"bracket", bracket_json(r.spectrum.bracket)}};
}

/// Threshold theorems: every class member with rho >= threshold is one of the exceptions.
inline verification_report threshold_theorem(theorem t, std::size_t m, const suite_options& opt) {
  const auto mi = static_cast<std::int64_t>(m);
  verification_report r;
  r.suite = std::string(to_string(t));
  r.params["m"] = m;
  unsigned flags = 0;
  std::size_t min_m = 0;
  certified_root threshold;
  std::string threshold_name;
  std::vector<basic_graph<4>> exceptions;
  auto add = [&](const family_spec& s) {
    try {
      exceptions.push_back(build<4>(s));
    } catch (const construction_error&) {
    }
  };
  if (t == theorem::t11) {
    flags = c4_free | non_bipartite | connected;
    min_m = 26;
    const auto s = build<4>(family_spec::snk(mi, 1));
    threshold = spectral_radius(s, opt.tol).bracket;
    threshold_name = "rho(S_m^1)";
    add(family_spec::snk(mi, 1));
  } else if (t == theorem::t12) {
    flags = c4_free;
    min_m = 27;
    threshold = bound::nosal_like(mi).exact(opt.tol);
    threshold_name = "sqrt(m-1)";
    add(family_spec::star(mi));
    add(family_spec::snk(mi, 1));
    add(family_spec::sm_e(mi));
    if (mi >= 2) exceptions.push_back(disjoint_union(build<4>(family_spec::star(mi - 1)), build<4>(family_spec::path(2))));
  } else {
    flags = c4_free | non_bipartite;
    min_m = 51;
    const auto s = build<4>(family_spec::snk(mi - 1, 2));
    threshold = spectral_radius(s, opt.tol).bracket;
    threshold_name = "rho(S^2_{m-1})";
    add(family_spec::snk(mi, 1));
    add(family_spec::c5_star_dot(mi));
    add(family_spec::snk(mi - 1, 2));
  }
  r.params["filter"] = enum_filter{m, flags}.flag_string();
  r.params["threshold"] = threshold_name;
  const bool hyp = m >= min_m;
  std::vector<std::string> exc;
  for (const auto& e : exceptions) exc.push_back(certificate(convert<1>(without_isolated(e))));

  const auto all = enumerate_classes({m, flags}, opt.enumeration);
  std::vector<double> est(all.size());
  parallel_for(all.size(), opt.enumeration.threads, [&](std::size_t i) { est[i] = spectral_radius_estimate(all[i].g); });
  claim c;
  c.statement = "every graph in the class with rho >= " + threshold_name + " is one of the listed exceptions";
  bool ok = true;
  json above = json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (est[i] < threshold.value() - 1e-6) continue;
    const auto sp = spectral_radius(all[i].g, opt.tol);
    if (compare(sp.bracket, threshold) < 0) continue;
    const bool listed = std::find(exc.begin(), exc.end(), all[i].cert) != exc.end();
    above.push_back({{"cert", all[i].cert}, {"names", identify_family(all[i].g)}, {"rho", sp.rho}, {"listed", listed}});
    if (!listed) {
      ok = false;
      add_witness(c, all[i].g, sp);
    }
  }
  c.status = !hyp ? claim_status::out_of_hypothesis : ok ? claim_status::holds : claim_status::fails;
  c.evidence["conclusion_observed"] = ok;
  c.evidence["classes"] = all.size();
  c.evidence["at_or_above_threshold"] = above;
  c.evidence["required_m"] = min_m;
  r.claims.push_back(c);
  return r;
}

/// Bound theorems: rho <= bound on the class, with equality only for the target graph.
inline verification_report bound_theorem(theorem t, std::size_t m, const suite_options& opt) {
  const auto mi = static_cast<std::int64_t>(m);
  verification_report r;
  r.suite = std::string(to_string(t));
  r.params["m"] = m;
  const bool odd_kind = t == theorem::t14i || t == theorem::t14ii;
  const unsigned flags = (t == theorem::t14i || t == theorem::t15) ? c4_plus_free : c5_plus_free;
  const std::size_t min_m = t == theorem::t14i ? 8 : t == theorem::t16 ? 74 : 22;
  const bool parity_ok = odd_kind ? m % 2 == 1 : m % 2 == 0;
  r.params["filter"] = enum_filter{m, flags}.flag_string();
  r.params["required_m"] = min_m;
  r.params["required_parity"] = odd_kind ? "odd" : "even";
  const bool hyp = parity_ok && m >= min_m;

  const auto ex = extremal_rho({m, flags}, opt.enumeration, opt.tol);
  json observed = json::array();
  for (const auto& e : ex.extremal) observed.push_back(describe(e));
  json runners = json::array();
  for (const auto& e : ex.runners_up) runners.push_back(describe(e));
  r.observations.push_back({{"theorem", std::string(to_string(t))},
                            {"m", m},
                            {"classes", ex.count},
                            {"observed_extremal", observed},
                            {"runners_up", runners}});

  if (!parity_ok || mi < 4 || (odd_kind && mi < 3)) {
    claim c;
    c.statement = "extremal graph characterisation (parity of m does not match the statement)";
    c.status = claim_status::out_of_hypothesis;
    c.evidence["observed_extremal"] = observed;
    r.claims.push_back(c);
    return r;
  }
  const family_spec target = odd_kind ? family_spec::sn_k((mi + 3) / 2, 2) : family_spec::sn_k_minus((mi + 4) / 2, 2);
  const auto tg = build<4>(target);
  const std::string target_cert = certificate(convert<1>(tg));
  const certified_root bnd =
      odd_kind ? bound::golden43(mi).exact(opt.tol) : spectral_radius(tg, opt.tol).bracket;
  const std::string bnd_name = odd_kind ? "(1+sqrt(4m-3))/2" : "rho(" + target.to_string() + ")";

  const auto& top = ex.extremal.front();
  {
    const bool ok = compare(top.spectrum.bracket, bnd) <= 0;
    claim c = decide("rho(G) <= " + bnd_name + " on the class", hyp, ok);
    c.evidence["max_rho"] = bracket_json(top.spectrum.bracket);
    c.evidence["bound"] = bracket_json(bnd);
    if (!ok) add_witness(c, top.graph.g, top.spectrum);
    r.claims.push_back(c);
  }
  {
    const bool attains = compare(top.spectrum.bracket, bnd) == 0;
    const bool only_target = ex.extremal.size() == 1 && top.graph.cert == target_cert;
    const bool ok = attains && only_target;
    claim c = decide("equality holds exactly for " + target.to_string(), hyp, ok);
    c.evidence["target_cert"] = target_cert;
    c.evidence["observed_extremal"] = observed;
    c.evidence["bound_attained"] = attains;
    if (!ok)
      for (const auto& e : ex.extremal) add_witness(c, e.graph.g, e.spectrum);
    r.claims.push_back(c);
  }
  return r;
}

}  // namespace detail

inline verification_report check_theorem(theorem t, std::size_t m, const suite_options& opt = {}) {
  detail::check_caps({m, 0}, opt.enumeration);
  if (m < 1) throw domain_error("m must be positive");
  switch (t) {
    case theorem::t11:
    case theorem::t12:
    case theorem::t13: return detail::threshold_theorem(t, m, opt);
    default: return detail::bound_theorem(t, m, opt);
  }
}

/// Extremal record for a class, produced by enumeration.
inline extremal_record certify_extremal(const enum_filter& f, const suite_options& opt = {}) {
  return make_record(f, extremal_rho(f, opt.enumeration, opt.tol));
}

/// Family-only ordering around S^2_{m-1}.
inline verification_report check_t13_order(std::int64_t m, const suite_options& opt = {}) {
  if (m < 6) throw domain_error("t13-order needs m >= 6");
  verification_report r;
  r.suite = "t13-order";
  r.params["m"] = m;
  const bool hyp = m >= 51;
  const auto s1 = build<4>(family_spec::snk(m, 1));
  const auto s2 = build<4>(family_spec::snk(m - 1, 2));
  const auto c5 = build<4>(family_spec::c5_star_dot(m));
  const auto g10 = build<4>(family_spec::g10(m));
  const auto g11 = build<4>(family_spec::g11_candidate(m));
  const auto g12 = build<4>(family_spec::g12_candidate(m));
  const auto r1 = spectral_radius(s1, opt.tol);
  const auto r2 = spectral_radius(s2, opt.tol);
  const auto rc = spectral_radius(c5, opt.tol);
  const auto r10 = spectral_radius(g10, opt.tol);
  const auto r11 = spectral_radius(g11, opt.tol);
  const auto r12 = spectral_radius(g12, opt.tol);
  const auto sq = bound::sqrt_m_minus(m, 2).exact(opt.tol);

  auto add = [&](const std::string& what, bool ok, std::vector<std::pair<const basic_graph<4>*, const spectral_result*>> gs) {
    claim c = detail::decide(what, hyp, ok);
    for (auto [g, s] : gs) detail::add_witness(c, *g, *s);
    r.claims.push_back(c);
  };
  add("rho(S_m^1) > rho(S^2_{m-1})", compare(r1, r2) > 0, {{&s1, &r1}, {&s2, &r2}});
  add("rho(S^2_{m-1}) > sqrt(m-2)", compare(r2.bracket, sq) > 0, {{&s2, &r2}});
  add("rho(C5StarDot(m)) > rho(S^2_{m-1})", compare(rc, r2) > 0, {{&c5, &rc}, {&s2, &r2}});
  add("rho(G10(m)) < rho(S^2_{m-1})", compare(r10, r2) < 0, {{&g10, &r10}, {&s2, &r2}});
  const int order = compare(r1, rc);
  r.observations.push_back({{"m", m},
                            {"S_m^1_vs_C5StarDot", order > 0 ? ">" : order < 0 ? "<" : "="},
                            {"rho_S_m^1", r1.rho},
                            {"rho_S^2_{m-1}", r2.rho},
                            {"rho_C5StarDot", rc.rho},
                            {"rho_G10", r10.rho},
                            {"rho_G11Candidate", r11.rho},
                            {"rho_G12Candidate", r12.rho},
                            {"G11Candidate_below_S^2", compare(r11, r2) < 0},
                            {"G12Candidate_below_sqrt(m-2)", compare(r12.bracket, sq) < 0}});
  r.warnings = warnings_json(known_discrepancies(m));
  return r;
}

/// sqrt(m-k) < rho(S^k_{m-k+1}) <= sqrt(m-k+1), and the cubic's largest root is rho.
inline verification_report check_lemma22(std::int64_t m, const suite_options& opt = {}) {
  verification_report r;
  r.suite = "lemma22";
  r.params["m"] = m;
  for (std::int64_t k = 1; k <= 3; ++k) {
    const bool hyp = 3 * k <= m && m >= 4 * k * k + 5 * k;
    if (2 * k > m - k) continue;  // S^k_{m-k+1} does not exist
    const auto g = build<4>(family_spec::snk(m - k + 1, k));
    const auto sp = spectral_radius(g, opt.tol);
    const auto cubic = instantiate(poly_spec::lemma22(m, k));
    const auto root = largest_root(cubic, opt.tol);
    const bool lower = compare(sp.bracket, bound::sqrt_m_minus(m, k).exact(opt.tol)) > 0;
    const bool upper = compare(sp.bracket, bound::sqrt_m_minus(m, k - 1).exact(opt.tol)) <= 0;
    claim c = detail::decide("sqrt(m-k) < rho(S^k_{m-k+1}) <= sqrt(m-k+1), k = " + std::to_string(k), hyp,
                             lower && upper);
    c.evidence["k"] = k;
    c.evidence["rho"] = bracket_json(sp.bracket);
    c.evidence["lower_strict"] = lower;
    c.evidence["upper"] = upper;
    if (!(lower && upper)) detail::add_witness(c, g, sp);
    r.claims.push_back(c);

    const bool divides = char_poly(g).divisible_by(cubic);
    const bool same = compare(sp.bracket, root.bracket) == 0;
    claim d = detail::decide("the cubic divides charpoly(S^k_{m-k+1}) and its largest root is rho, k = " +
                                 std::to_string(k),
                             true, divides && same && std::fabs(sp.rho - root.value) <= 1e-9);
    d.evidence["cubic"] = cubic.to_string();
    d.evidence["divides"] = divides;
    d.evidence["root"] = root.value;
    d.evidence["rho"] = sp.rho;
    if (d.status == claim_status::fails) detail::add_witness(d, g, sp);
    r.claims.push_back(d);
  }
  return r;
}

/// rho(S^-_{(m+4)/2,2}) > (1+sqrt(4m-5))/2, the G14 quotient root, and t = 1 maximising over G14(r,t).
inline verification_report check_lemma43(std::int64_t m, const suite_options& opt = {}) {
  verification_report r;
  r.suite = "lemma43";
  r.params["m"] = m;
  if (m % 2 != 0 || m < 4) {
    claim c;
    c.statement = "rho(S^-_{(m+4)/2,2}) > (1+sqrt(4m-5))/2";
    c.status = claim_status::out_of_hypothesis;
    c.evidence["reason"] = "m must be even and at least 4 for the graph to exist";
    r.claims.push_back(c);
    return r;
  }
  const auto g = build<4>(family_spec::sn_k_minus((m + 4) / 2, 2));
  const auto sp = spectral_radius(g, opt.tol);
  {
    const bool ok = compare(sp.bracket, bound::golden45(m).exact(opt.tol)) > 0;
    claim c = detail::decide("rho(S^-_{(m+4)/2,2}) > (1+sqrt(4m-5))/2", m >= 6, ok);
    c.evidence["rho"] = bracket_json(sp.bracket);
    c.evidence["bound"] = bound::golden45(m).value();
    if (!ok) detail::add_witness(c, g, sp);
    r.claims.push_back(c);
  }
  {
    const auto f1 = instantiate(poly_spec::lemma47f(m, 1));
    const bool divides = char_poly(g).divisible_by(f1);
    const bool same = compare(sp.bracket, largest_root(f1, opt.tol).bracket) == 0;
    claim c = detail::decide("rho(S^-_{(m+4)/2,2}) is the largest root of f(x,1)", true, divides && same);
    c.evidence["f"] = f1.to_string();
    c.evidence["divides"] = divides;
    r.claims.push_back(c);
  }
  {
    // f(x,t) - f(x,1) = (t-1)x + (m(t-1) - t^2 - t + 2)/2, and rho(G14(r,t)) < rho(G14(r',1)).
    bool algebra = true;
    bool order = true;
    json per = json::array();
    for (std::int64_t t = 3; t <= m - 3; t += 2) {
      if ((m - t - 1) % 2 != 0) continue;
      const std::int64_t rr = (m - t - 1) / 2;
      if (rr < 1) continue;
      const auto diff = instantiate(poly_spec::lemma47f(m, t)) - instantiate(poly_spec::lemma47f(m, 1));
      const auto expect = int_poly::descending({t - 1, (m * (t - 1) - t * t - t + 2) / 2});
      algebra = algebra && diff == expect;
      const auto gt = build<4>(family_spec::g14(rr, t));
      const auto st = spectral_radius(gt, opt.tol);
      const bool below = compare(st, sp) < 0;
      order = order && below;
      per.push_back({{"t", t}, {"r", rr}, {"rho", st.rho}, {"below_t1", below}});
    }
    claim c = detail::decide("f(x,t) - f(x,1) = (t-1)x + (m(t-1)-t^2-t+2)/2 for odd t >= 3", true, algebra);
    r.claims.push_back(c);
    claim d = detail::decide("rho(G14(r,t)) < rho(G14((m-2)/2,1)) for odd t >= 3", true, order);
    d.evidence["instances"] = per;
    r.claims.push_back(d);
  }
  return r;
}

inline verification_report check_lemma44_suite(std::int64_t m, double beta, const suite_options& opt = {}) {
  verification_report r;
  r.suite = "lemma44";
  r.params["m"] = m;
  r.params["beta"] = beta;
  std::vector<family_spec> specs;
  if (m % 2 == 0 && m >= 4) specs.push_back(family_spec::sn_k_minus((m + 4) / 2, 2));
  if (m % 2 == 1 && m >= 5) specs.push_back(family_spec::sn_k((m + 3) / 2, 2));
  specs.push_back(family_spec::snk(m, 1));
  for (const auto& s : specs) {
    const auto g = build<4>(s);
    for (auto& c : check_lemma44<4>(g, beta, std::nullopt, opt.tol)) {
      c.evidence["graph"] = s.to_string();
      r.claims.push_back(std::move(c));
    }
  }
  return r;
}

inline verification_report check_eq8_suite(std::int64_t m, const suite_options& opt = {}) {
  verification_report r;
  r.suite = "eq8";
  r.params["m"] = m;
  std::vector<family_spec> specs = {family_spec::snk(m, 1), family_spec::snk(m - 1, 2), family_spec::c5_star_dot(m),
                                    family_spec::g10(m), family_spec::g11_candidate(m), family_spec::g12_candidate(m)};
  for (const auto& s : specs) {
    basic_graph<4> g;
    try {
      g = build<4>(s);
    } catch (const construction_error&) {
      continue;
    }
    claim c = check_eq8(g, opt.tol);
    c.evidence["graph"] = s.to_string();
    r.claims.push_back(std::move(c));
  }
  return r;
}

/// Residuals of the Perron identities at every vertex of every connected class with m edges.
inline verification_report check_perron_suite(std::size_t m, const suite_options& opt = {}) {
  verification_report r;
  r.suite = "perron";
  r.params["m"] = m;
  const auto all = enumerate_classes({m, connected}, opt.enumeration);
  std::vector<double> worst(all.size(), 0.0);
  detail::parallel_for(all.size(), opt.enumeration.threads, [&](std::size_t i) {
    const auto sp = spectral_radius(all[i].g, opt.tol);
    for (vertex u = 0; u < all[i].g.order(); ++u)
      worst[i] = std::max(worst[i], check_perron_identities(all[i].g, u, sp).max());
  });
  const auto it = std::max_element(worst.begin(), worst.end());
  const double mx = it == worst.end() ? 0.0 : *it;
  claim c = detail::decide("the three Perron identities hold to 1e-8 at every vertex", true, mx < 1e-8);
  c.evidence["classes"] = all.size();
  c.evidence["max_residual"] = mx;
  if (c.status == claim_status::fails) {
    const auto& g = all[static_cast<std::size_t>(it - worst.begin())].g;
    detail::add_witness(c, g, spectral_radius(g, opt.tol));
  }
  r.claims.push_back(c);
  return r;
}

inline const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {"nosal",   "perron",  "eq8",       "lemma22", "lemma43",
                                                      "lemma44", "t13-order", "t14",     "t16"};
  return names;
}

/// Runs a named suite at one m.
inline verification_report run_suite(std::string_view name, std::int64_t m, const suite_options& opt = {}) {
  if (m < 1) throw domain_error("m must be positive");
  const auto mu = static_cast<std::size_t>(m);
  if (name == "nosal") return check_nosal(mu, opt);
  if (name == "perron") return check_perron_suite(mu, opt);
  if (name == "eq8") return check_eq8_suite(m, opt);
  if (name == "lemma22") return check_lemma22(m, opt);
  if (name == "lemma43") return check_lemma43(m, opt);
  if (name == "lemma44") return check_lemma44_suite(m, 0.5, opt);
  if (name == "t13-order") return check_t13_order(m, opt);
  if (name == "t14" || name == "t16") {
    const bool t14 = name == "t14";
    verification_report r;
    r.suite = std::string(name);
    r.params["m"] = m;
    r.append(check_theorem(t14 ? theorem::t14i : theorem::t15, mu, opt));
    r.append(check_theorem(t14 ? theorem::t14ii : theorem::t16, mu, opt));
    const auto rec = certify_extremal({mu, t14 ? c4_plus_free : c5_plus_free}, opt);
    for (auto& c : check_lemma41(rec)) r.claims.push_back(std::move(c));
    if (!t14)
      for (auto& c : check_lemma46_structure(rec)) r.claims.push_back(std::move(c));
    return r;
  }
  throw domain_error("unknown suite '" + std::string(name) + "'");
}

}  // namespace specturan
