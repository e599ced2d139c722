#pragma once

// The bound polynomials and closed-form bounds, with certified largest roots.
//
// Every bound is an algebraic number and is carried as the largest root of an
// integer polynomial, so comparing it against a spectral radius is an exact
// root comparison rather than a floating-point one.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specturan/errors.hpp"
#include "specturan/poly.hpp"
#include "specturan/spectral.hpp"

namespace specturan {

enum class poly_kind {
  lemma22,         // Lemma22(m,k): x^3 - x^2 - (m-k)x + m - 3k
  g10g,            // G10g(m): x^4 - m x^2 - 2x + 2m - 7
  subcase_h,       // SubcaseH(m): G10g(m) - x Lemma22(m,2), recomputed
  eq9h1,           // Eq9h1(m): printed h1
  eq9h2,           // Eq9h2(m): printed h2
  eq9h3,           // Eq9h3(m): printed h3
  lemma47f,        // Lemma47f(m,t): x^4 - m x^2 - (m-t-1)x + t(m-t-1)/2
  c5_quotient,     // C5Quotient(m): equitable quotient of C5StarDot(m)
  g11c_quotient,   // G11CQuotient(m): equitable quotient of G11Candidate(m)
  g12c_quotient,   // G12CQuotient(m): equitable quotient of G12Candidate(m)
};

struct poly_kind_info {
  poly_kind kind;
  std::string_view name;
  std::vector<std::string_view> params;
};

inline const std::vector<poly_kind_info>& poly_table() {
  static const std::vector<poly_kind_info> table = {
      {poly_kind::lemma22, "Lemma22", {"m", "k"}},  {poly_kind::g10g, "G10g", {"m"}},
      {poly_kind::subcase_h, "SubcaseH", {"m"}},    {poly_kind::eq9h1, "Eq9h1", {"m"}},
      {poly_kind::eq9h2, "Eq9h2", {"m"}},           {poly_kind::eq9h3, "Eq9h3", {"m"}},
      {poly_kind::lemma47f, "Lemma47f", {"m", "t"}}, {poly_kind::c5_quotient, "C5Quotient", {"m"}},
      {poly_kind::g11c_quotient, "G11CQuotient", {"m"}}, {poly_kind::g12c_quotient, "G12CQuotient", {"m"}},
  };
  return table;
}

inline const poly_kind_info& info(poly_kind k) {
  for (const auto& e : poly_table())
    if (e.kind == k) return e;
  throw domain_error("unknown polynomial");
}

inline std::optional<poly_kind> parse_poly_kind(std::string_view name) {
  for (const auto& e : poly_table())
    if (e.name == name) return e.kind;
  return std::nullopt;
}

struct poly_spec {
  poly_kind kind = poly_kind::lemma22;
  std::vector<std::int64_t> params;

  std::int64_t param(std::size_t i) const {
    if (i >= params.size())
      throw domain_error(std::string(info(kind).name) + ": missing parameter '" +
                         std::string(info(kind).params.at(i)) + "'");
    return params[i];
  }
  std::string to_string() const {
    std::string s(info(kind).name);
    s += "(";
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s + ")";
  }

  static poly_spec lemma22(std::int64_t m, std::int64_t k) { return {poly_kind::lemma22, {m, k}}; }
  static poly_spec g10g(std::int64_t m) { return {poly_kind::g10g, {m}}; }
  static poly_spec subcase_h(std::int64_t m) { return {poly_kind::subcase_h, {m}}; }
  static poly_spec eq9h1(std::int64_t m) { return {poly_kind::eq9h1, {m}}; }
  static poly_spec eq9h2(std::int64_t m) { return {poly_kind::eq9h2, {m}}; }
  static poly_spec eq9h3(std::int64_t m) { return {poly_kind::eq9h3, {m}}; }
  static poly_spec lemma47f(std::int64_t m, std::int64_t t) { return {poly_kind::lemma47f, {m, t}}; }
  static poly_spec c5_quotient(std::int64_t m) { return {poly_kind::c5_quotient, {m}}; }
  static poly_spec g11c_quotient(std::int64_t m) { return {poly_kind::g11c_quotient, {m}}; }
  static poly_spec g12c_quotient(std::int64_t m) { return {poly_kind::g12c_quotient, {m}}; }
};

enum class combine_op { sub, sub_x_times };

/// p - q, or p - x q.
inline int_poly combine(const int_poly& p, const int_poly& q, combine_op op) {
  return op == combine_op::sub ? p - q : p - int_poly::x() * q;
}

/// Exact coefficients of a named polynomial.
inline int_poly instantiate(const poly_spec& s) {
  const std::size_t want = info(s.kind).params.size();
  if (s.params.size() != want)
    throw domain_error(s.to_string() + ": expects " + std::to_string(want) + " parameter(s)");
  const bigint m = s.param(0);
  if (m < 1) throw domain_error(s.to_string() + ": requires m >= 1");
  using P = int_poly;
  switch (s.kind) {
    case poly_kind::lemma22: {
      const bigint k = s.param(1);
      if (k < 1) throw domain_error(s.to_string() + ": requires k >= 1");
      return P::descending({1, -1, -(m - k), m - 3 * k});
    }
    case poly_kind::g10g: return P::descending({1, 0, -m, -2, 2 * m - 7});
    case poly_kind::subcase_h:
      return combine(instantiate(poly_spec::g10g(s.params[0])), instantiate(poly_spec::lemma22(s.params[0], 2)),
                     combine_op::sub_x_times);
    case poly_kind::eq9h1: return P::descending({1, -1, -(m - 2), -(m - 3), m - 5});
    case poly_kind::eq9h2: return P::descending({1, 1, -(m - 1), 1, 3 * m - 15, 3 * m - 17});
    case poly_kind::eq9h3: return P::descending({1, -1, -(m - 1), -(m - 4), 2 * m - 8});
    case poly_kind::lemma47f: {
      const bigint t = s.param(1);
      if (t < 0 || t > m - 1) throw domain_error(s.to_string() + ": requires 0 <= t <= m - 1");
      if ((t * (m - t - 1)) % 2 != 0)
        throw domain_error(s.to_string() + ": t(m-t-1)/2 is not an integer (m odd needs t even)");
      return P::descending({1, 0, -m, -(m - t - 1), t * (m - t - 1) / 2});
    }
    case poly_kind::c5_quotient: return P::descending({1, -1, -(m - 2), m - 3, m - 5});
    case poly_kind::g11c_quotient: return P::descending({1, -1, -(m - 1), m - 3, 3 * m - 15, -(m - 5)});
    case poly_kind::g12c_quotient: return P::descending({1, -1, -(m - 1), m - 3, 2 * m - 8});
  }
  throw domain_error("unknown polynomial");
}

/// The printed form where it differs from the recomputed one.
inline std::optional<int_poly> printed_variant(const poly_spec& s) {
  if (s.kind != poly_kind::subcase_h) return std::nullopt;
  const bigint m = s.param(0);
  return int_poly::descending({1, -2, -(m - 8), 2 * m - 7});
}

struct root_result {
  double value = 0.0;
  certified_root bracket;
};

/// Largest real root, bracketed by Sturm counting from the Cauchy bound.
inline root_result largest_root(const int_poly& p, double tol = default_tol) {
  if (!(tol > 0)) throw domain_error("tolerance must be positive");
  certified_root r = certified_root::largest(p, root_counting::sturm, certified_root::dyadic_at_most(rational(tol)));
  return {r.value(), r};
}

inline root_result largest_root(const poly_spec& s, double tol = default_tol) {
  return largest_root(instantiate(s), tol);
}

// ---------------------------------------------------------------------------
// Closed-form bounds.

enum class bound_kind { sqrt_m, sqrt_m_minus, nosal_like, golden43, golden45 };

struct bound {
  bound_kind kind = bound_kind::sqrt_m;
  std::int64_t m = 1;
  std::int64_t c = 0;  // only for sqrt_m_minus

  static bound sqrt_m(std::int64_t m) { return {bound_kind::sqrt_m, m, 0}; }
  static bound sqrt_m_minus(std::int64_t m, std::int64_t c) { return {bound_kind::sqrt_m_minus, m, c}; }
  /// sqrt(m-1), the threshold beside the Nosal bound for quadrilateral-free graphs.
  static bound nosal_like(std::int64_t m) { return {bound_kind::nosal_like, m, 0}; }
  /// (1 + sqrt(4m-3)) / 2
  static bound golden43(std::int64_t m) { return {bound_kind::golden43, m, 0}; }
  /// (1 + sqrt(4m-5)) / 2
  static bound golden45(std::int64_t m) { return {bound_kind::golden45, m, 0}; }

  std::string to_string() const {
    switch (kind) {
      case bound_kind::sqrt_m: return "SqrtM(" + std::to_string(m) + ")";
      case bound_kind::sqrt_m_minus: return "SqrtMminus(" + std::to_string(c) + ")@m=" + std::to_string(m);
      case bound_kind::nosal_like: return "NosalLike(" + std::to_string(m) + ")";
      case bound_kind::golden43: return "Golden43(" + std::to_string(m) + ")";
      case bound_kind::golden45: return "Golden45(" + std::to_string(m) + ")";
    }
    return "?";
  }

  /// Integer polynomial whose largest root is the bound.
  int_poly defining_poly() const {
    if (m < 1) throw domain_error(to_string() + ": requires m >= 1");
    const bigint M = m;
    switch (kind) {
      case bound_kind::sqrt_m: return int_poly::descending({1, 0, -M});
      case bound_kind::sqrt_m_minus:
        if (m - c < 0) throw domain_error(to_string() + ": m - c is negative");
        return int_poly::descending({1, 0, -(M - c)});
      case bound_kind::nosal_like: return int_poly::descending({1, 0, -(M - 1)});
      case bound_kind::golden43: return int_poly::descending({1, -1, -(M - 1)});
      case bound_kind::golden45:
        if (m < 2) throw domain_error(to_string() + ": requires m >= 2");
        return int_poly::descending({2, -2, -(2 * M - 3)});
    }
    throw domain_error("unknown bound");
  }

  double value() const {
    defining_poly();  // range checks
    const auto md = static_cast<double>(m);
    switch (kind) {
      case bound_kind::sqrt_m: return std::sqrt(md);
      case bound_kind::sqrt_m_minus: return std::sqrt(md - static_cast<double>(c));
      case bound_kind::nosal_like: return std::sqrt(md - 1);
      case bound_kind::golden43: return (1 + std::sqrt(4 * md - 3)) / 2;
      case bound_kind::golden45: return (1 + std::sqrt(4 * md - 5)) / 2;
    }
    return 0.0;
  }

  certified_root exact(double tol = default_tol) const {
    return certified_root::largest(defining_poly(), root_counting::sturm,
                                   certified_root::dyadic_at_most(rational(tol)));
  }
};

inline double bound_value(const bound& b) { return b.value(); }

// ---------------------------------------------------------------------------
// Printed-versus-recomputed discrepancies.

struct poly_warning {
  std::string subject;
  std::string printed;
  std::string recomputed;
  std::string note;
};

/// Structured warnings for the polynomial statements that disagree with
/// direct computation, instantiated at m.
inline std::vector<poly_warning> known_discrepancies(std::int64_t m) {
  std::vector<poly_warning> w;
  w.push_back({"h = g - x f", printed_variant(poly_spec::subcase_h(m))->to_string(),
               instantiate(poly_spec::subcase_h(m)).to_string(),
               "symbolic subtraction gives -(m-4)x; the printed form has -(m-8)x"});
  w.push_back({"h3(sqrt(m-2))", "m - 6 - 2 sqrt(m-2) = " + std::to_string(m - 6) + " - 2 sqrt(" + std::to_string(m - 2) + ")",
               "m - 6 - (2m-6) sqrt(m-2) = " + std::to_string(m - 6) + " - " + std::to_string(2 * m - 6) + " sqrt(" +
                   std::to_string(m - 2) + ")",
               "direct evaluation of the printed h3 coefficients"});
  w.push_back({"h1 (quotient of C5StarDot)", instantiate(poly_spec::eq9h1(m)).to_string(),
               instantiate(poly_spec::c5_quotient(m)).to_string(),
               "the printed h1 divides no characteristic polynomial; the equitable quotient of C5StarDot(m) has +(m-3)x"});
  w.push_back({"h2 / h3 (G11, G12)", instantiate(poly_spec::eq9h2(m)).to_string() + " ; " + instantiate(poly_spec::eq9h3(m)).to_string(),
               instantiate(poly_spec::g11c_quotient(m)).to_string() + " ; " + instantiate(poly_spec::g12c_quotient(m)).to_string(),
               "no graph matches the printed polynomials; recomputed column gives the quotients of G11Candidate / G12Candidate"});
  return w;
}

/// The subset of known_discrepancies that concerns one polynomial.
inline std::vector<poly_warning> warnings_for(const poly_spec& s) {
  const auto all = known_discrepancies(s.param(0));
  std::vector<std::size_t> idx;
  switch (s.kind) {
    case poly_kind::subcase_h: idx = {0}; break;
    case poly_kind::eq9h1:
    case poly_kind::c5_quotient: idx = {2}; break;
    case poly_kind::eq9h2:
    case poly_kind::g11c_quotient:
    case poly_kind::g12c_quotient: idx = {3}; break;
    case poly_kind::eq9h3: idx = {1, 3}; break;
    default: break;
  }
  std::vector<poly_warning> out;
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

}  // namespace specturan
