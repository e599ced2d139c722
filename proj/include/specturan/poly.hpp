#pragma once

// Exact integer polynomials and real-root counting.
//
// Two independent counters are provided for "number of roots strictly above
// c": Descartes' rule on the Taylor-shifted polynomial, which is exact for
// real-rooted polynomials (characteristic polynomials of symmetric matrices
// and their factors) and counts multiplicity; and Sturm sequences, which work
// for any polynomial and count distinct roots.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "specturan/errors.hpp"

namespace specturan {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/// Polynomial with integer coefficients, stored lowest degree first and
/// kept normalised (no zero leading coefficient; the zero polynomial is empty).
class int_poly {
 public:
  int_poly() = default;
  explicit int_poly(std::vector<bigint> ascending) : c_(std::move(ascending)) { trim(); }
  /// Coefficients from the leading term down, as printed: {1, -1, -8, 6} is x^3 - x^2 - 8x + 6.
  static int_poly descending(std::initializer_list<bigint> coeffs) {
    return int_poly(std::vector<bigint>(std::rbegin(coeffs), std::rend(coeffs)));
  }
  static int_poly descending(const std::vector<bigint>& coeffs) {
    return int_poly(std::vector<bigint>(coeffs.rbegin(), coeffs.rend()));
  }
  static int_poly constant(const bigint& c) { return int_poly(std::vector<bigint>{c}); }
  static int_poly monomial(std::size_t k, const bigint& c = 1) {
    std::vector<bigint> v(k + 1);
    v[k] = c;
    return int_poly(std::move(v));
  }
  static int_poly x() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const bigint& operator[](std::size_t k) const { return c_[k]; }
  bigint coeff(std::size_t k) const { return k < c_.size() ? c_[k] : bigint(0); }
  const bigint& leading() const { return c_.back(); }
  const std::vector<bigint>& ascending() const { return c_; }
  std::vector<bigint> descending_coeffs() const { return {c_.rbegin(), c_.rend()}; }

  friend int_poly operator+(const int_poly& a, const int_poly& b) {
    std::vector<bigint> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return int_poly(std::move(r));
  }
  friend int_poly operator-(const int_poly& a, const int_poly& b) {
    std::vector<bigint> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return int_poly(std::move(r));
  }
  friend int_poly operator*(const int_poly& a, const int_poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<bigint> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return int_poly(std::move(r));
  }
  friend int_poly operator*(const bigint& k, const int_poly& a) {
    std::vector<bigint> r = a.c_;
    for (auto& x : r) x *= k;
    return int_poly(std::move(r));
  }
  friend bool operator==(const int_poly&, const int_poly&) = default;

  bigint eval(const bigint& x) const {
    bigint r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }
  rational eval(const rational& x) const {
    rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + rational(*it);
    return r;
  }
  /// Sign of p(c) computed exactly: den^deg * p(num/den) is an integer.
  int sign_at(const rational& c) const {
    const bigint num = boost::multiprecision::numerator(c);
    const bigint den = boost::multiprecision::denominator(c);
    bigint acc = 0;
    bigint dpow = 1;  // den^(deg - k) for the coefficient being folded in
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * num + *it * dpow;
      dpow *= den;
    }
    return acc.sign();
  }
  double eval(double x) const {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->convert_to<double>();
    return r;
  }

  int_poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<bigint> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned>(i);
    return int_poly(std::move(r));
  }

  bigint content() const {
    bigint g = 0;
    for (const auto& x : c_) g = gcd(g, x);
    return g;
  }
  /// Primitive part with positive leading coefficient.
  int_poly primitive() const {
    if (is_zero()) return {};
    bigint g = content();
    if (leading() < 0) g = -g;
    std::vector<bigint> r = c_;
    for (auto& x : r) x /= g;
    return int_poly(std::move(r));
  }

  /// Quotient and remainder when the division is exact over the integers
  /// (always the case for monic divisors); nullopt otherwise.
  std::optional<std::pair<int_poly, int_poly>> divmod(const int_poly& d) const {
    if (d.is_zero()) throw domain_error("polynomial division by zero");
    std::vector<bigint> r = c_;
    if (degree() < d.degree()) return std::pair{int_poly{}, *this};
    std::vector<bigint> q(c_.size() - d.c_.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
      const bigint& top = r[i + d.c_.size() - 1];
      if (top % d.leading() != 0) return std::nullopt;
      q[i] = top / d.leading();
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[i + j] -= q[i] * d.c_[j];
    }
    return std::pair{int_poly(std::move(q)), int_poly(std::move(r))};
  }
  /// True when d divides *this in Q[x] (equivalently in Z[x] for primitive d).
  bool divisible_by(const int_poly& d) const {
    if (d.is_zero()) return is_zero();
    return pseudo_remainder(*this, d).is_zero();
  }

  /// prem(a, b): lc(b)^(deg a - deg b + 1) a mod b, computed in Z[x].
  friend int_poly pseudo_remainder(const int_poly& a, const int_poly& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<bigint> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t top = r.size(); top-- > db;) {
      const bigint t = r[top];
      for (auto& x : r) x *= b.leading();
      for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= t * b.c_[j];
    }
    r.resize(db);
    return int_poly(std::move(r));
  }

  /// Greatest common divisor in Q[x], returned primitive with positive leading coefficient.
  friend int_poly gcd(const int_poly& a, const int_poly& b) {
    int_poly x = a.primitive();
    int_poly y = b.primitive();
    while (!y.is_zero()) {
      int_poly r = pseudo_remainder(x, y).primitive();
      x = std::move(y);
      y = std::move(r);
    }
    return x.primitive();
  }

  /// p(x + a)
  int_poly taylor_shift(const bigint& a) const {
    std::vector<bigint> r = c_;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) r[j - 1] += a * r[j];
    return int_poly(std::move(r));
  }
  /// den^deg * p(x / den)
  int_poly scale_argument(const bigint& den) const {
    std::vector<bigint> r = c_;
    bigint f = 1;
    for (std::size_t k = r.size(); k-- > 0;) {
      r[k] *= f;
      f *= den;
    }
    return int_poly(std::move(r));
  }

  /// Sign changes in the coefficient sequence, zeros skipped.
  std::size_t sign_variations() const {
    std::size_t v = 0;
    int last = 0;
    for (const auto& x : c_) {
      const int s = x.sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const bigint& a = c_[k];
      if (a == 0) continue;
      const bigint mag = abs(a);
      if (first) {
        if (a < 0) os << "-";
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      first = false;
      if (mag != 1 || k == 0) os << mag;
      if (k >= 1) os << "x";
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<bigint> c_;
};

inline rational make_rational(const bigint& num, const bigint& den = 1) { return rational(num, den); }

/// Roots of p strictly greater than c, counted with multiplicity. Exact only
/// when every root of p is real.
inline std::size_t roots_above_real_rooted(const int_poly& p, const rational& c) {
  if (p.degree() <= 0) return 0;
  const bigint num = boost::multiprecision::numerator(c);
  const bigint den = boost::multiprecision::denominator(c);
  const int_poly shifted = p.scale_argument(den).taylor_shift(num);
  std::size_t skip = 0;
  while (skip < shifted.ascending().size() && shifted[skip] == 0) ++skip;
  std::vector<bigint> rest(shifted.ascending().begin() + static_cast<std::ptrdiff_t>(skip),
                           shifted.ascending().end());
  return int_poly(std::move(rest)).sign_variations();
}

/// Sturm chain p, p', -rem(p_{i-1}, p_i), ... over Q, scaled to integer
/// coefficients with positive content factors so signs are preserved.
inline std::vector<int_poly> sturm_chain(const int_poly& p) {
  std::vector<int_poly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const int_poly& a = chain[chain.size() - 2];
    const int_poly& b = chain.back();
    // prem multiplies by lc(b)^k; keep the sign of a positive multiple.
    int_poly r = pseudo_remainder(a, b);
    const int k = a.degree() - b.degree() + 1;
    if (b.leading() < 0 && (k % 2 != 0)) r = bigint(-1) * r;
    if (r.is_zero()) break;
    bigint g = r.content();
    std::vector<bigint> cs = r.ascending();
    for (auto& x : cs) x /= g;
    chain.push_back(bigint(-1) * int_poly(std::move(cs)));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

inline std::size_t sturm_variations_at(const std::vector<int_poly>& chain, const rational& c) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

inline std::size_t sturm_variations_at_infinity(const std::vector<int_poly>& chain) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q.leading().sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Distinct real roots of p strictly greater than c (any p).
inline std::size_t distinct_roots_above(const std::vector<int_poly>& chain, const rational& c) {
  return sturm_variations_at(chain, c) - sturm_variations_at_infinity(chain);
}

/// Cauchy bound: every root has |z| < 1 + max |a_i / a_d|, rounded up to a power of two.
inline rational cauchy_bound(const int_poly& p) {
  if (p.degree() <= 0) return rational(1);
  rational mx = 0;
  for (int i = 0; i < p.degree(); ++i) {
    rational q(abs(p[static_cast<std::size_t>(i)]), abs(p.leading()));
    if (q > mx) mx = q;
  }
  rational b = 1;
  while (b < mx + 1) b *= 2;
  return b;
}

enum class root_counting { descartes, sturm };

/// The largest real root of an integer polynomial, held as an interval
/// (lo, hi] of rationals such that p has a root above lo and none above hi.
///
/// Comparisons between two certified roots refine both intervals by exact
/// bisection until they separate; when they keep overlapping, equality is
/// decided through the gcd of the two polynomials.
class certified_root {
 public:
  certified_root() = default;
  /// Caller asserts the interval property; it is re-checked here.
  certified_root(int_poly p, rational lo, rational hi, root_counting how)
      : p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)), how_(how) {
    if (how_ == root_counting::sturm) chain_ = sturm_chain(p_);
    if (!(lo_ < hi_) || above(lo_) == 0 || above(hi_) != 0)
      throw domain_error("interval does not bracket the largest root of " + p_.to_string());
  }

  /// Largest real root found by bisection from the Cauchy bound.
  static certified_root largest(const int_poly& p, root_counting how, const rational& width) {
    if (p.degree() < 1) throw domain_error("constant polynomial has no real root");
    if (width <= 0) throw domain_error("tolerance must be positive");
    certified_root r;
    r.p_ = p;
    r.how_ = how;
    if (how == root_counting::sturm) r.chain_ = sturm_chain(p);
    const rational b = cauchy_bound(p);
    r.lo_ = -b;
    r.hi_ = b;
    if (r.above(r.lo_) == 0) throw domain_error("polynomial " + p.to_string() + " has no real root");
    r.refine(width);
    return r;
  }

  /// Tries to certify an interval around a floating-point estimate; falls
  /// back to bisection if the estimate is off.
  static certified_root around(const int_poly& p, root_counting how, double estimate,
                               const rational& width) {
    certified_root r;
    r.p_ = p;
    r.how_ = how;
    if (how == root_counting::sturm) r.chain_ = sturm_chain(p);
    const rational grid = dyadic_at_most(width / 4);
    const rational est = to_dyadic(estimate, grid);
    r.lo_ = est - grid;
    r.hi_ = est + grid;
    if (std::isfinite(estimate) && r.above(r.hi_) == 0 && r.above(r.lo_) > 0) return r;
    return largest(p, how, width);
  }

  const int_poly& poly() const { return p_; }
  const rational& lo() const { return lo_; }
  const rational& hi() const { return hi_; }
  rational width() const { return hi_ - lo_; }
  root_counting counting() const { return how_; }
  double value() const { return ((lo_ + hi_) / 2).convert_to<double>(); }

  /// Roots of the polynomial strictly above c (multiplicity for Descartes,
  /// distinct for Sturm).
  std::size_t above(const rational& c) const {
    return how_ == root_counting::descartes ? roots_above_real_rooted(p_, c)
                                            : distinct_roots_above(chain_, c);
  }

  void bisect() {
    const rational mid = (lo_ + hi_) / 2;
    if (above(mid) > 0)
      lo_ = mid;
    else
      hi_ = mid;
  }
  void refine(const rational& width) {
    while (hi_ - lo_ > width) bisect();
  }
  /// Narrows until (lo, hi] holds exactly one root counted with multiplicity
  /// (Descartes) or one distinct root (Sturm). Gives up after `max_steps`.
  bool isolate(int max_steps = 400) {
    for (int i = 0; i < max_steps; ++i) {
      if (above(lo_) == 1) return true;
      bisect();
    }
    return above(lo_) == 1;
  }

  /// Exact three-way comparison of two largest roots.
  friend int compare(certified_root a, certified_root b) {
    const rational fine = rational(1, bigint(1) << 60);
    while (true) {
      if (a.hi_ <= b.lo_) return -1;
      if (b.hi_ <= a.lo_) return 1;
      if (a.width() <= fine && b.width() <= fine) break;
      if (a.width() >= b.width())
        a.bisect();
      else
        b.bisect();
    }
    // Still overlapping at 2^-60: decide equality exactly.
    a.make_simple();
    b.make_simple();
    const rational lo = a.lo_ > b.lo_ ? a.lo_ : b.lo_;
    const rational hi = a.hi_ < b.hi_ ? a.hi_ : b.hi_;
    if (lo < hi) {
      const int_poly g = gcd(a.p_, b.p_);
      if (g.degree() >= 1) {
        const auto chain = sturm_chain(g);
        if (distinct_roots_above(chain, lo) > distinct_roots_above(chain, hi)) return 0;
      }
    }
    // Different numbers: separate them.
    for (int i = 0; i < 4000; ++i) {
      if (a.hi_ <= b.lo_) return -1;
      if (b.hi_ <= a.lo_) return 1;
      a.bisect();
      b.bisect();
    }
    throw domain_error("failed to separate certified roots");
  }

  /// Dyadic grid step 2^-k with 2^-k <= w.
  static rational dyadic_at_most(const rational& w) {
    rational g = 1;
    while (g > w) g /= 2;
    while (g * 2 <= w) g *= 2;
    return g;
  }
  /// Nearest multiple of `grid` to x.
  static rational to_dyadic(double x, const rational& grid) {
    const double steps = std::floor(x / grid.convert_to<double>() + 0.5);
    if (!std::isfinite(steps)) return 0;
    return rational(bigint(static_cast<long long>(steps))) * grid;
  }

 private:
  // Replace the polynomial by its square-free part when the bracket does not
  // isolate a single root, so that it does.
  void make_simple() {
    if (isolate(200)) return;
    const int_poly g = gcd(p_, p_.derivative());
    if (g.degree() >= 1) {
      auto qr = (bigint(g.leading()) * p_).divmod(g);
      if (qr && qr->second.is_zero()) {
        p_ = qr->first.primitive();
        if (how_ == root_counting::sturm) chain_ = sturm_chain(p_);
      }
    }
    if (!isolate(400)) throw domain_error("could not isolate root of " + p_.to_string());
  }

  int_poly p_;
  std::vector<int_poly> chain_;
  rational lo_ = 0;
  rational hi_ = 0;
  root_counting how_ = root_counting::descartes;
};

}  // namespace specturan
