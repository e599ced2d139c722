#pragma once

// Exact characteristic polynomials of small integer matrices.
//
// det(xI - M) is computed modulo a sequence of 31-bit primes by similarity
// reduction to upper Hessenberg form, and the residues are combined by the
// Chinese remainder theorem. Enough primes are used to exceed twice the bound
// |c_k| <= C(n,k) R^k, where R is the largest absolute row sum of M (every
// eigenvalue has modulus at most R).

#include <cmath>
#include <cstdint>
#include <vector>

#include "specturan/graph.hpp"
#include "specturan/poly.hpp"

namespace specturan {

using int_matrix = std::vector<std::vector<std::int64_t>>;

template <std::size_t W>
int_matrix adjacency_matrix(const basic_graph<W>& g) {
  const std::size_t n = g.order();
  int_matrix a(n, std::vector<std::int64_t>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Primes descending from 2^31 - 1, generated once.
inline const std::vector<std::uint64_t>& crt_primes(std::size_t count) {
  static thread_local std::vector<std::uint64_t> primes;
  std::uint64_t next = primes.empty() ? (std::uint64_t{1} << 31) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    if (is_prime_u32(next)) primes.push_back(next);
    next -= 2;
  }
  return primes;
}

/// Coefficients of det(xI - M) mod p, ascending; size n + 1.
inline std::vector<std::uint64_t> charpoly_mod(const int_matrix& m, std::uint64_t p) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t v = m[i][j] % static_cast<std::int64_t>(p);
      h[i][j] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const std::uint64_t inv = powmod(h[j + 1][j], p - 2, p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      const std::uint64_t u = mulmod(h[i][j], inv, p);
      // row_i -= u * row_{j+1}
      for (std::size_t c = 0; c < n; ++c) h[i][c] = (h[i][c] + p - mulmod(u, h[j + 1][c], p)) % p;
      // col_{j+1} += u * col_i
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + mulmod(u, h[r][i], p)) % p;
    }
  }

  // p_k(x) = (x - h_kk) p_{k-1}(x) - sum_{i<k} h_ik (prod_{l=i+1..k} h_{l,l-1}) p_{i-1}(x)
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t kk = k - 1;  // 0-based row/column of the new block entry
    std::vector<std::uint64_t> next(k + 1, 0);
    const auto& prev = polys[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = (next[d + 1] + prev[d]) % p;
      next[d] = (next[d] + p - mulmod(h[kk][kk], prev[d], p)) % p;
    }
    std::uint64_t t = 1;
    for (std::size_t i = kk; i-- > 0;) {
      t = mulmod(t, h[i + 1][i], p);
      if (t == 0) break;
      const std::uint64_t coef = mulmod(h[i][kk], t, p);
      if (coef == 0) continue;
      const auto& q = polys[i];
      for (std::size_t d = 0; d < q.size(); ++d) next[d] = (next[d] + p - mulmod(coef, q[d], p)) % p;
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

}  // namespace detail

/// Exact det(xI - M) for a square integer matrix.
inline int_poly characteristic_polynomial(const int_matrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw domain_error("characteristic polynomial needs a square matrix");
  if (n == 0) return int_poly::constant(1);

  double row_bound = 0.0;
  for (const auto& row : m) {
    double s = 0.0;
    for (auto v : row) s += std::fabs(static_cast<double>(v));
    row_bound = std::max(row_bound, s);
  }
  // log2 of (1 + R)^n, plus sign and slack.
  const double bits = static_cast<double>(n) * std::log2(1.0 + row_bound) + 64.0;
  const auto count = static_cast<std::size_t>(std::ceil(bits / 30.0)) + 1;
  const auto& primes = detail::crt_primes(count);

  std::vector<bigint> value(n + 1, 0);
  bigint modulus = 1;
  for (std::size_t pi = 0; pi < count; ++pi) {
    const std::uint64_t p = primes[pi];
    const auto res = detail::charpoly_mod(m, p);
    const std::uint64_t mod_p = static_cast<std::uint64_t>(modulus % p);
    const std::uint64_t inv = detail::powmod(mod_p, p - 2, p);
    for (std::size_t k = 0; k <= n; ++k) {
      const std::uint64_t cur = static_cast<std::uint64_t>(value[k] % p);
      const std::uint64_t delta = detail::mulmod((res[k] + p - cur) % p, inv, p);
      value[k] += modulus * delta;
    }
    modulus *= p;
  }
  const bigint half = modulus / 2;
  for (auto& v : value)
    if (v > half) v -= modulus;
  return int_poly(std::move(value));
}

template <std::size_t W>
int_poly characteristic_polynomial(const basic_graph<W>& g) {
  return characteristic_polynomial(adjacency_matrix(g));
}

/// Fraction-free (Bareiss) determinant with exact integers.
inline bigint bareiss_determinant(const int_matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<bigint>> a(n, std::vector<bigint>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  bigint prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace specturan
