// Copyright 2026 The cayley-spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAYLEY_MODP_HPP
#define CAYLEY_MODP_HPP

// Dense linear algebra over a small prime field F_p.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "cayley/error.hpp"

namespace cayley::modp {

using Residue = std::int64_t;

struct Field {
  Residue p;

  Residue norm(std::int64_t a) const { return ((a % p) + p) % p; }
  Residue add(Residue a, Residue b) const { return (a + b) % p; }
  Residue sub(Residue a, Residue b) const { return (a - b + p) % p; }
  Residue mul(Residue a, Residue b) const { return (a * b) % p; }
  Residue pow(Residue a, std::uint64_t e) const {
    Residue r = 1;
    a = norm(a);
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Residue inv(Residue a) const {
    if (norm(a) == 0) throw ConsistencyError("inverse of zero in F_p");
    return pow(a, static_cast<std::uint64_t>(p - 2));
  }
  /// Symmetric lift to (-p/2, p/2].
  std::int64_t lift(Residue a) const { return a > p / 2 ? a - p : a; }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Least prime p with p = 1 (mod m) and p > lower.
inline std::uint64_t least_prime_congruent_one(std::uint64_t m, std::uint64_t lower) {
  std::uint64_t p = (lower / m) * m + 1;
  if (p <= lower) p += m;
  while (!is_prime(p)) p += m;
  return p;
}

/// Least primitive root modulo the prime p.
inline Residue primitive_root(const Field& f) {
  std::vector<std::uint64_t> factors;
  std::uint64_t q = static_cast<std::uint64_t>(f.p - 1);
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d) continue;
    factors.push_back(d);
    while (q % d == 0) q /= d;
  }
  if (q > 1) factors.push_back(q);
  for (Residue g = 1; g < f.p; ++g) {
    bool ok = true;
    for (auto r : factors)
      if (f.pow(g, static_cast<std::uint64_t>(f.p - 1) / r) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw ConsistencyError("no primitive root found");
}

using Matrix = std::vector<std::vector<Residue>>;
using Vector = std::vector<Residue>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& a, const Field& f) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  if (rows == 0) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    const Residue s = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Residue factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

/// Basis of {v : a v = 0}, one vector per free column.
inline std::vector<Vector> nullspace(Matrix a, std::size_t cols, const Field& f) {
  const auto pivots = rref(a, f);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(0, a[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial det(xI - a), constant term first, via reduction
/// to upper Hessenberg form.
inline Vector characteristic_polynomial(Matrix h, const Field& f) {
  const std::size_t n = h.size();
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t sel = c + 1;
    while (sel < n && h[sel][c] == 0) ++sel;
    if (sel == n) continue;
    if (sel != c + 1) {
      std::swap(h[sel], h[c + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][sel], h[i][c + 1]);
    }
    const Residue pivot_inv = f.inv(h[c + 1][c]);
    for (std::size_t i = c + 2; i < n; ++i) {
      if (h[i][c] == 0) continue;
      const Residue u = f.mul(h[i][c], pivot_inv);
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[c + 1][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][c + 1] = f.add(h[j][c + 1], f.mul(u, h[j][i]));
    }
  }
  // polys[k] = char poly of the leading k x k block.
  std::vector<Vector> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Vector next(k + 1, 0);
    const Vector& prev = polys[k - 1];
    for (std::size_t j = 0; j < prev.size(); ++j) {
      next[j + 1] = f.add(next[j + 1], prev[j]);
      next[j] = f.sub(next[j], f.mul(h[k - 1][k - 1], prev[j]));
    }
    Residue prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = f.mul(prod, h[i + 1][i]);
      const Residue coef = f.mul(prod, h[i][k - 1]);
      for (std::size_t j = 0; j < polys[i].size(); ++j)
        next[j] = f.sub(next[j], f.mul(coef, polys[i][j]));
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

inline Residue evaluate(const Vector& poly, Residue x, const Field& f) {
  Residue r = 0;
  for (std::size_t j = poly.size(); j-- > 0;) r = f.add(f.mul(r, x), poly[j]);
  return r;
}

/// Distinct roots in F_p by scanning every residue.
inline std::vector<Residue> roots_by_scan(const Vector& poly, const Field& f) {
  std::vector<Residue> roots;
  for (Residue x = 0; x < f.p; ++x)
    if (evaluate(poly, x, f) == 0) roots.push_back(x);
  return roots;
}

}  // namespace cayley::modp

#endif  // CAYLEY_MODP_HPP
