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

#ifndef CAYLEY_ORACLE_HPP
#define CAYLEY_ORACLE_HPP

// Brute-force verification path. Nothing here touches characters: the
// adjacency matrix is built from the definition and its spectrum comes from
// either a dense floating-point eigensolver or an exact integer
// characteristic polynomial.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cayley/cyclotomic.hpp"
#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/spectra.hpp"

namespace cayley::oracle {

inline constexpr std::size_t kDefaultOracleCap = 400;
inline constexpr std::size_t kExactBackendLimit = 64;
inline constexpr double kDefaultTolerance = 1e-8;

struct AdjacencyMatrix {
  std::size_t n = 0;
  std::vector<std::uint8_t> entries;  // row-major

  std::uint8_t at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }

  bool is_symmetric() const {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c)
        if (at(r, c) != at(c, r)) return false;
    return true;
  }
  /// Common row and column sum, or nullopt if the matrix is not regular.
  std::optional<std::size_t> regularity() const {
    std::vector<std::size_t> rows(n, 0), cols(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (at(r, c)) {
          ++rows[r];
          ++cols[c];
        }
    const std::size_t d = n ? rows[0] : 0;
    for (std::size_t i = 0; i < n; ++i)
      if (rows[i] != d || cols[i] != d) return std::nullopt;
    return d;
  }
};

/// A[g][h] = 1 iff g h^-1 is in C.
inline AdjacencyMatrix adjacency_matrix(const Group& g, std::span<const Element> connection,
                                        std::size_t cap = kDefaultOracleCap) {
  if (g.n > cap)
    throw InputError("group of order " + std::to_string(g.n) + " exceeds the oracle cap of " +
                     std::to_string(cap));
  std::vector<char> in(g.n, 0);
  for (Element e : connection) in.at(e) = 1;
  AdjacencyMatrix a;
  a.n = g.n;
  a.entries.assign(g.n * g.n, 0);
  for (std::size_t r = 0; r < g.n; ++r)
    for (std::size_t c = 0; c < g.n; ++c)
      a.entries[r * g.n + c] =
          in[g.product(static_cast<Element>(r), g.inverse(static_cast<Element>(c)))] ? 1 : 0;
  return a;
}

inline std::vector<std::complex<double>> numeric_spectrum(const AdjacencyMatrix& a) {
  if (a.n == 0) return {};
  Eigen::MatrixXd m(static_cast<Eigen::Index>(a.n), static_cast<Eigen::Index>(a.n));
  for (std::size_t r = 0; r < a.n; ++r)
    for (std::size_t c = 0; c < a.n; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a.at(r, c);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw ConsistencyError("dense eigensolver did not converge");
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

/// det(xI - A) over Z, constant term first. Berkowitz's division-free
/// recurrence over the leading principal submatrices.
inline std::vector<Integer> characteristic_polynomial(const AdjacencyMatrix& a) {
  const std::size_t n = a.n;
  std::vector<Integer> poly{1};  // highest degree first
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Integer> t(r + 2, 0);
    t[0] = 1;
    t[1] = -Integer(a.at(r, r));
    std::vector<Integer> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a.at(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer dot = 0;
      for (std::size_t j = 0; j < r; ++j)
        if (a.at(r, j)) dot += v[j];
      t[k + 2] = -dot;
      if (k + 1 == r) break;
      std::vector<Integer> next(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (a.at(i, j)) next[i] += v[j];
      v = std::move(next);
    }
    std::vector<Integer> q(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        if (t[i - j] != 0 && poly[j] != 0) q[i] += t[i - j] * poly[j];
    poly = std::move(q);
  }
  std::reverse(poly.begin(), poly.end());
  return poly;
}

/// prod over entries of (x - e_chi)^multiplicity, which must have rational
/// coefficients. Constant term first.
inline std::vector<Integer> spectrum_polynomial(const Spectrum& sp) {
  if (sp.entries.empty()) return {1};
  const auto ctx = sp.entries.front().numerator.context();
  std::vector<CycInt> poly{CycInt::from_integer(ctx, 1)};
  for (const auto& e : sp.entries) {
    const CycInt value = e.exact_value();
    for (std::uint64_t rep = 0; rep < e.multiplicity; ++rep) {
      std::vector<CycInt> next(poly.size() + 1, CycInt(ctx));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] -= value * poly[i];
      }
      poly = std::move(next);
    }
  }
  std::vector<Integer> out;
  for (const auto& c : poly) {
    auto r = c.as_rational();
    if (!r) throw ConsistencyError("spectrum polynomial has an irrational coefficient");
    out.push_back(*r);
  }
  return out;
}

struct ExactCheck {
  bool multiplicities = false;  // sum of multiplicities equals n
  bool trace = false;           // sum mult * e_chi == n [identity in C] == tr(A)
  bool second_moment = false;   // sum mult * |e_chi|^2 == n |C| == tr(A A^T)
  bool characteristic_polynomial = false;
  bool ok() const { return multiplicities && trace && second_moment && characteristic_polynomial; }
};

inline ExactCheck exact_check(const AdjacencyMatrix& a, const Spectrum& sp, const ConnectionSet& c) {
  ExactCheck r;
  const auto n = static_cast<std::uint64_t>(a.n);
  r.multiplicities = sp.total_multiplicity() == n;
  const auto ctx = sp.entries.front().numerator.context();

  // With e_chi = N_chi / d: sum d^2 e_chi = sum d N_chi and sum d^2 |e_chi|^2 = sum N_chi conj(N_chi).
  CycInt trace(ctx), moment(ctx);
  for (const auto& e : sp.entries) {
    trace += e.numerator * Integer(e.degree);
    moment += e.numerator * conj(e.numerator);
  }
  Integer diag = 0;
  for (std::size_t i = 0; i < a.n; ++i) diag += a.at(i, i);
  const Integer expected_trace = c.contains_identity ? Integer(n) : Integer(0);
  r.trace = trace == CycInt::from_integer(ctx, expected_trace) && diag == expected_trace;
  Integer frob = 0;
  for (auto v : a.entries) frob += v;
  r.second_moment = moment == CycInt::from_integer(ctx, Integer(n * c.size())) &&
                    frob == Integer(n * c.size());

  // A candidate whose values are not algebraic integers, or whose product
  // polynomial is not rational, cannot be the spectrum of an integer matrix.
  try {
    r.characteristic_polynomial = characteristic_polynomial(a) == spectrum_polynomial(sp);
  } catch (const ConsistencyError&) {
    r.characteristic_polynomial = false;
  }
  return r;
}

struct SpectrumComparison {
  bool size_mismatch = false;
  double max_distance = 0.0;
  std::optional<std::size_t> worst_index;  // position in the sorted order
  bool pass = false;
};

namespace detail {
inline void sort_spectrum(std::vector<std::complex<double>>& v) {
  // Real parts are compared on a 1e-6 grid so that rounding noise cannot
  // reorder eigenvalues that share a real part.
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    const auto ra = std::llround(a.real() * 1e6), rb = std::llround(b.real() * 1e6);
    if (ra != rb) return ra < rb;
    return a.imag() < b.imag();
  });
}
}  // namespace detail

inline SpectrumComparison compare_spectra(std::vector<std::complex<double>> exact,
                                          std::vector<std::complex<double>> numeric,
                                          double tol = kDefaultTolerance) {
  SpectrumComparison r;
  if (exact.size() != numeric.size()) {
    r.size_mismatch = true;
    return r;
  }
  detail::sort_spectrum(exact);
  detail::sort_spectrum(numeric);
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double d = std::abs(exact[i] - numeric[i]);
    if (!r.worst_index || d > r.max_distance) {
      r.max_distance = d;
      r.worst_index = i;
    }
  }
  r.pass = r.max_distance <= tol;
  return r;
}

inline SpectrumComparison compare_spectra(const Spectrum& exact,
                                          const std::vector<std::complex<double>>& numeric,
                                          double tol = kDefaultTolerance) {
  return compare_spectra(exact.expanded(), numeric, tol);
}

/// Power-closedness by literal quantifier evaluation over cyclic subgroups.
inline bool oracle_power_closed(std::span<const Element> connection, const Group& g) {
  std::set<Element> in(connection.begin(), connection.end());
  auto cyclic = [&g](Element x) {
    std::set<Element> s;
    Element p = x;
    s.insert(Group::identity);
    while (p != Group::identity) {
      s.insert(p);
      p = g.product(p, x);
    }
    return s;
  };
  for (Element x : connection) {
    const auto hx = cyclic(x);
    for (Element y : hx)
      if (cyclic(y) == hx && !in.count(y)) return false;
  }
  return true;
}

}  // namespace cayley::oracle

#endif  // CAYLEY_ORACLE_HPP
