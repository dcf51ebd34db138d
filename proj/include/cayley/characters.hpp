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

#ifndef CAYLEY_CHARACTERS_HPP
#define CAYLEY_CHARACTERS_HPP

// Exact complex character tables by the Burnside-Dixon method.
//
// The class matrices are diagonalised simultaneously over F_p with
// p = 1 (mod m); each mod-p character value is then lifted to Z[eta] by
// recovering the eigenvalue multiplicities of rho(g) with a discrete Fourier
// transform over the powers of g. Every table is checked against both
// orthogonality relations before it is returned.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cayley/cyclotomic.hpp"
#include "cayley/error.hpp"
#include "cayley/galois.hpp"
#include "cayley/group.hpp"
#include "cayley/modp.hpp"

namespace cayley {

/// Structure constants of the class sums: mats[i][j][l] is the number of
/// pairs (a, b) with a in class i, b in class j and ab the representative of
/// class l.
struct ClassMatrices {
  std::size_t k = 0;
  std::vector<std::uint64_t> sizes;
  std::vector<std::vector<std::vector<std::int64_t>>> mats;

  std::int64_t coefficient(std::size_t i, std::size_t j, std::size_t l) const { return mats[i][j][l]; }
};

inline ClassMatrices class_matrices(const Group& g, const ClassData& cd) {
  ClassMatrices cm;
  cm.k = cd.count();
  for (std::size_t j = 0; j < cm.k; ++j) cm.sizes.push_back(cd.size(j));
  cm.mats.assign(cm.k, std::vector<std::vector<std::int64_t>>(cm.k, std::vector<std::int64_t>(cm.k, 0)));
  for (std::size_t i = 0; i < cm.k; ++i)
    for (Element a : cd.classes[i]) {
      const Element a_inv = g.inverse(a);
      for (std::size_t l = 0; l < cm.k; ++l) {
        const Element b = g.product(a_inv, cd.representatives[l]);
        ++cm.mats[i][cd.class_of[b]][l];
      }
    }
  return cm;
}

struct CharacterTable {
  std::uint64_t m = 1;
  std::uint64_t prime = 0;  // the prime used for the modular computation
  CycContextPtr ctx;
  std::vector<std::int64_t> degrees;
  std::vector<std::vector<CycInt>> values;  // values[chi][class]

  std::size_t count() const { return degrees.size(); }
};

/// Sum over classes of |class| * a(g_j) * conj(b(g_j)).
inline CycInt class_inner_product(const std::vector<CycInt>& a, const std::vector<CycInt>& b,
                                  const ClassData& cd) {
  CycInt sum(a.at(0).context());
  for (std::size_t j = 0; j < cd.count(); ++j)
    sum += (a[j] * conj(b[j])) * Integer(cd.size(j));
  return sum;
}

struct OrthogonalityReport {
  bool rows = true;
  bool columns = true;
  bool degree_sum = true;
  bool ok() const { return rows && columns && degree_sum; }
};

inline OrthogonalityReport check_orthogonality(const CharacterTable& ct, const ClassData& cd,
                                               std::uint64_t group_order) {
  OrthogonalityReport r;
  const std::size_t k = cd.count();
  const CycInt zero(ct.ctx);
  if (ct.count() != k) {
    r.rows = r.columns = r.degree_sum = false;
    return r;
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      const CycInt expected =
          a == b ? CycInt::from_integer(ct.ctx, Integer(group_order)) : zero;
      if (!(class_inner_product(ct.values[a], ct.values[b], cd) == expected)) r.rows = false;
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = i; l < k; ++l) {
      CycInt sum(ct.ctx);
      for (std::size_t c = 0; c < k; ++c) sum += ct.values[c][i] * conj(ct.values[c][l]);
      const CycInt expected =
          i == l ? CycInt::from_integer(ct.ctx, Integer(group_order / cd.size(i))) : zero;
      if (!(sum == expected)) r.columns = false;
    }
  std::uint64_t total = 0;
  for (auto d : ct.degrees) total += static_cast<std::uint64_t>(d * d);
  r.degree_sum = total == group_order;
  return r;
}

namespace detail {

// Splits F_p^k into the common eigenspaces of the class matrices, processing
// the matrices in index order. Subspaces are kept as RREF row bases.
inline std::vector<modp::Matrix> split_eigenspaces(const ClassMatrices& cm, const modp::Field& f) {
  const std::size_t k = cm.k;
  modp::Matrix full(k, modp::Vector(k, 0));
  for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
  std::vector<modp::Matrix> spaces{full};

  for (std::size_t mi = 0; mi < k; ++mi) {
    const auto& mat = cm.mats[mi];
    std::vector<modp::Matrix> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      const auto pivots = modp::rref(basis, f);
      const std::size_t d = basis.size();
      // Restriction of the matrix to the invariant subspace: column c holds
      // the coordinates of mat * basis[c], read off at the pivot columns.
      std::vector<modp::Vector> images(d, modp::Vector(k, 0));
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t row = 0; row < k; ++row) {
          modp::Residue s = 0;
          for (std::size_t col = 0; col < k; ++col)
            if (mat[row][col] != 0 && basis[c][col] != 0)
              s = f.add(s, f.mul(f.norm(mat[row][col]), basis[c][col]));
          images[c][row] = s;
        }
      modp::Matrix restricted(d, modp::Vector(d, 0));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) restricted[r][c] = images[c][pivots[r]];

      const auto roots = modp::roots_by_scan(modp::characteristic_polynomial(restricted, f), f);
      std::size_t covered = 0;
      for (auto lambda : roots) {
        modp::Matrix shifted = restricted;
        for (std::size_t r = 0; r < d; ++r) shifted[r][r] = f.sub(shifted[r][r], lambda);
        const auto kernel = modp::nullspace(shifted, d, f);
        modp::Matrix sub;
        for (const auto& coords : kernel) {
          modp::Vector v(k, 0);
          for (std::size_t c = 0; c < d; ++c)
            if (coords[c] != 0)
              for (std::size_t j = 0; j < k; ++j) v[j] = f.add(v[j], f.mul(coords[c], basis[c][j]));
          sub.push_back(std::move(v));
        }
        covered += sub.size();
        modp::rref(sub, f);
        next.push_back(std::move(sub));
      }
      if (covered != d)
        throw ConsistencyError("class matrix is not diagonalisable over F_" + std::to_string(f.p));
    }
    spaces = std::move(next);
  }
  return spaces;
}

inline bool values_less(const std::vector<CycInt>& a, const std::vector<CycInt>& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto& x = a[j].coeffs();
    const auto& y = b[j].coeffs();
    if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
  return false;
}

}  // namespace detail

inline CharacterTable dixon_character_table(const Group& g, const ClassData& cd,
                                            const ClassMatrices& cm) {
  const std::uint64_t order = g.n;
  const std::uint64_t m = cd.modulus;
  const std::size_t k = cd.count();
  const auto root_bound = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));

  CharacterTable ct;
  ct.m = m;
  ct.ctx = CycContext::make(m);
  ct.prime = modp::least_prime_congruent_one(m, 2 * root_bound);
  const modp::Field f{static_cast<modp::Residue>(ct.prime)};
  const modp::Residue zeta = f.pow(modp::primitive_root(f), (ct.prime - 1) / m);

  const auto spaces = detail::split_eigenspaces(cm, f);
  if (spaces.size() != k)
    throw ConsistencyError("eigenspace splitting produced " + std::to_string(spaces.size()) +
                           " characters for " + std::to_string(k) + " classes");

  std::vector<std::int64_t> degrees;
  std::vector<std::vector<CycInt>> values;
  for (const auto& space : spaces) {
    if (space.size() != 1) throw ConsistencyError("common eigenspace is not one-dimensional");
    const modp::Vector& v = space.front();
    if (v[0] == 0) throw ConsistencyError("central character vanishes on the identity class");
    const modp::Residue scale = f.inv(v[0]);
    modp::Vector omega(k);
    for (std::size_t j = 0; j < k; ++j) omega[j] = f.mul(v[j], scale);

    // chi(1)^2 = |G| / sum_j omega_j omega_{j*} / |class j|
    modp::Residue s = 0;
    for (std::size_t j = 0; j < k; ++j)
      s = f.add(s, f.mul(f.mul(omega[j], omega[cd.inverse_class[j]]),
                         f.inv(f.norm(static_cast<std::int64_t>(cd.size(j))))));
    const modp::Residue deg_sq = f.mul(f.norm(static_cast<std::int64_t>(order)), f.inv(s));
    std::int64_t degree = 0;
    for (std::int64_t d = 1; static_cast<std::uint64_t>(d * d) <= order; ++d)
      if (f.norm(d * d) == deg_sq) {
        degree = d;
        break;
      }
    if (degree == 0) throw ConsistencyError("no integer character degree lifts the modular value");

    modp::Vector chi(k);
    for (std::size_t j = 0; j < k; ++j)
      chi[j] = f.mul(f.mul(f.norm(degree), omega[j]),
                     f.inv(f.norm(static_cast<std::int64_t>(cd.size(j)))));

    std::vector<CycInt> row;
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t o = g.order_of(cd.representatives[j]);
      const modp::Residue zeta_o = f.pow(zeta, m / o);
      const modp::Residue inv_o = f.inv(f.norm(static_cast<std::int64_t>(o)));
      std::vector<Integer> raw(m, 0);
      for (std::uint64_t l = 0; l < o; ++l) {
        modp::Residue acc = 0;
        for (std::uint64_t i = 0; i < o; ++i) {
          const modp::Residue tw = f.pow(zeta_o, (o - (i * l) % o) % o);
          acc = f.add(acc, f.mul(chi[cd.power_class(j, static_cast<long long>(i))], tw));
        }
        const modp::Residue mult = f.mul(acc, inv_o);
        if (mult > degree)
          throw ConsistencyError("eigenvalue multiplicity lift out of range");
        raw[l * (m / o)] += mult;
      }
      row.push_back(CycInt::reduce(std::move(raw), ct.ctx));
    }
    degrees.push_back(degree);
    values.push_back(std::move(row));
  }

  // Trivial character first, then by degree, then by value vectors.
  std::vector<std::size_t> order_idx(k);
  std::iota(order_idx.begin(), order_idx.end(), 0);
  auto is_trivial = [&](std::size_t c) {
    if (degrees[c] != 1) return false;
    for (const auto& v : values[c])
      if (!(v.as_rational() && *v.as_rational() == 1)) return false;
    return true;
  };
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    return detail::values_less(values[a], values[b]);
  });
  for (auto c : order_idx) {
    ct.degrees.push_back(degrees[c]);
    ct.values.push_back(values[c]);
  }

  if (!check_orthogonality(ct, cd, order).ok())
    throw ConsistencyError("computed character table fails the orthogonality relations");
  return ct;
}

inline CharacterTable character_table(const Group& g, const ClassData& cd) {
  return dixon_character_table(g, cd, class_matrices(g, cd));
}

/// Checks sigma_t(chi(g_j)) == chi(g_j^t) for every character, class and t in gamma.
inline bool verify_galois_character_identity(const CharacterTable& ct, const ClassData& cd,
                                             const GaloisSubgroup& gamma) {
  if (gamma.m != ct.m) throw InputError("conductor mismatch between table and Galois subgroup");
  for (std::size_t c = 0; c < ct.count(); ++c)
    for (std::size_t j = 0; j < cd.count(); ++j)
      for (auto t : gamma.elements) {
        const auto tt = static_cast<long long>(t);
        if (!(galois_apply(tt, ct.values[c][j]) == ct.values[c][cd.power_class(j, tt)])) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// Characters induced from cyclic subgroups

struct InducedCharacter {
  Element base = 0;
  std::uint32_t base_order = 1;
  std::vector<CycInt> values;  // per class, conductor m
};

/// Theta = Ind from <x> to G of the linear character theta with theta(x) = eta_{|x|}.
inline InducedCharacter induced_character_from_cyclic(Element x, const Group& g, const ClassData& cd) {
  InducedCharacter ic;
  ic.base = x;
  ic.base_order = g.order_of(x);
  const std::uint64_t m = cd.modulus;
  const std::uint64_t step = m / ic.base_order;
  const auto ctx = CycContext::make(m);

  std::vector<std::int64_t> exponent_in_cyclic(g.n, -1);
  Element p = Group::identity;
  for (std::uint32_t i = 0; i < ic.base_order; ++i) {
    exponent_in_cyclic[p] = i;
    p = g.product(p, x);
  }

  for (std::size_t j = 0; j < cd.count(); ++j) {
    const Element s = cd.representatives[j];
    std::vector<Integer> raw(m, 0);
    for (std::size_t y = 0; y < g.n; ++y) {
      const auto yy = static_cast<Element>(y);
      const Element conj_s = g.product(g.product(g.inverse(yy), s), yy);
      const std::int64_t i = exponent_in_cyclic[conj_s];
      if (i >= 0) raw[static_cast<std::size_t>(i) * step] += 1;
    }
    const auto value = CycInt::reduce(std::move(raw), ctx).divide_exact(Integer(ic.base_order));
    if (!value) throw ConsistencyError("induced character value is not divisible by |x|");
    ic.values.push_back(*value);
  }
  return ic;
}

/// Multiplicity of each irreducible character in a class function; throws if
/// some inner product is not a non-negative integer.
inline std::vector<Integer> decompose(const std::vector<CycInt>& values, const CharacterTable& ct,
                                      const ClassData& cd, std::uint64_t group_order) {
  std::vector<Integer> out;
  for (std::size_t c = 0; c < ct.count(); ++c) {
    const auto ip = class_inner_product(values, ct.values[c], cd).as_rational();
    if (!ip || *ip % group_order != 0 || *ip < 0)
      throw ConsistencyError("class function does not decompose with non-negative integer multiplicities");
    out.push_back(*ip / group_order);
  }
  return out;
}

}  // namespace cayley

#endif  // CAYLEY_CHARACTERS_HPP
