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

#ifndef CAYLEY_GALOIS_HPP
#define CAYLEY_GALOIS_HPP

// Subgroups of (Z/mZ)^*, which stand in for the subfields of the m-th
// cyclotomic field, and the conjugacy relations they induce on a group.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/group.hpp"

namespace cayley {

/// Residue of t modulo m. The single unit modulo 1 is written as 1.
inline std::uint64_t unit_residue(long long t, std::uint64_t m) {
  if (m == 1) return 1;
  const auto mm = static_cast<long long>(m);
  return static_cast<std::uint64_t>(((t % mm) + mm) % mm);
}

struct GaloisSubgroup {
  std::uint64_t m = 1;
  std::vector<std::uint64_t> generators;
  std::vector<std::uint64_t> elements;  // sorted, contains 1

  std::size_t order() const { return elements.size(); }
  bool contains(long long t) const {
    return std::binary_search(elements.begin(), elements.end(), unit_residue(t, m));
  }
  bool operator==(const GaloisSubgroup& o) const { return m == o.m && elements == o.elements; }
};

inline GaloisSubgroup subgroup_closure(std::uint64_t m, std::span<const long long> gens) {
  if (m == 0) throw InputError("modulus must be positive");
  GaloisSubgroup h;
  h.m = m;
  for (long long g : gens) {
    const std::uint64_t r = unit_residue(g, m);
    if (std::gcd(r, m) != 1)
      throw InputError("Galois generator " + std::to_string(g) + " is not a unit modulo " +
                       std::to_string(m));
    h.generators.push_back(r);
  }
  std::set<std::uint64_t> elems{unit_residue(1, m)};
  std::vector<std::uint64_t> frontier{unit_residue(1, m)};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t e : frontier)
      for (std::uint64_t g : h.generators) {
        const std::uint64_t p = unit_residue(static_cast<long long>((e * g) % m), m);
        if (elems.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  h.elements.assign(elems.begin(), elems.end());
  return h;
}

inline GaloisSubgroup subgroup_closure(std::uint64_t m, std::initializer_list<long long> gens) {
  return subgroup_closure(m, std::span<const long long>(gens.begin(), gens.size()));
}

/// The full unit group (Z/mZ)^*, i.e. the Galois group over the rationals.
inline GaloisSubgroup unit_group(std::uint64_t m) {
  if (m == 0) throw InputError("modulus must be positive");
  std::vector<long long> units;
  if (m == 1) units.push_back(1);
  for (std::uint64_t t = 1; t < m; ++t)
    if (std::gcd(t, m) == 1) units.push_back(static_cast<long long>(t));
  return subgroup_closure(m, units);
}

/// The trivial subgroup {1}: the whole cyclotomic field.
inline GaloisSubgroup trivial_subgroup(std::uint64_t m) { return subgroup_closure(m, {1}); }

inline GaloisSubgroup join(const GaloisSubgroup& a, const GaloisSubgroup& b) {
  std::vector<long long> gens;
  for (auto t : a.elements) gens.push_back(static_cast<long long>(t));
  for (auto t : b.elements) gens.push_back(static_cast<long long>(t));
  return subgroup_closure(a.m, gens);
}

/// Distinct cyclic subgroups <t>, ordered by their element lists.
inline std::vector<GaloisSubgroup> cyclic_subgroups(std::uint64_t m) {
  std::vector<GaloisSubgroup> out;
  for (auto t : unit_group(m).elements) {
    auto h = subgroup_closure(m, {static_cast<long long>(t)});
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.elements < y.elements; });
  return out;
}

/// Every subgroup of (Z/mZ)^*, as joins of cyclic subgroups.
inline std::vector<GaloisSubgroup> all_subgroups(std::uint64_t m) {
  const auto cyclic = cyclic_subgroups(m);
  std::vector<GaloisSubgroup> out = cyclic;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& c : cyclic) {
      auto h = join(out[i], c);
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.order() != y.order() ? x.order() < y.order() : x.elements < y.elements;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Gamma-conjugacy

struct GammaClassification {
  std::vector<std::vector<std::uint32_t>> class_groups;  // G-class indices per Gamma-class
  std::vector<std::uint32_t> gamma_of_class;             // G-class -> Gamma-class
  std::vector<std::vector<Element>> classes;             // element partition
  std::vector<std::uint32_t> class_of;                   // element -> Gamma-class
};

inline GammaClassification gamma_conjugacy_classes(const Group& g, const ClassData& cd,
                                                   const GaloisSubgroup& gamma) {
  if (gamma.m != cd.modulus)
    throw InputError("conductor mismatch: Galois subgroup is modulo " + std::to_string(gamma.m) +
                     " but the group exponent is " + std::to_string(cd.modulus));
  const std::size_t k = cd.count();
  std::vector<std::uint32_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t j = 0; j < k; ++j)
    for (auto t : gamma.elements) {
      const std::uint32_t a = find(j), b = find(cd.power_class(j, static_cast<long long>(t)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  GammaClassification out;
  out.gamma_of_class.assign(k, 0);
  std::vector<std::int64_t> slot(k, -1);
  for (std::uint32_t j = 0; j < k; ++j) {
    const std::uint32_t root = find(j);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(out.class_groups.size());
      out.class_groups.emplace_back();
    }
    out.gamma_of_class[j] = static_cast<std::uint32_t>(slot[root]);
    out.class_groups[static_cast<std::size_t>(slot[root])].push_back(j);
  }
  out.classes.resize(out.class_groups.size());
  out.class_of.assign(g.n, 0);
  for (std::size_t gi = 0; gi < out.class_groups.size(); ++gi) {
    for (auto j : out.class_groups[gi])
      for (Element e : cd.classes[j]) {
        out.classes[gi].push_back(e);
        out.class_of[e] = static_cast<std::uint32_t>(gi);
      }
    std::sort(out.classes[gi].begin(), out.classes[gi].end());
  }
  return out;
}

/// True iff the set of G-classes is a union of Gamma-classes.
inline bool is_union_of_gamma_classes(std::span<const std::uint32_t> class_indices,
                                      const GammaClassification& gc) {
  std::vector<char> in(gc.gamma_of_class.size(), 0);
  for (auto j : class_indices) in.at(j) = 1;
  for (const auto& group : gc.class_groups)
    for (auto j : group)
      if (in[j] != in[group.front()]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Power-closed sets

namespace detail {
inline std::vector<char> membership(std::span<const Element> set, std::size_t n) {
  std::vector<char> in(n, 0);
  for (Element e : set) in.at(e) = 1;
  return in;
}
}  // namespace detail

/// Every generator x^t (gcd(t, |x|) = 1) of <x> lies in C for each x in C.
inline bool is_power_closed(std::span<const Element> set, const Group& g) {
  const auto in = detail::membership(set, g.n);
  for (Element x : set) {
    const std::uint32_t o = g.order_of(x);
    for (std::uint32_t t = 1; t < o; ++t)
      if (std::gcd(t, o) == 1 && !in[power_of(x, t, g)]) return false;
  }
  return true;
}

/// Smallest power-closed superset of C, sorted.
inline std::vector<Element> power_closure(std::span<const Element> set, const Group& g) {
  auto in = detail::membership(set, g.n);
  for (Element x : set) {
    const std::uint32_t o = g.order_of(x);
    for (std::uint32_t t = 1; t < o; ++t)
      if (std::gcd(t, o) == 1) in[power_of(x, t, g)] = 1;
  }
  std::vector<Element> out;
  for (std::size_t e = 0; e < g.n; ++e)
    if (in[e]) out.push_back(static_cast<Element>(e));
  return out;
}

inline std::vector<Element> elements_of_classes(const ClassData& cd,
                                                std::span<const std::uint32_t> class_indices) {
  std::vector<Element> out;
  for (auto j : class_indices) {
    if (j >= cd.count()) throw InputError("unknown class index " + std::to_string(j));
    out.insert(out.end(), cd.classes[j].begin(), cd.classes[j].end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Lemma1Report {
  bool power_closed = false;
  bool union_of_rational_classes = false;
  bool agree() const { return power_closed == union_of_rational_classes; }
};

/// Power-closedness by the gcd test against membership in the class-orbit
/// partition under the full unit group.
inline Lemma1Report lemma1_report(const Group& g, const ClassData& cd,
                                  std::span<const std::uint32_t> class_indices) {
  Lemma1Report r;
  r.power_closed = is_power_closed(elements_of_classes(cd, class_indices), g);
  r.union_of_rational_classes =
      is_union_of_gamma_classes(class_indices, gamma_conjugacy_classes(g, cd, unit_group(cd.modulus)));
  return r;
}

inline bool check_lemma1(const Group& g, const ClassData& cd,
                         std::span<const std::uint32_t> class_indices) {
  return lemma1_report(g, cd, class_indices).agree();
}

}  // namespace cayley

#endif  // CAYLEY_GALOIS_HPP
