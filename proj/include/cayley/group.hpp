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

#ifndef CAYLEY_GROUP_HPP
#define CAYLEY_GROUP_HPP

// Finite groups as explicit multiplication tables.
//
// Groups are built from permutation generators by breadth-first closure.
// Permutations compose left to right: in the product g*h, g acts first.
// Element 0 is always the identity and the indexing is the BFS discovery
// order with generators applied in their input order.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint16_t>;  // 0-based images

inline constexpr std::size_t kDefaultGroupCap = 5040;

// ---------------------------------------------------------------------------
// Cycle notation

namespace detail {

inline std::vector<std::vector<int>> parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw InputError("empty permutation string");
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("malformed cycle notation: '" + text + "'");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw InputError("unterminated cycle in '" + text + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("malformed cycle notation: '" + text + "'");
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 60000) throw InputError("point out of range in '" + text + "'");
        ++i;
      }
      if (value < 1) throw InputError("points must be positive in '" + text + "'");
      cycle.push_back(static_cast<int>(value));
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  // Points may not repeat across the whole product of disjoint cycles.
  std::vector<int> seen;
  for (const auto& c : cycles) seen.insert(seen.end(), c.begin(), c.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InputError("cycles are not disjoint in '" + text + "'");
  return cycles;
}

inline int max_point(const std::vector<std::vector<int>>& cycles) {
  int d = 0;
  for (const auto& c : cycles)
    for (int p : c) d = std::max(d, p);
  return d;
}

inline Permutation cycles_to_permutation(const std::vector<std::vector<int>>& cycles,
                                         std::size_t degree) {
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), std::uint16_t{0});
  for (const auto& c : cycles) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      const int from = c[j] - 1;
      const int to = c[(j + 1) % c.size()] - 1;
      perm[static_cast<std::size_t>(from)] = static_cast<std::uint16_t>(to);
    }
  }
  return perm;
}

}  // namespace detail

/// Canonical disjoint cycle notation: each cycle starts at its least point,
/// cycles ordered by that point, fixed points omitted, identity is "()".
inline std::string format_cycles(const Permutation& perm) {
  std::ostringstream out;
  std::vector<bool> done(perm.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == start) continue;
    any = true;
    out << '(';
    std::size_t p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first) out << ' ';
      out << (p + 1);
      first = false;
      p = perm[p];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

// ---------------------------------------------------------------------------
// Group specifications

struct GroupSpec {
  enum class Kind { kPermutationGenerators, kNamedFamily, kDirectProduct };

  Kind kind = Kind::kPermutationGenerators;
  std::vector<std::string> generators;  // cycle notation
  std::string family;
  std::vector<int> params;
  std::vector<GroupSpec> factors;  // exactly two for a direct product

  static GroupSpec from_generators(std::vector<std::string> gens) {
    GroupSpec s;
    s.kind = Kind::kPermutationGenerators;
    s.generators = std::move(gens);
    return s;
  }
  static GroupSpec named(std::string name, std::vector<int> params = {}) {
    GroupSpec s;
    s.kind = Kind::kNamedFamily;
    s.family = std::move(name);
    s.params = std::move(params);
    return s;
  }
  static GroupSpec product(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.kind = Kind::kDirectProduct;
    s.factors = {std::move(a), std::move(b)};
    return s;
  }

  std::string describe() const {
    std::ostringstream out;
    switch (kind) {
      case Kind::kPermutationGenerators: {
        out << "<";
        for (std::size_t i = 0; i < generators.size(); ++i)
          out << (i ? ", " : "") << generators[i];
        out << ">";
        break;
      }
      case Kind::kNamedFamily: {
        out << family << "(";
        for (std::size_t i = 0; i < params.size(); ++i) out << (i ? "," : "") << params[i];
        out << ")";
        break;
      }
      case Kind::kDirectProduct:
        out << factors.at(0).describe() << " x " << factors.at(1).describe();
        break;
    }
    return out.str();
  }
};

namespace detail {

struct PermutationGenerators {
  std::size_t degree = 1;
  std::vector<Permutation> gens;
};

inline bool is_prime_small(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::string cycle_string(const std::vector<int>& points) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < points.size(); ++i) out << (i ? " " : "") << points[i];
  out << ')';
  return out.str();
}

inline std::vector<int> range_points(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

// Dicyclic group of order 4n in its regular representation: elements
// a^i b^j (0 <= i < 2n, j in {0,1}) with b^2 = a^n and b a b^-1 = a^-1.
inline PermutationGenerators dicyclic_regular(int n) {
  const int two_n = 2 * n;
  const int order = 4 * n;
  auto index = [two_n](int i, int j) { return ((i % two_n + two_n) % two_n) + two_n * j; };
  auto multiply = [&](int x, int y) {
    const int i = x % two_n, j = x / two_n, k = y % two_n, l = y / two_n;
    if (j == 0) return index(i + k, l);
    if (l == 1) return index(i - k + n, 0);
    return index(i - k, 1);
  };
  PermutationGenerators out;
  out.degree = static_cast<std::size_t>(order);
  for (int g : {index(1, 0), index(0, 1)}) {
    Permutation perm(out.degree);
    for (int h = 0; h < order; ++h) perm[static_cast<std::size_t>(h)] = static_cast<std::uint16_t>(multiply(g, h));
    out.gens.push_back(std::move(perm));
  }
  return out;
}

inline PermutationGenerators from_cycle_strings(const std::vector<std::string>& strings) {
  std::vector<std::vector<std::vector<int>>> parsed;
  int degree = 1;
  for (const auto& s : strings) {
    parsed.push_back(parse_cycles(s));
    degree = std::max(degree, max_point(parsed.back()));
  }
  PermutationGenerators out;
  out.degree = static_cast<std::size_t>(degree);
  for (const auto& c : parsed) out.gens.push_back(cycles_to_permutation(c, out.degree));
  return out;
}

inline int require_param(const GroupSpec& spec, std::size_t count) {
  if (spec.params.size() != count)
    throw InputError("family '" + spec.family + "' expects " + std::to_string(count) +
                     " parameter(s)");
  return spec.params[0];
}

inline PermutationGenerators family_generators(const GroupSpec& spec) {
  const std::string& f = spec.family;
  if (f == "cyclic") {
    const int n = require_param(spec, 1);
    if (n < 1) throw InputError("cyclic(n) requires n >= 1");
    if (n == 1) return {};
    return from_cycle_strings({cycle_string(range_points(1, n))});
  }
  if (f == "dihedral") {
    // dihedral(n) is the symmetry group of the n-gon, of order 2n.
    const int n = require_param(spec, 1);
    if (n < 1) throw InputError("dihedral(n) requires n >= 1");
    if (n == 1) return from_cycle_strings({"(1 2)"});
    if (n == 2) return from_cycle_strings({"(1 2)(3 4)", "(1 3)(2 4)"});
    std::string reflection;
    for (int i = 1; i < n + 1 - i; ++i) reflection += cycle_string({i, n + 1 - i});
    return from_cycle_strings({cycle_string(range_points(1, n)), reflection});
  }
  if (f == "symmetric") {
    const int n = require_param(spec, 1);
    if (n < 1 || n > 7) throw InputError("symmetric(n) supports 1 <= n <= 7");
    if (n == 1) return {};
    if (n == 2) return from_cycle_strings({"(1 2)"});
    return from_cycle_strings({"(1 2)", cycle_string(range_points(1, n))});
  }
  if (f == "alternating") {
    const int n = require_param(spec, 1);
    if (n < 1 || n > 7) throw InputError("alternating(n) supports 1 <= n <= 7");
    if (n <= 2) return {};
    if (n == 3) return from_cycle_strings({"(1 2 3)"});
    const std::string long_cycle =
        n % 2 == 1 ? cycle_string(range_points(1, n)) : cycle_string(range_points(2, n));
    return from_cycle_strings({"(1 2 3)", long_cycle});
  }
  if (f == "quaternion") {
    if (!spec.params.empty() && (spec.params.size() != 1 || spec.params[0] != 8))
      throw InputError("quaternion(n) supports only n = 8");
    return dicyclic_regular(2);
  }
  if (f == "generalized-quaternion") {
    const int n = require_param(spec, 1);
    if (n < 8 || (n & (n - 1)) != 0)
      throw InputError("generalized-quaternion(n) requires n a power of two, n >= 8");
    return dicyclic_regular(n / 4);
  }
  if (f == "elementary-abelian") {
    if (spec.params.size() != 2) throw InputError("elementary-abelian expects (p, k)");
    const int p = spec.params[0], k = spec.params[1];
    if (!is_prime_small(p)) throw InputError("elementary-abelian(p, k) requires p prime");
    if (k < 1) throw InputError("elementary-abelian(p, k) requires k >= 1");
    if (static_cast<long>(p) * k > 60000) throw InputError("elementary-abelian degree too large");
    std::vector<std::string> gens;
    for (int i = 0; i < k; ++i) gens.push_back(cycle_string(range_points(i * p + 1, i * p + p)));
    return from_cycle_strings(gens);
  }
  throw InputError("unknown group family '" + f + "'");
}

inline PermutationGenerators to_permutation_generators(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::kPermutationGenerators:
      return from_cycle_strings(spec.generators);
    case GroupSpec::Kind::kNamedFamily:
      return family_generators(spec);
    case GroupSpec::Kind::kDirectProduct: {
      if (spec.factors.size() != 2) throw InputError("direct product needs exactly two factors");
      const auto a = to_permutation_generators(spec.factors[0]);
      const auto b = to_permutation_generators(spec.factors[1]);
      PermutationGenerators out;
      out.degree = a.degree + b.degree;
      if (out.degree > 60000) throw InputError("direct product degree too large");
      for (const auto& g : a.gens) {
        Permutation p(out.degree);
        std::iota(p.begin(), p.end(), std::uint16_t{0});
        std::copy(g.begin(), g.end(), p.begin());
        out.gens.push_back(std::move(p));
      }
      for (const auto& g : b.gens) {
        Permutation p(out.degree);
        std::iota(p.begin(), p.end(), std::uint16_t{0});
        for (std::size_t i = 0; i < g.size(); ++i)
          p[a.degree + i] = static_cast<std::uint16_t>(g[i] + a.degree);
        out.gens.push_back(std::move(p));
      }
      return out;
    }
  }
  throw InputError("unknown group spec kind");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Group

/// A finite group stored as its full Cayley table.
struct Group {
  std::size_t n = 1;
  std::vector<Element> mul{0};  // row-major n x n
  std::vector<Element> inv{0};
  std::vector<std::uint32_t> orders{1};
  std::uint64_t exponent = 1;
  std::vector<Permutation> permutations;  // faithful permutation for each element

  static constexpr Element identity = 0;

  Element product(Element a, Element b) const { return mul[std::size_t{a} * n + b]; }
  Element inverse(Element a) const { return inv[a]; }
  std::uint32_t order_of(Element a) const { return orders[a]; }
  std::string label(Element a) const { return format_cycles(permutations[a]); }

  /// Looks up an element from cycle notation; throws InputError if absent.
  Element find(const std::string& cycles) const {
    const auto parsed = detail::parse_cycles(cycles);
    const std::size_t degree = permutations.empty() ? 1 : permutations.front().size();
    if (static_cast<std::size_t>(detail::max_point(parsed)) > degree)
      throw InputError("element '" + cycles + "' moves points outside the group's domain");
    const Permutation perm = detail::cycles_to_permutation(parsed, degree);
    for (std::size_t g = 0; g < n; ++g)
      if (permutations[g] == perm) return static_cast<Element>(g);
    throw InputError("element '" + cycles + "' is not in the group");
  }
};

inline std::uint32_t element_order(Element g, const Group& group) {
  if (g >= group.n) throw InputError("element index out of range");
  std::uint32_t k = 1;
  Element x = g;
  while (x != Group::identity) {
    x = group.product(x, g);
    ++k;
  }
  return k;
}

inline std::uint64_t exponent(const Group& group) {
  std::uint64_t m = 1;
  for (std::uint32_t o : group.orders) m = std::lcm(m, std::uint64_t{o});
  return m;
}

/// g^t for any integer t, by repeated squaring on the table.
inline Element power_of(Element g, long long t, const Group& group) {
  const long long order = group.orders[g];
  long long e = ((t % order) + order) % order;
  Element result = Group::identity;
  Element base = g;
  while (e > 0) {
    if (e & 1) result = group.product(result, base);
    base = group.product(base, base);
    e >>= 1;
  }
  return result;
}

struct BuildOptions {
  std::size_t size_cap = kDefaultGroupCap;
};

inline Group build_group(const GroupSpec& spec, const BuildOptions& options = {}) {
  const auto pg = detail::to_permutation_generators(spec);
  const std::size_t degree = pg.degree;
  const std::size_t ngens = pg.gens.size();

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), std::uint16_t{0});

  std::vector<Permutation> elements{identity};
  std::map<Permutation, Element> index{{identity, 0}};
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  std::vector<Element> right_by_gen;  // right_by_gen[g * ngens + s] = g * gen_s

  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = b[a[i]];
    return c;
  };

  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t s = 0; s < ngens; ++s) {
      Permutation next = compose(elements[head], pg.gens[s]);
      auto it = index.find(next);
      Element idx;
      if (it == index.end()) {
        if (elements.size() >= options.size_cap)
          throw InputError("group size exceeds cap of " + std::to_string(options.size_cap) +
                           " elements");
        idx = static_cast<Element>(elements.size());
        index.emplace(next, idx);
        elements.push_back(std::move(next));
        parent.push_back(static_cast<Element>(head));
        via.push_back(s);
      } else {
        idx = it->second;
      }
      right_by_gen.push_back(idx);
    }
  }

  Group g;
  g.n = elements.size();
  const std::size_t n = g.n;
  g.mul.assign(n * n, 0);
  // Row a: a*b = (a*parent(b)) * gen(b); parents precede children in BFS order.
  for (std::size_t a = 0; a < n; ++a) {
    Element* row = &g.mul[a * n];
    row[0] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = right_by_gen[std::size_t{row[parent[b]]} * ngens + via[b]];
  }
  g.inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const Element* row = &g.mul[a * n];
    for (std::size_t b = 0; b < n; ++b) {
      if (row[b] == 0) {
        g.inv[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  g.permutations = std::move(elements);
  g.orders.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) g.orders[a] = element_order(static_cast<Element>(a), g);
  g.exponent = exponent(g);
  return g;
}

/// Group axioms on the table: exhaustive associativity up to 200 elements,
/// a fixed-seed sample of triples above that.
inline bool check_group_axioms(const Group& g, std::size_t samples = 200000) {
  const std::size_t n = g.n;
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Element>(a);
    if (g.product(0, x) != x || g.product(x, 0) != x) return false;
    if (g.product(x, g.inverse(x)) != 0 || g.product(g.inverse(x), x) != 0) return false;
    if (g.orders[a] == 0 || g.exponent % g.orders[a] != 0) return false;
  }
  auto assoc = [&](Element a, Element b, Element c) {
    return g.product(g.product(a, b), c) == g.product(a, g.product(b, c));
  };
  if (n <= 200) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < samples; ++i)
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Conjugacy classes

struct ClassData {
  std::vector<std::vector<Element>> classes;  // each sorted; class 0 = {identity}
  std::vector<std::uint32_t> class_of;
  std::vector<Element> representatives;  // least index in each class
  std::vector<std::uint32_t> inverse_class;
  std::uint64_t modulus = 1;               // group exponent m
  std::vector<std::uint32_t> power_table;  // k x m

  std::size_t count() const { return classes.size(); }
  std::size_t size(std::size_t j) const { return classes[j].size(); }

  /// Class of the t-th power of the representative of class j; t is any integer.
  std::uint32_t power_class(std::size_t j, long long t) const {
    const auto m = static_cast<long long>(modulus);
    const long long r = ((t % m) + m) % m;
    return power_table[j * modulus + static_cast<std::size_t>(r)];
  }
};

inline ClassData conjugacy_classes(const Group& g) {
  ClassData cd;
  const std::size_t n = g.n;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  cd.class_of.assign(n, kUnset);
  for (std::size_t h = 0; h < n; ++h) {
    if (cd.class_of[h] != kUnset) continue;
    const auto j = static_cast<std::uint32_t>(cd.classes.size());
    std::vector<Element> members;
    for (std::size_t x = 0; x < n; ++x) {
      const Element c = g.product(g.product(g.inverse(static_cast<Element>(x)), static_cast<Element>(h)),
                                  static_cast<Element>(x));
      if (cd.class_of[c] == kUnset) {
        cd.class_of[c] = j;
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    cd.representatives.push_back(members.front());
    cd.classes.push_back(std::move(members));
  }
  const std::size_t k = cd.classes.size();
  cd.inverse_class.resize(k);
  for (std::size_t j = 0; j < k; ++j) cd.inverse_class[j] = cd.class_of[g.inverse(cd.representatives[j])];

  cd.modulus = g.exponent;
  cd.power_table.assign(k * cd.modulus, 0);
  for (std::size_t j = 0; j < k; ++j) {
    const Element rep = cd.representatives[j];
    Element p = Group::identity;
    for (std::size_t t = 0; t < cd.modulus; ++t) {
      cd.power_table[j * cd.modulus + t] = cd.class_of[p];
      p = g.product(p, rep);
    }
  }
  return cd;
}

}  // namespace cayley

#endif  // CAYLEY_GROUP_HPP
