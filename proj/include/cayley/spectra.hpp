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

#ifndef CAYLEY_SPECTRA_HPP
#define CAYLEY_SPECTRA_HPP

// Spectra of normal Cayley digraphs Cay(G, C), where C is a union of
// conjugacy classes and (g, h) is an arc iff g h^-1 lies in C.
//
// Each irreducible character chi contributes the eigenvalue
//   e_chi = (1 / chi(1)) * sum over x in C of chi(x)
// with multiplicity chi(1)^2.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayley/characters.hpp"
#include "cayley/cyclotomic.hpp"
#include "cayley/error.hpp"
#include "cayley/galois.hpp"
#include "cayley/group.hpp"

namespace cayley {

// ---------------------------------------------------------------------------
// Connection sets

struct ConnectionSet {
  std::vector<std::uint32_t> class_indices;  // sorted
  std::vector<Element> elements;             // sorted
  bool contains_identity = false;

  std::size_t size() const { return elements.size(); }
};

inline ConnectionSet connection_from_classes(const ClassData& cd, std::vector<std::uint32_t> classes) {
  for (auto j : classes)
    if (j >= cd.count()) throw InputError("unknown class index " + std::to_string(j));
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  ConnectionSet c;
  c.elements = elements_of_classes(cd, classes);
  c.class_indices = std::move(classes);
  c.contains_identity = !c.class_indices.empty() && c.class_indices.front() == 0;
  return c;
}

/// Accepts an explicit element list; it must be an exact union of classes.
inline ConnectionSet connection_from_elements(const Group& g, const ClassData& cd,
                                              std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<char> in(g.n, 0);
  for (Element e : elements) {
    if (e >= g.n) throw InputError("element index " + std::to_string(e) + " out of range");
    in[e] = 1;
  }
  std::vector<std::uint32_t> classes;
  for (Element e : elements) {
    const auto j = cd.class_of[e];
    if (!classes.empty() && std::find(classes.begin(), classes.end(), j) != classes.end()) continue;
    for (Element member : cd.classes[j])
      if (!in[member])
        throw InputError("connection set is not a union of conjugacy classes: class " +
                         std::to_string(j) + " (representative " + g.label(cd.representatives[j]) +
                         ") is only partially included");
    classes.push_back(j);
  }
  return connection_from_classes(cd, std::move(classes));
}

/// The subset of classes selected by the bits of mask (bit j = class j).
inline ConnectionSet connection_from_mask(const ClassData& cd, std::uint64_t mask) {
  std::vector<std::uint32_t> classes;
  for (std::uint32_t j = 0; j < cd.count(); ++j)
    if (mask >> j & 1u) classes.push_back(j);
  return connection_from_classes(cd, std::move(classes));
}

// ---------------------------------------------------------------------------
// Spectra

struct Rational {
  Integer num = 0;
  Integer den = 1;

  static Rational make(Integer n, Integer d) {
    if (d == 0) throw ConsistencyError("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const Integer g = gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }
  std::string to_string() const {
    return den == 1 ? num.str() : num.str() + "/" + den.str();
  }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct SpectrumEntry {
  std::size_t character = 0;
  std::int64_t degree = 1;
  std::uint64_t multiplicity = 1;
  CycInt numerator;                 // sum over C of chi(x)
  std::optional<Rational> rational;  // set iff the eigenvalue is rational

  /// numerator / degree as an element of Z[eta]; algebraic integers in the
  /// cyclotomic field have integral power-basis coordinates.
  CycInt exact_value() const {
    auto v = numerator.divide_exact(Integer(degree));
    if (!v) throw ConsistencyError("eigenvalue is not an algebraic integer in Z[eta]");
    return *v;
  }
  std::complex<double> approx() const { return numerator.to_complex() / static_cast<double>(degree); }
};

struct Spectrum {
  std::vector<SpectrumEntry> entries;

  std::uint64_t total_multiplicity() const {
    std::uint64_t s = 0;
    for (const auto& e : entries) s += e.multiplicity;
    return s;
  }
  /// Eigenvalue approximations repeated by multiplicity.
  std::vector<std::complex<double>> expanded() const {
    std::vector<std::complex<double>> out;
    for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.approx());
    return out;
  }
};

inline Spectrum eigenvalues_via_characters(const ConnectionSet& c, const CharacterTable& ct,
                                           const ClassData& cd) {
  Spectrum sp;
  for (std::size_t chi = 0; chi < ct.count(); ++chi) {
    SpectrumEntry e;
    e.character = chi;
    e.degree = ct.degrees[chi];
    e.multiplicity = static_cast<std::uint64_t>(e.degree * e.degree);
    e.numerator = CycInt(ct.ctx);
    for (auto j : c.class_indices) e.numerator += ct.values[chi][j] * Integer(cd.size(j));
    if (auto r = e.numerator.as_rational()) e.rational = Rational::make(*r, Integer(e.degree));
    sp.entries.push_back(std::move(e));
  }
  return sp;
}

inline bool all_eigenvalues_in_K(const Spectrum& sp, const GaloisSubgroup& gamma) {
  for (const auto& e : sp.entries) {
    if (e.rational) continue;
    if (!is_fixed_by(e.numerator, gamma)) return false;
  }
  return true;
}

/// A rational eigenvalue is an algebraic integer, hence an integer; a
/// rational non-integer is reported as a ConsistencyError.
inline bool all_eigenvalues_integral(const Spectrum& sp) {
  bool integral = true;
  for (const auto& e : sp.entries) {
    if (!e.rational) {
      integral = false;
      continue;
    }
    if (e.rational->den != 1)
      throw ConsistencyError("rational eigenvalue " + e.rational->to_string() + " is not an integer");
  }
  return integral;
}

// ---------------------------------------------------------------------------
// Characterisation checks

struct Theorem1Report {
  bool integral = false;
  bool power_closed = false;
  std::optional<std::size_t> irrational_character;  // first character with a non-integer eigenvalue
  std::optional<Element> unclosed_element;          // x in C with some generator of <x> outside C
  bool agree() const { return integral == power_closed; }
};

inline Theorem1Report check_theorem1(const Group& g, const ClassData& cd, const ConnectionSet& c,
                                     const CharacterTable& ct) {
  Theorem1Report r;
  const Spectrum sp = eigenvalues_via_characters(c, ct, cd);
  r.integral = all_eigenvalues_integral(sp);
  for (const auto& e : sp.entries)
    if (!e.rational) {
      r.irrational_character = e.character;
      break;
    }
  r.power_closed = is_power_closed(c.elements, g);
  if (!r.power_closed) {
    for (Element x : c.elements) {
      const std::vector<Element> single{x};
      const auto gens = power_closure(single, g);
      if (!std::includes(c.elements.begin(), c.elements.end(), gens.begin(), gens.end())) {
        r.unclosed_element = x;
        break;
      }
    }
  }
  return r;
}

struct Theorem2Report {
  bool in_field = false;
  bool union_of_gamma_classes = false;
  std::optional<std::size_t> moved_character;  // eigenvalue not fixed by gamma
  std::optional<std::uint32_t> split_class;    // G-class whose gamma-class is cut by C
  bool agree() const { return in_field == union_of_gamma_classes; }
};

inline Theorem2Report check_theorem2(const Group& g, const ClassData& cd, const ConnectionSet& c,
                                     const CharacterTable& ct, const GaloisSubgroup& gamma) {
  if (gamma.m != cd.modulus)
    throw InputError("conductor mismatch: Galois subgroup is modulo " + std::to_string(gamma.m) +
                     " but the group exponent is " + std::to_string(cd.modulus));
  Theorem2Report r;
  const Spectrum sp = eigenvalues_via_characters(c, ct, cd);
  r.in_field = all_eigenvalues_in_K(sp, gamma);
  for (const auto& e : sp.entries)
    if (!e.rational && !is_fixed_by(e.numerator, gamma)) {
      r.moved_character = e.character;
      break;
    }
  const auto gc = gamma_conjugacy_classes(g, cd, gamma);
  r.union_of_gamma_classes = is_union_of_gamma_classes(c.class_indices, gc);
  if (!r.union_of_gamma_classes) {
    std::vector<char> in(cd.count(), 0);
    for (auto j : c.class_indices) in[j] = 1;
    for (const auto& grp : gc.class_groups)
      for (auto j : grp)
        if (in[j] != in[grp.front()] && !r.split_class) r.split_class = in[j] ? j : grp.front();
  }
  return r;
}

// ---------------------------------------------------------------------------
// Coefficients of the induced-character sum

struct ThetaCoefficients {
  Element base = 0;
  std::uint32_t base_order = 1;
  std::vector<std::uint64_t> a;  // a[i] = #{(z, y) : z in C, y^-1 z y = x^i}
  CycInt e_theta;                // sum a_i eta_{|x|}^i at conductor m
  bool reconstruction_matches = false;
};

/// Counts a_i directly and checks sum a_i eta^i == |x| * sum over C of Theta(z).
inline ThetaCoefficients theta_coefficients(Element x, const ConnectionSet& c, const Group& g,
                                            const ClassData& cd, const InducedCharacter& theta) {
  if (x == Group::identity) throw InputError("theta_coefficients requires a non-identity element");
  if (theta.base != x) throw InputError("induced character was built from a different element");
  ThetaCoefficients tc;
  tc.base = x;
  tc.base_order = g.order_of(x);
  tc.a.assign(tc.base_order, 0);

  std::vector<std::int64_t> exponent_in_cyclic(g.n, -1);
  Element p = Group::identity;
  for (std::uint32_t i = 0; i < tc.base_order; ++i) {
    exponent_in_cyclic[p] = i;
    p = g.product(p, x);
  }
  for (Element z : c.elements)
    for (std::size_t y = 0; y < g.n; ++y) {
      const auto yy = static_cast<Element>(y);
      const std::int64_t i = exponent_in_cyclic[g.product(g.product(g.inverse(yy), z), yy)];
      if (i >= 0) ++tc.a[static_cast<std::size_t>(i)];
    }

  const std::uint64_t m = cd.modulus;
  const auto ctx = theta.values.front().context();
  std::vector<Integer> raw(m, 0);
  for (std::uint32_t i = 0; i < tc.base_order; ++i) raw[i * (m / tc.base_order)] += tc.a[i];
  tc.e_theta = CycInt::reduce(std::move(raw), ctx);

  CycInt expected(ctx);
  for (auto j : c.class_indices) expected += theta.values[j] * Integer(cd.size(j));
  expected *= Integer(tc.base_order);
  tc.reconstruction_matches = tc.e_theta == expected;
  return tc;
}

inline ThetaCoefficients theta_coefficients(Element x, const ConnectionSet& c, const Group& g,
                                            const ClassData& cd) {
  return theta_coefficients(x, c, g, cd, induced_character_from_cyclic(x, g, cd));
}

/// a_i == a_{i t mod |x|} for every i and every t in gamma.
inline bool check_coefficient_symmetry(const ThetaCoefficients& tc, const GaloisSubgroup& gamma) {
  const std::uint64_t o = tc.base_order;
  for (auto t : gamma.elements)
    for (std::uint64_t i = 0; i < o; ++i)
      if (tc.a[i] != tc.a[(i * (t % o)) % o]) return false;
  return true;
}

}  // namespace cayley

#endif  // CAYLEY_SPECTRA_HPP
