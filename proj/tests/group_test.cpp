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

#include "cayley/group.hpp"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "test_corpus.hpp"

namespace cayley {
namespace {

std::vector<std::size_t> sorted_class_sizes(const ClassData& cd) {
  std::vector<std::size_t> sizes;
  for (std::size_t j = 0; j < cd.count(); ++j) sizes.push_back(cd.size(j));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

TEST(BuildGroupTest, CyclicSix) {
  const Group g = build_group(GroupSpec::named("cyclic", {6}));
  EXPECT_EQ(g.n, 6u);
  EXPECT_EQ(g.exponent, 6u);
}

TEST(BuildGroupTest, SymmetricThreeFromGenerators) {
  const Group g = build_group(GroupSpec::from_generators({"(1 2)", "(1 2 3)"}));
  EXPECT_EQ(g.n, 6u);
  // BFS order: identity, then generators in input order.
  EXPECT_EQ(g.label(0), "()");
  EXPECT_EQ(g.label(1), "(1 2)");
  EXPECT_EQ(g.label(2), "(1 2 3)");
}

TEST(BuildGroupTest, QuaternionOrders) {
  const Group g = build_group(GroupSpec::named("quaternion", {8}));
  EXPECT_EQ(g.n, 8u);
  EXPECT_EQ(g.exponent, 4u);
  std::vector<std::uint32_t> orders = g.orders;
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::uint32_t>{1, 2, 4, 4, 4, 4, 4, 4}));
}

TEST(BuildGroupTest, FamilyOrders) {
  EXPECT_EQ(build_group(GroupSpec::named("dihedral", {5})).n, 10u);
  EXPECT_EQ(build_group(GroupSpec::named("dihedral", {2})).n, 4u);
  EXPECT_EQ(build_group(GroupSpec::named("dihedral", {1})).n, 2u);
  EXPECT_EQ(build_group(GroupSpec::named("symmetric", {5})).n, 120u);
  EXPECT_EQ(build_group(GroupSpec::named("alternating", {4})).n, 12u);
  EXPECT_EQ(build_group(GroupSpec::named("alternating", {6})).n, 360u);
  EXPECT_EQ(build_group(GroupSpec::named("generalized-quaternion", {16})).n, 16u);
  EXPECT_EQ(build_group(GroupSpec::named("generalized-quaternion", {16})).exponent, 8u);
  EXPECT_EQ(build_group(GroupSpec::named("elementary-abelian", {2, 3})).n, 8u);
  EXPECT_EQ(build_group(GroupSpec::named("cyclic", {1})).n, 1u);
  const Group p = build_group(GroupSpec::product(GroupSpec::named("symmetric", {3}), GroupSpec::named("cyclic", {2})));
  EXPECT_EQ(p.n, 12u);
  EXPECT_EQ(p.exponent, 6u);
}

TEST(BuildGroupTest, SymmetricSevenAtDefaultCap) {
  const Group g = build_group(GroupSpec::named("symmetric", {7}));
  EXPECT_EQ(g.n, 5040u);
  EXPECT_EQ(g.exponent, 420u);
  EXPECT_TRUE(check_group_axioms(g, 20000));
}

TEST(BuildGroupTest, Errors) {
  EXPECT_THROW(build_group(GroupSpec::named("symmetric", {5}), BuildOptions{100}), InputError);
  EXPECT_THROW(build_group(GroupSpec::from_generators({"(1 2"})), InputError);
  EXPECT_THROW(build_group(GroupSpec::from_generators({"1 2"})), InputError);
  EXPECT_THROW(build_group(GroupSpec::from_generators({"(1 2)(2 3)"})), InputError);
  EXPECT_THROW(build_group(GroupSpec::from_generators({"(0 1)"})), InputError);
  EXPECT_THROW(build_group(GroupSpec::named("mathieu", {11})), InputError);
  EXPECT_THROW(build_group(GroupSpec::named("symmetric", {8})), InputError);
  EXPECT_THROW(build_group(GroupSpec::named("generalized-quaternion", {12})), InputError);
  EXPECT_THROW(build_group(GroupSpec::named("elementary-abelian", {4, 2})), InputError);
}

TEST(BuildGroupTest, IndexingIsDeterministic) {
  const auto spec = GroupSpec::named("symmetric", {4});
  const Group a = build_group(spec);
  const Group b = build_group(spec);
  EXPECT_EQ(a.mul, b.mul);
  EXPECT_EQ(a.permutations, b.permutations);
}

TEST(ElementOrderTest, SymmetricThree) {
  const Group g = build_group(GroupSpec::from_generators({"(1 2)", "(1 2 3)"}));
  EXPECT_EQ(element_order(0, g), 1u);
  EXPECT_EQ(element_order(g.find("(1 2)"), g), 2u);
  EXPECT_EQ(element_order(g.find("(1 2 3)"), g), 3u);
  EXPECT_THROW(element_order(6, g), InputError);
}

TEST(ExponentTest, Examples) {
  EXPECT_EQ(exponent(build_group(GroupSpec::named("cyclic", {12}))), 12u);
  EXPECT_EQ(exponent(build_group(GroupSpec::named("symmetric", {3}))), 6u);
  EXPECT_EQ(exponent(build_group(GroupSpec::named("quaternion", {8}))), 4u);
}

TEST(PowerOfTest, Examples) {
  const Group g = build_group(GroupSpec::from_generators({"(1 2)", "(1 2 3)"}));
  const Element c = g.find("(1 2 3)");
  EXPECT_EQ(power_of(c, 0, g), Group::identity);
  EXPECT_EQ(power_of(c, 1, g), c);
  EXPECT_EQ(g.label(power_of(c, 2, g)), "(1 3 2)");
  EXPECT_EQ(power_of(c, -1, g), g.inverse(c));
}

TEST(PowerOfTest, DependsOnlyOnResidueModExponent) {
  for (const auto& entry : testing_corpus::small_groups()) {
    const Group g = build_group(entry.spec);
    const auto m = static_cast<long long>(g.exponent);
    for (Element x = 0; x < g.n; ++x)
      for (long long t = -m; t <= m; ++t) ASSERT_EQ(power_of(x, t, g), power_of(x, t + m, g)) << entry.name;
  }
}

TEST(ConjugacyClassesTest, AbelianGroupsHaveSingletonClasses) {
  for (const auto& spec : {GroupSpec::named("cyclic", {7}), GroupSpec::named("elementary-abelian", {2, 3})}) {
    const Group g = build_group(spec);
    const ClassData cd = conjugacy_classes(g);
    EXPECT_EQ(cd.count(), g.n);
  }
}

TEST(ConjugacyClassesTest, SymmetricThreeAndFour) {
  const Group s3 = build_group(GroupSpec::from_generators({"(1 2)", "(1 2 3)"}));
  const ClassData cd3 = conjugacy_classes(s3);
  ASSERT_EQ(cd3.count(), 3u);
  EXPECT_EQ(cd3.size(0), 1u);
  EXPECT_EQ(cd3.size(1), 3u);
  EXPECT_EQ(cd3.size(2), 2u);

  const ClassData cd4 = conjugacy_classes(build_group(GroupSpec::named("symmetric", {4})));
  EXPECT_EQ(sorted_class_sizes(cd4), (std::vector<std::size_t>{1, 3, 6, 6, 8}));
}

// Class invariants, checked exhaustively on every corpus group.
TEST(ConjugacyClassesTest, CorpusInvariants) {
  for (const auto& entry : testing_corpus::acceptance_groups()) {
    const Group g = build_group(entry.spec);
    ASSERT_TRUE(check_group_axioms(g)) << entry.name;
    const ClassData cd = conjugacy_classes(g);
    SCOPED_TRACE(entry.name);

    std::vector<int> seen(g.n, 0);
    for (const auto& cls : cd.classes)
      for (Element e : cls) ++seen[e];
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    EXPECT_EQ(cd.classes[0], std::vector<Element>{0});

    for (std::size_t j = 0; j < cd.count(); ++j) {
      EXPECT_EQ(cd.inverse_class[cd.inverse_class[j]], j);
      EXPECT_EQ(cd.representatives[j], cd.classes[j].front());
      EXPECT_EQ(cd.power_class(j, 1), j);
      const auto order = g.order_of(cd.representatives[j]);
      for (Element e : cd.classes[j]) {
        EXPECT_EQ(g.order_of(e), order);
        for (long long t = 0; t < static_cast<long long>(g.exponent); ++t)
          ASSERT_EQ(cd.class_of[power_of(e, t, g)], cd.power_class(j, t));
      }
      for (long long t = 0; t < static_cast<long long>(g.exponent); ++t)
        EXPECT_EQ(cd.power_class(j, t), cd.power_class(j, t + order));
    }
  }
}

TEST(FormatCyclesTest, Canonical) {
  const Group g = build_group(GroupSpec::from_generators({"(3 1 2)(5 4)"}));
  EXPECT_EQ(g.label(1), "(1 2 3)(4 5)");
  EXPECT_EQ(g.find("(2, 3, 1)(4 5)"), 1u);
  EXPECT_THROW(g.find("(1 2)"), InputError);
  EXPECT_THROW(g.find("(1 9)"), InputError);
}

}  // namespace
}  // namespace cayley
