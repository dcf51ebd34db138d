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

#include "cayley/modp.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace cayley::modp {
namespace {

// det by elimination, independent of the Hessenberg path.
Residue determinant(Matrix a, const Field& f) {
  const std::size_t n = a.size();
  Residue det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(a[sel], a[c]);
      det = f.sub(0, det);
    }
    det = f.mul(det, a[c][c]);
    const Residue inv = f.inv(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Residue u = f.mul(a[i][c], inv);
      for (std::size_t j = c; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(u, a[c][j]));
    }
  }
  return det;
}

Matrix random_matrix(std::size_t n, const Field& f, std::mt19937_64& rng, bool sparse) {
  std::uniform_int_distribution<Residue> value(0, f.p - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  Matrix a(n, Vector(n, 0));
  for (auto& row : a)
    for (auto& x : row) x = sparse && coin(rng) != 0 ? 0 : value(rng);
  return a;
}

TEST(PrimeTest, Examples) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(31));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(least_prime_congruent_one(5, 10), 11u);
  EXPECT_EQ(least_prime_congruent_one(5, 11), 31u);
  EXPECT_EQ(least_prime_congruent_one(6, 4), 7u);
  EXPECT_EQ(least_prime_congruent_one(1, 13), 17u);
  EXPECT_EQ(primitive_root(Field{7}), 3);
  EXPECT_EQ(primitive_root(Field{31}), 3);
  EXPECT_EQ(primitive_root(Field{41}), 6);
}

TEST(FieldTest, InverseAndLift) {
  const Field f{31};
  for (Residue a = 1; a < 31; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
  EXPECT_THROW(f.inv(0), ConsistencyError);
  EXPECT_EQ(f.lift(30), -1);
  EXPECT_EQ(f.lift(15), 15);
  EXPECT_EQ(f.norm(-33), 29);
}

TEST(RrefTest, NullspaceIsAnnihilated) {
  const Field f{101};
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix a = random_matrix(4, f, rng, true);
    a.push_back(a[0]);  // force a dependency among rows
    for (auto& row : a) row.push_back(f.add(row[0], row[1]));
    const auto basis = nullspace(a, 5, f);
    Matrix copy = a;
    const auto rank = rref(copy, f).size();
    EXPECT_EQ(rank + basis.size(), 5u);
    EXPECT_GE(basis.size(), 1u);
    for (const auto& v : basis)
      for (const auto& row : a) {
        Residue s = 0;
        for (std::size_t j = 0; j < 5; ++j) s = f.add(s, f.mul(row[j], v[j]));
        EXPECT_EQ(s, 0);
      }
  }
}

TEST(CharacteristicPolynomialTest, MatchesDeterminantAtEveryPoint) {
  const Field f{61};
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n <= 7; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix a = random_matrix(n, f, rng, trial % 2 == 0);
      const Vector poly = characteristic_polynomial(a, f);
      ASSERT_EQ(poly.size(), n + 1);
      EXPECT_EQ(poly.back(), 1);
      for (Residue x = 0; x < f.p; ++x) {
        Matrix m = a;
        for (std::size_t i = 0; i < n; ++i) {
          for (auto& e : m[i]) e = f.sub(0, e);
          m[i][i] = f.add(m[i][i], x);
        }
        ASSERT_EQ(evaluate(poly, x, f), determinant(m, f)) << "n=" << n << " x=" << x;
      }
    }
}

TEST(CharacteristicPolynomialTest, DiagonalRoots) {
  const Field f{13};
  Matrix a{{2, 0, 0}, {0, 5, 0}, {0, 0, 5}};
  EXPECT_EQ(roots_by_scan(characteristic_polynomial(a, f), f), (std::vector<Residue>{2, 5}));
}

}  // namespace
}  // namespace cayley::modp
