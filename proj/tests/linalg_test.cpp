// Copyright 2026 The cdc Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cdc/linalg.hpp"
#include "oracles.hpp"

namespace cdc {
namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, f.q() - 1);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Invertible row operation: add a multiple of one row to another, or scale.
Matrix shuffle_rows(const Matrix& m, std::mt19937_64& rng) {
  const auto& f = m.field();
  Matrix out = m;
  std::uniform_int_distribution<std::size_t> row(0, m.rows() - 1);
  std::uniform_int_distribution<Elem> scalar(1, f.q() - 1);
  for (int step = 0; step < 20; ++step) {
    const std::size_t a = row(rng), b = row(rng);
    const Elem c = scalar(rng);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (a == b) {
        out(a, j) = f.mul(c, out(a, j));
      } else {
        out(a, j) = f.add(out(a, j), f.mul(c, out(b, j)));
      }
    }
  }
  return out;
}

TEST(MatrixTest, RrefExamples) {
  const auto& f = make_field(2, 1);
  EXPECT_EQ(rref(Matrix::identity(f, 3)), Matrix::identity(f, 3));
  EXPECT_EQ(rref(Matrix(f, 2, 3)), Matrix(f, 2, 3));
  EXPECT_EQ(rref(Matrix(f, {{1, 1}, {1, 0}})), Matrix(f, {{1, 0}, {0, 1}}));
}

TEST(MatrixTest, RankExamples) {
  const auto& f = make_field(2, 1);
  EXPECT_EQ(rank(Matrix::identity(f, 5)), 5u);
  EXPECT_EQ(rank(Matrix(f, 4, 4)), 0u);
  int rank_one = 0;
  for (Elem bits = 0; bits < 16; ++bits) {
    Matrix m(f, {{bits & 1u, (bits >> 1) & 1u}, {(bits >> 2) & 1u, (bits >> 3) & 1u}});
    rank_one += rank(m) == 1;
  }
  EXPECT_EQ(rank_one, 9);
}

TEST(MatrixTest, KernelDimension) {
  const auto& f = make_field(3, 1);
  EXPECT_EQ(kernel_dim(Matrix::identity(f, 4)), 0u);
  EXPECT_EQ(kernel_dim(Matrix(f, 4, 4)), 4u);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Matrix m = random_matrix(f, 5, 5, rng);
    EXPECT_EQ(kernel_dim(m) + rank(m), 5u);
  }
}

TEST(MatrixTest, ShapeErrors) {
  const auto& f = make_field(2, 1);
  EXPECT_THROW(Matrix(f, 2, 2) + Matrix(f, 2, 3), ParameterError);
  EXPECT_THROW(Matrix(f, 2, 2) * Matrix(f, 3, 2), ParameterError);
  EXPECT_THROW(Matrix(f, 1, 1, {2}), ParameterError);
}

TEST(MatrixTest, PackedRankMatchesGeneric) {
  const auto& f = make_field(2, 1);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t r = 1 + rng() % 10, c = 1 + rng() % 40;
    const Matrix m = random_matrix(f, r, c, rng);
    EXPECT_EQ(rank(m), rank_generic(m));
  }
}

TEST(MatrixTest, RankInvariantUnderPermutations) {
  for (unsigned q : {2u, 3u, 4u, 9u}) {
    const auto& f = make_field_of_order(q);
    std::mt19937_64 rng(q);
    for (int trial = 0; trial < 40; ++trial) {
      Matrix m = random_matrix(f, 4, 6, rng);
      m(3, 0) = 0;  // keep some low-rank cases around
      const std::size_t r = rank(m);
      std::vector<std::size_t> rows{0, 1, 2, 3}, cols{0, 1, 2, 3, 4, 5};
      std::shuffle(rows.begin(), rows.end(), rng);
      std::shuffle(cols.begin(), cols.end(), rng);
      Matrix p(f, 4, 6);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 6; ++j) p(i, j) = m(rows[i], cols[j]);
      EXPECT_EQ(rank(p), r);
    }
  }
}

TEST(SubspaceTest, CanonicalForm) {
  const auto& f = make_field(2, 1);
  const Matrix lifted(f, {{1, 0, 1, 0}, {0, 1, 0, 1}});
  const Subspace s = subspace_from_rows(lifted);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.basis(), lifted);
  const Subspace drop = subspace_from_rows(Matrix(f, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(drop.dim(), 2u);
}

TEST(SubspaceTest, RowEquivalentInputsCollapse) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto& f = make_field_of_order(q);
    std::mt19937_64 rng(100 + q);
    for (int trial = 0; trial < 30; ++trial) {
      const Matrix m = random_matrix(f, 3, 7, rng);
      const Matrix e = shuffle_rows(m, rng);
      const Subspace a = subspace_from_rows(m), b = subspace_from_rows(e);
      EXPECT_EQ(a, b);
      EXPECT_EQ(std::hash<Subspace>{}(a), std::hash<Subspace>{}(b));
      EXPECT_EQ(a.basis(), rref(a.basis()));
    }
  }
}

TEST(SubspaceTest, IntersectionExamples) {
  const auto& f = make_field(2, 1);
  const Subspace u = subspace_from_rows(Matrix(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  const Subspace v = subspace_from_rows(Matrix(f, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  const Subspace w = subspace_from_rows(Matrix(f, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(intersection_dim(u, u), 2u);
  EXPECT_EQ(intersection_dim(u, v), 0u);
  EXPECT_EQ(subspace_distance(u, u), 0u);
  EXPECT_EQ(subspace_distance(u, w), 2u);
  EXPECT_EQ(subspace_distance(u, v), 4u);
}

TEST(SubspaceTest, IntersectionMatchesEnumeration) {
  for (unsigned q : {2u, 3u, 4u}) {
    const auto& f = make_field_of_order(q);
    std::mt19937_64 rng(q * 31);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t ku = 1 + rng() % 3, kv = 1 + rng() % 3;
      Matrix a = random_matrix(f, ku, 5, rng);
      Matrix b = random_matrix(f, kv, 5, rng);
      if (trial % 3 == 0) b = vstack(a.row_block(0, 1), b).row_block(0, kv);  // force overlap
      const Subspace u = subspace_from_rows(a), v = subspace_from_rows(b);
      const std::size_t expected = testing::intersection_dim_by_enumeration(u, v);
      EXPECT_EQ(intersection_dim(u, v), expected);
      EXPECT_EQ(intersection_dim_generic(u, v), expected);
    }
  }
}

TEST(SubspaceTest, MetricAxioms) {
  const auto& f = make_field(3, 1);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Subspace a = subspace_from_rows(random_matrix(f, 2, 5, rng));
    const Subspace b = subspace_from_rows(random_matrix(f, 2, 5, rng));
    const Subspace c = subspace_from_rows(random_matrix(f, 2, 5, rng));
    EXPECT_EQ(subspace_distance(a, b), subspace_distance(b, a));
    EXPECT_EQ(subspace_distance(a, b) == 0, a == b);
    EXPECT_LE(subspace_distance(a, c), subspace_distance(a, b) + subspace_distance(b, c));
  }
}

}  // namespace
}  // namespace cdc
