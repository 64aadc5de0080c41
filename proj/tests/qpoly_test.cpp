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

#include <random>

#include "cdc/qpoly.hpp"
#include "cdc/verify.hpp"
#include "oracles.hpp"

namespace cdc {
namespace {

const ExtFieldSpec& ext(unsigned q, unsigned n) { return make_extension(make_field_of_order(q), n); }

TEST(QPolynomialTest, IdentityAndZero) {
  const auto& f = ext(2, 4);
  const QPolynomial id(f, {1});
  const QPolynomial zero(f, {0, 0, 0});
  for (Elem x = 0; x < f.size(); ++x) {
    EXPECT_EQ(id(x), x);
    EXPECT_EQ(zero(x), 0u);
  }
  EXPECT_EQ(id.to_matrix(), Matrix::identity(f.base(), 4));
  EXPECT_TRUE(zero.to_matrix().is_zero());
  EXPECT_EQ(id.kernel_dim(), 0u);
  EXPECT_EQ(zero.kernel_dim(), 4u);
}

TEST(QPolynomialTest, FrobeniusOverF4) {
  const auto& f = ext(2, 2);
  const QPolynomial frob(f, {0, 1});
  EXPECT_EQ(frob(2), 3u);
  const Matrix m = frob.to_matrix();
  EXPECT_EQ(rank(m), 2u);
  for (unsigned i = 0; i < 2; ++i) {
    const auto image = f.to_vector(frob(f.basis(i)));
    for (unsigned c = 0; c < 2; ++c) EXPECT_EQ(m(i, c), image[c]);
  }
}

TEST(QPolynomialTest, RejectsBadDegree) {
  EXPECT_THROW(QPolynomial(ext(2, 2), {1, 1, 1}), ParameterError);
  EXPECT_THROW(QPolynomial(ext(2, 2), {}), ParameterError);
  EXPECT_THROW(enumerate_mrd(2, 3, 3), ParameterError);
}

TEST(QPolynomialTest, MatrixIsAdditiveAndEvaluationLinear) {
  const auto& f = ext(3, 3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Elem> coeff(0, static_cast<Elem>(f.size() - 1));
  for (int trial = 0; trial < 50; ++trial) {
    const QPolynomial a(f, {coeff(rng), coeff(rng)}), b(f, {coeff(rng), coeff(rng)});
    const QPolynomial sum(f, {f.add(a.coeffs()[0], b.coeffs()[0]), f.add(a.coeffs()[1], b.coeffs()[1])});
    EXPECT_EQ(sum.to_matrix(), a.to_matrix() + b.to_matrix());
    const Elem x = coeff(rng), y = coeff(rng);
    for (Elem c = 0; c < 3; ++c) EXPECT_EQ(a(f.add(f.scale(c, x), y)), f.add(f.scale(c, a(x)), a(y)));
  }
}

TEST(QPolynomialTest, RootCountMatchesKernel) {
  for (const auto& [q, n] : testing::extension_grid(1u << 12)) {
    if (n < 2) continue;
    const auto& f = ext(q, n);
    std::mt19937_64 rng(q * 100 + n);
    std::uniform_int_distribution<Elem> coeff(0, static_cast<Elem>(f.size() - 1));
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Elem> c(1 + trial % n);
      for (auto& a : c) a = coeff(rng);
      if (trial == 3) c.assign(2, 0), c[1] = 1, c[0] = f.neg(1);  // x^q - x: kernel is F_q
      const QPolynomial p(f, c);
      std::uint64_t roots = 0;
      for (Elem x = 0; x < f.size(); ++x) roots += p(x) == 0;
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < p.kernel_dim(); ++i) expected *= q;
      EXPECT_EQ(roots, expected) << f.name();
      if (!p.is_zero()) EXPECT_LE(p.kernel_dim(), c.size() - 1);
    }
  }
}

TEST(GabidulinTest, Sizes) {
  EXPECT_EQ(enumerate_mrd(2, 2, 1).size(), 16u);
  EXPECT_EQ(enumerate_mrd(2, 4, 2).size(), 4096u);
  EXPECT_EQ(enumerate_mrd(2, 6, 3).size(), std::uint64_t{1} << 24);
  EXPECT_THROW(enumerate_mrd(2, 6, 3, (std::uint64_t{1} << 24) - 1), BudgetExceeded);
  EXPECT_THROW(enumerate_mrd(2, 7, 3), BudgetExceeded);
}

TEST(GabidulinTest, OdometerOrder) {
  const auto code = enumerate_mrd(2, 2, 1);
  EXPECT_TRUE(code.polynomial(0).is_zero());
  EXPECT_EQ(code.polynomial(1).coeffs()[0], 1u);
  EXPECT_EQ(code.polynomial(1).coeffs()[1], 0u);
  EXPECT_EQ(code.polynomial(4).coeffs()[1], 1u);
  EXPECT_EQ(code.matrix(7), code.polynomial(7).to_matrix());
}

TEST(GabidulinTest, KernelBoundOnSmallCode) {
  const auto code = enumerate_mrd(2, 2, 1);
  for (std::uint64_t i = 1; i < code.size(); ++i) EXPECT_LE(code.polynomial(i).kernel_dim(), 1u);
}

TEST(GabidulinTest, ExactMinimumRankDistance) {
  for (const auto& [q, n, t] : {std::tuple{2u, 2u, 1u}, {2u, 3u, 1u}, {2u, 4u, 2u}, {3u, 2u, 1u}}) {
    const auto code = enumerate_mrd(q, n, t);
    const auto mats = testing::all_matrices(code);
    EXPECT_EQ(min_rank_distance_exhaustive(mats), n - t) << q << " " << n << " " << t;
  }
}

TEST(FiltrationTest, Counts) {
  EXPECT_EQ(enumerate_filtration(enumerate_mrd(2, 2, 1), 1).size(), 9u);
  EXPECT_EQ(enumerate_filtration(enumerate_mrd(2, 4, 2), 2).size(), 525u);
  const auto code = enumerate_mrd(2, 3, 1);
  EXPECT_EQ(enumerate_filtration(code, 0).size(), code.size() - 1);
  EXPECT_EQ(enumerate_filtration(code, 0, ZeroMap::Include).size(), code.size());
  EXPECT_THROW(enumerate_filtration(code, 2), ParameterError);
  const auto q242 = enumerate_mrd(2, 4, 2);
  for (auto i : enumerate_filtration(q242, 2)) EXPECT_EQ(q242.polynomial(i).kernel_dim(), 2u);
}

TEST(EmbeddingTest, LinearAndInjective) {
  const auto& small = ext(3, 2);
  const auto& big = ext(3, 4);
  std::set<Elem> images;
  for (Elem x = 0; x < small.size(); ++x) {
    EXPECT_TRUE(images.insert(embed(small, big, x)).second);
    for (Elem y = 0; y < small.size(); ++y)
      for (Elem c = 0; c < 3; ++c)
        EXPECT_EQ(embed(small, big, small.add(small.scale(c, x), y)),
                  big.add(big.scale(c, embed(small, big, x)), embed(small, big, y)));
  }
}

TEST(RectGabidulinTest, Sizes) {
  EXPECT_EQ(enumerate_rect_mrd(2, 2, 0, 1).size(), 16u);
  const auto rect = enumerate_rect_mrd(2, 2, 1, 1);
  EXPECT_EQ(rect.size(), 64u);
  EXPECT_EQ(rect.matrix(5).rows(), 2u);
  EXPECT_EQ(rect.matrix(5).cols(), 3u);
}

TEST(RectGabidulinTest, SquareCaseMatchesGabidulin) {
  const auto rect = enumerate_rect_mrd(2, 2, 0, 1);
  const auto square = enumerate_mrd(2, 2, 1);
  std::set<Matrix> a, b;
  for (std::uint64_t i = 0; i < 16; ++i) a.insert(rect.matrix(i)), b.insert(square.matrix(i));
  EXPECT_EQ(a, b);
}

TEST(RectGabidulinTest, RankDistance) {
  // Pairwise on the small codes.
  for (const auto& [k, h, t] : {std::tuple{2u, 0u, 1u}, {2u, 1u, 1u}, {3u, 1u, 1u}, {2u, 2u, 0u}}) {
    const auto code = enumerate_rect_mrd(2, k, h, t);
    std::vector<Matrix> mats;
    for (std::uint64_t i = 0; i < code.size(); ++i) mats.push_back(code.matrix(i));
    EXPECT_EQ(min_rank_distance_exhaustive(mats), k - t) << k << " " << h << " " << t;
  }
  // The code is F_q-linear, so the distance is the least nonzero rank.
  for (const auto& [q, k, h, t] : {std::tuple{2u, 4u, 1u, 2u}, {2u, 3u, 2u, 1u}, {3u, 3u, 1u, 1u}}) {
    const auto code = enumerate_rect_mrd(q, k, h, t);
    std::size_t least = k;
    for (std::uint64_t i = 1; i < code.size(); ++i) least = std::min(least, rank(code.matrix(i)));
    EXPECT_EQ(least, k - t) << q << " " << k << " " << h << " " << t;
  }
}

}  // namespace
}  // namespace cdc
