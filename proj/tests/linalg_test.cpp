#include <gtest/gtest.h>

#include <random>

#include "hopfcat/linalg.hpp"

using namespace hopfcat;

namespace {

const Field Q = Field::rationals();

Scalar q(long num, long den = 1) { return Scalar::from_fraction(Q, num, den); }

LinMap random_matrix(std::mt19937& rng, Field f, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  LinMap m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar::from_int(f, coeff(rng));
  }
  return m;
}

}  // namespace

TEST(Scalar, RationalsStayReduced) {
  const Scalar a = Scalar::parse(Q, "-6/4");
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ((a + q(3, 2)).to_string(), "0");
  EXPECT_EQ((q(1, 3) * q(3, 1)).to_string(), "1");
  EXPECT_THROW(Scalar::parse(Q, "1/0"), ParseError);
  EXPECT_THROW(Scalar::parse(Q, "1.5"), ParseError);
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(Scalar::from_int(f7, -1).to_string(), "6");
  EXPECT_EQ((Scalar::from_int(f7, 3) * Scalar::from_int(f7, 5)).to_string(), "1");
  EXPECT_EQ(Scalar::from_int(f7, 3).inverse().to_string(), "5");
  EXPECT_EQ(q(1, 2).reduce(f7).to_string(), "4");
  EXPECT_THROW(Scalar::parse(f7, "7"), ParseError);
  EXPECT_THROW(Field::prime(9), std::invalid_argument);
  EXPECT_THROW(Field::parse("fp:15"), ParseError);
}

TEST(Scalar, MixedFieldsAreRejected) {
  const Field f5 = Field::prime(5);
  EXPECT_THROW(q(1) + Scalar::one(f5), FieldMismatch);
  EXPECT_THROW(LinMap::identity(Q, 2) * LinMap::identity(f5, 2), FieldMismatch);
  EXPECT_THROW(kron(LinMap::identity(Q, 1), LinMap::identity(f5, 1)), FieldMismatch);
}

TEST(TensorIndex, FlattenRoundTrip) {
  const TensorIndex idx({2, 3, 4});
  EXPECT_EQ(idx.size(), 24u);
  EXPECT_EQ(idx.flatten({1, 2, 3}), 23u);
  EXPECT_EQ(idx.flatten({0, 1, 0}), 4u);
  for (std::size_t i = 0; i < idx.size(); ++i) EXPECT_EQ(idx.flatten(idx.unflatten(i)), i);
  EXPECT_THROW(idx.flatten({2, 0, 0}), std::out_of_range);
}

TEST(RankKernel, Identity) {
  const auto rk = rank_kernel(LinMap::identity(Q, 3));
  EXPECT_EQ(rk.rank, 3u);
  EXPECT_TRUE(rk.kernel_basis.empty());
}

TEST(RankKernel, ZeroMap) {
  const auto rk = rank_kernel(LinMap::zero(Q, 2, 3));
  EXPECT_EQ(rk.rank, 0u);
  ASSERT_EQ(rk.kernel_basis.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(rk.kernel_basis[i], unit_vec(Q, 3, i));
}

TEST(RankKernel, RankOneTwoByTwo) {
  const auto rk = rank_kernel(LinMap::from_ints(Q, {{1, 2}, {2, 4}}));
  EXPECT_EQ(rk.rank, 1u);
  ASSERT_EQ(rk.kernel_basis.size(), 1u);
  // (-2, 1) scaled so the leading entry is 1.
  EXPECT_EQ(rk.kernel_basis[0], (Vec{q(1), q(-1, 2)}));
}

TEST(RankKernel, RandomMatricesSatisfyRankNullity) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 1 + rng() % 4;
    const LinMap m = random_matrix(rng, trial % 2 ? Q : Field::prime(3), rows, cols);
    const auto rk = rank_kernel(m);
    EXPECT_EQ(rk.rank + rk.kernel_basis.size(), cols);
    for (const auto& v : rk.kernel_basis) {
      for (const auto& s : m.apply(v)) EXPECT_TRUE(s.is_zero());
    }
    EXPECT_EQ(echelon_basis(m.field(), cols, rk.kernel_basis), rk.kernel_basis);
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(std::get<LinMap>(invert(LinMap::identity(Q, 4))), LinMap::identity(Q, 4));
  const LinMap swap = LinMap::from_ints(Q, {{0, 1}, {1, 0}});
  EXPECT_EQ(std::get<LinMap>(invert(swap)), swap);
  EXPECT_EQ(std::get<LinMap>(invert(LinMap::from_ints(Q, {{1, 1}, {0, 1}}))),
            LinMap::from_ints(Q, {{1, -1}, {0, 1}}));
  const auto bad = invert(LinMap::from_ints(Q, {{1, 2}, {2, 4}}));
  ASSERT_TRUE(std::holds_alternative<NotInvertible>(bad));
  EXPECT_EQ(std::get<NotInvertible>(bad).rank, 1u);
  EXPECT_TRUE(std::holds_alternative<NotInvertible>(invert(LinMap::zero(Q, 2, 3))));
}

TEST(Invert, SucceedsExactlyWhenFullRank) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t m = trial % 5 == 0 ? n + 1 : n;
    const Field f = trial % 2 ? Q : Field::prime(5);
    const LinMap a = random_matrix(rng, f, n, m);
    const auto inv = invert(a);
    const bool full = rank_kernel(a).rank == n && n == m;
    ASSERT_EQ(std::holds_alternative<LinMap>(inv), full);
    if (full) {
      EXPECT_EQ(a * std::get<LinMap>(inv), LinMap::identity(f, n));
      EXPECT_EQ(std::get<LinMap>(inv) * a, LinMap::identity(f, n));
    }
  }
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(LinMap::identity(Q, 2), LinMap::identity(Q, 3)), LinMap::identity(Q, 6));
  const LinMap f = LinMap::from_ints(Q, {{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(kron(f, LinMap::identity(Q, 1)), f);
  EXPECT_EQ(kron(LinMap::from_ints(Q, {{2}}), LinMap::from_ints(Q, {{3}})),
            LinMap::from_ints(Q, {{6}}));
}

TEST(Kron, EntryConventionAssociativityAndMixedProduct) {
  std::mt19937 rng(3);
  const LinMap f = random_matrix(rng, Q, 2, 3);
  const LinMap g = random_matrix(rng, Q, 3, 2);
  const LinMap h = random_matrix(rng, Q, 2, 2);
  const LinMap fg = kron(f, g);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 2; ++l) EXPECT_EQ(fg(i * 3 + k, j * 2 + l), f(i, j) * g(k, l));
  EXPECT_EQ(kron(kron(f, g), h), kron(f, kron(g, h)));
  const LinMap f2 = random_matrix(rng, Q, 3, 2);
  const LinMap g2 = random_matrix(rng, Q, 2, 3);
  EXPECT_EQ(kron(f * f2, g * g2), kron(f, g) * kron(f2, g2));
}

TEST(Flip, SwapsFactors) {
  const LinMap c = flip(Q, 2, 3);
  EXPECT_EQ(c.rows(), 6u);
  // e_i (x) e_j -> e_j (x) e_i
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(c(j * 2 + i, i * 3 + j).is_one());
  EXPECT_EQ(flip(Q, 3, 2) * c, LinMap::identity(Q, 6));
  std::mt19937 rng(5);
  const LinMap f = random_matrix(rng, Q, 2, 2);
  const LinMap g = random_matrix(rng, Q, 3, 3);
  EXPECT_EQ(flip(Q, 2, 3) * kron(f, g), kron(g, f) * flip(Q, 2, 3));
}
