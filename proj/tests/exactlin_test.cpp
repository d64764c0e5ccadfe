#include <random>

#include <gtest/gtest.h>

#include "hccourant/errors.hpp"
#include "hccourant/exactlin.hpp"
#include "hccourant/random.hpp"
#include "helpers.hpp"

using namespace hcc;
using testing_helpers::qm;
using testing_helpers::qv;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(format_rational(parse_rational("-4/6")), "-2/3");
  EXPECT_EQ(format_rational(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Rref, Identity) {
  const RrefResult r = rref(QMatrix::identity(2));
  EXPECT_EQ(r.reduced, QMatrix::identity(2));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, Zero) {
  const RrefResult r = rref(QMatrix(3, 2));
  EXPECT_TRUE(r.reduced.is_zero());
  EXPECT_TRUE(r.pivots.empty());
  EXPECT_EQ(r.rank, 0u);
}

TEST(Rref, RankOne) {
  const RrefResult r = rref(qm({{"1", "2"}, {"2", "4"}}));
  EXPECT_EQ(r.reduced, qm({{"1", "2"}, {"0", "0"}}));
  EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, DenseAndSparseAgree) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (rng() % 3 == 0) m(i, j) = random_rational(rng);
    if (trial % 5 == 0 && rows > 1) m.row(rows - 1)[0] = 0;
    const RrefResult d = rref_dense(m), s = rref_sparse(m);
    EXPECT_EQ(d.reduced, s.reduced);
    EXPECT_EQ(d.pivots, s.pivots);
    EXPECT_EQ(d.rank, s.rank);
  }
}

TEST(Rref, EchelonBasisMatchesRref) {
  std::mt19937_64 rng(11);
  QMatrix m(6, 5);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = random_small(rng);
  EchelonBasis eb(5);
  for (std::size_t i = 0; i < 6; ++i) eb.add(m.row(i));
  EXPECT_EQ(eb.reduced_basis(), row_basis(m));
  EXPECT_EQ(eb.rank(), rank(m));
}

TEST(Nullspace, Cases) {
  EXPECT_EQ(nullspace(QMatrix::identity(3)).rows(), 0u);
  EXPECT_EQ(nullspace(QMatrix(2, 2)), QMatrix::identity(2));
  const QMatrix n = nullspace(qm({{"1", "1"}}));
  ASSERT_EQ(n.rows(), 1u);
  EXPECT_TRUE(same_rowspan(n, qm({{"-1", "1"}})));
}

TEST(Membership, Cases) {
  const QMatrix s = qm({{"1", "0", "1"}, {"0", "1", "1"}});
  EXPECT_EQ(*membership(s.row(0), s), qv({"1", "0"}));
  EXPECT_EQ(*membership(qv({"0", "0", "0"}), s), qv({"0", "0"}));
  const QVector out = qv({"0", "0", "1"});
  EXPECT_FALSE(membership(out, s).has_value());
  EXPECT_LT(rank(s), rank(s.vstack(qm({{"0", "0", "1"}}))));
  EXPECT_THROW(membership(qv({"1", "0"}), s), InputError);
}

TEST(Quotient, WholeSpace) {
  const QuotientBasis q(QMatrix::identity(2), QMatrix::identity(2));
  EXPECT_EQ(q.dim(), 0u);
  EXPECT_TRUE(q.reduce(qv({"3", "1"})).empty());
}

TEST(Quotient, ZeroSubspace) {
  const QuotientBasis q(QMatrix::identity(2), QMatrix(0, 2));
  EXPECT_EQ(q.reps(), QMatrix::identity(2));
}

TEST(Quotient, LineInPlane) {
  const QuotientBasis q(QMatrix::identity(2), qm({{"1", "1"}}));
  ASSERT_EQ(q.dim(), 1u);
  const QVector a = q.reduce(qv({"1", "0"})), b = q.reduce(qv({"0", "1"}));
  EXPECT_EQ(a[0], -b[0]);
  EXPECT_NE(a[0], 0);
}

TEST(Quotient, ContainmentViolation) {
  EXPECT_THROW(QuotientBasis(qm({{"1", "0"}}), qm({{"0", "1"}})), InputError);
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(3);
  const QMatrix g = random_invertible(rng, 4);
  EXPECT_EQ(g * inverse(g), QMatrix::identity(4));
  EXPECT_THROW(inverse(qm({{"1", "2"}, {"2", "4"}})), InputError);
}
