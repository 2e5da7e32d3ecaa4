#include <gtest/gtest.h>

#include <random>

#include "hyparr/error.hpp"
#include "hyparr/linalg.hpp"
#include "hyparr/polynomial.hpp"
#include "support.hpp"

using namespace hyparr;
using hyparr::test::q;

TEST(Rational, NormalizesOnParse) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-0").str(), "0");
  EXPECT_EQ(Rational::parse("-10/5").str(), "-2");
  EXPECT_EQ(Rational::parse("12345678901234567890123/1").str(), "12345678901234567890123");
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"1/0", "abc", "", "1/", "/2", "1.5", "--1"}) {
    try {
      Rational::parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::MalformedRational) << bad;
    }
  }
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-50, 50), nz(1, 50);
  for (int i = 0; i < 300; ++i) {
    Rational a(d(rng), nz(rng)), b(d(rng), nz(rng)), c(d(rng), nz(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Rational(1));
  }
}

TEST(Rref, Identity) {
  auto r = rref(QMatrix::identity(2));
  EXPECT_EQ(r.reduced, QMatrix::identity(2));
  EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.rank(), 2u);
}

TEST(Rref, RankOne) {
  auto r = rref(QMatrix::from_rows({q({1, 2}), q({2, 4})}, 2));
  EXPECT_EQ(r.reduced, QMatrix::from_rows({q({1, 2}), q({0, 0})}, 2));
  EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0}));
}

TEST(Rref, Zero) {
  auto r = rref(QMatrix(1, 1));
  EXPECT_EQ(r.reduced, QMatrix(1, 1));
  EXPECT_TRUE(r.pivot_columns.empty());
}

TEST(Nullspace, Examples) {
  EXPECT_TRUE(nullspace(QMatrix::identity(2)).empty());
  EXPECT_EQ(nullspace(QMatrix::from_rows({q({1, 1})}, 2)), (std::vector<QVector>{q({-1, 1})}));
  EXPECT_EQ(nullspace(QMatrix(1, 2)), (std::vector<QVector>{q({1, 0}), q({0, 1})}));
}

TEST(SolveAffine, Examples) {
  auto s = solve_affine(QMatrix::identity(2), q({0, 0}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, q({0, 0}));
  EXPECT_TRUE(s->directions.empty());

  EXPECT_FALSE(solve_affine(QMatrix::from_rows({q({1}), q({1})}, 1), q({0, 1})));

  // free variable x2 is set to zero
  s = solve_affine(QMatrix::from_rows({q({1, 1})}, 2), q({1}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, q({1, 0}));
  EXPECT_EQ(s->directions.size(), 1u);
}

TEST(Rref, RandomMatricesIdempotentAndRowEquivalent) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-4, 4);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int it = 0; it < 200; ++it) {
    const std::size_t r = dim(rng), c = dim(rng);
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng));
    const auto res = rref(m);
    EXPECT_EQ(rref(res.reduced).reduced, res.reduced);
    for (std::size_t k = 1; k < res.pivot_columns.size(); ++k) EXPECT_LT(res.pivot_columns[k - 1], res.pivot_columns[k]);
    std::vector<QVector> stacked;
    for (std::size_t i = 0; i < r; ++i) {
      stacked.emplace_back(m.row(i).begin(), m.row(i).end());
      stacked.emplace_back(res.reduced.row(i).begin(), res.reduced.row(i).end());
    }
    EXPECT_EQ(rank(QMatrix::from_rows(stacked, c)), res.rank());

    const auto ns = nullspace(m);
    EXPECT_EQ(ns.size(), c - res.rank());
    for (const auto& v : ns)
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
    if (!ns.empty()) EXPECT_EQ(rank(QMatrix::from_rows(ns, c)), ns.size());
  }
}

TEST(Determinant, SignedElimination) {
  EXPECT_EQ(determinant(QMatrix::from_rows({q({0, 1}), q({1, 0})}, 2)), Rational(-1));
  EXPECT_EQ(determinant(QMatrix::from_rows({q({2, 1}), q({1, 3})}, 2)), Rational(5));
  EXPECT_EQ(determinant(QMatrix(0, 0)), Rational(1));
}

TEST(UniPoly, PrintsAndEvaluates) {
  UniPoly p(q({6, -5, 1}));
  EXPECT_EQ(p.str(), "t^2 - 5*t + 6");
  EXPECT_EQ(p.evaluate(Rational(1)), Rational(2));
  EXPECT_EQ(p.evaluate(Rational(-1)), Rational(12));
  EXPECT_EQ(UniPoly(q({1, -1})) * UniPoly(q({1, -1})), UniPoly(q({1, -2, 1})));
  EXPECT_EQ(UniPoly().degree(), -1);
}

TEST(MultiPoly, ProductAndExactDivision) {
  MultiPoly f = MultiPoly::affine(q({1, 0}), Rational(7));
  MultiPoly g = MultiPoly::affine(q({1, 1}), Rational(5));
  MultiPoly prod = f * g;
  EXPECT_EQ(prod.str(), "x1^2 + x1*x2 + 12*x1 + 7*x2 + 35");
  auto back = prod.divide_exact(g);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, f);
  EXPECT_FALSE(f.divide_exact(g));
  EXPECT_EQ(MultiPoly::constant(2, Rational(-10)).str(), "-10");
}
