#include <gtest/gtest.h>

#include <random>

#include "hyparr/error.hpp"
#include "hyparr/oscomplex.hpp"
#include "support.hpp"

using namespace hyparr;
using hyparr::test::hp;
using hyparr::test::load;
using hyparr::test::os;

namespace {

std::vector<std::vector<int>> keys(const std::vector<OSMonomial>& b) {
  std::vector<std::vector<int>> out;
  for (const auto& m : b) out.push_back(m.indices);
  return out;
}

bool in_span(const OSComplex& c, const std::vector<OSElement>& basis, const OSElement& x) {
  std::vector<QVector> rows;
  for (const auto& b : basis) rows.push_back(c.to_vector(b));
  const std::size_t cols = c.basis(x.degree).size();
  const std::size_t r = rows.empty() ? 0 : rank(QMatrix::from_rows(rows, cols));
  rows.push_back(c.to_vector(x));
  return rank(QMatrix::from_rows(rows, cols)) == r;
}

}  // namespace

TEST(NbcBasis, FixtureA5) {
  const OSComplex c(load("FIX-A5"));
  // circuits {1,3,5} and {2,4,5} break {3,5} and {4,5}
  EXPECT_EQ(keys(c.basis(2)),
            (std::vector<std::vector<int>>{{0, 2}, {0, 4}, {0, 3}, {1, 2}, {1, 3}, {1, 4}}));
  EXPECT_EQ(c.basis(1).size(), 5u);
  EXPECT_EQ(keys(c.basis(0)), (std::vector<std::vector<int>>{{}}));
}

TEST(NbcBasis, GenericTriangle) {
  const OSComplex c(load("FIX-GEN3"));
  EXPECT_EQ(keys(c.basis(2)), (std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Straighten, FixtureA5) {
  const OSComplex c(load("FIX-A5"));
  EXPECT_EQ(c.straighten({3, 4}), os(c, {{1, {2, 5}}, {-1, {2, 4}}}));
  EXPECT_TRUE(c.straighten({0, 1}).is_zero());
  EXPECT_EQ(c.straighten({0, 3}), os(c, {{1, {1, 4}}}));
  EXPECT_EQ(c.straighten({3, 0}), os(c, {{-1, {1, 4}}}));
  EXPECT_TRUE(c.straighten({0, 2, 4}).is_zero());
  try {
    c.straighten({2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RepeatedIndex);
  }
}

TEST(Boundary, FixtureA5) {
  const OSComplex c(load("FIX-A5"));
  EXPECT_EQ(c.boundary(os(c, {{1, {1, 4}}})), os(c, {{1, {4}}, {-1, {1}}}));
  EXPECT_TRUE(c.boundary(os(c, {{1, {1, 4}}, {-1, {1, 5}}, {1, {4, 5}}})).is_zero());
  const OSElement e = c.boundary(os(c, {{2, {1}}, {3, {2}}, {-7, {5}}}));
  EXPECT_EQ(e.degree, 0u);
  EXPECT_EQ(e.terms.at({}), Rational(-2));
}

TEST(FiniteDistance, FixtureA5) {
  const OSComplex c(load("FIX-A5"));
  const auto ker = c.finite_distance_basis();
  ASSERT_EQ(ker.size(), 2u);
  EXPECT_TRUE(in_span(c, ker, os(c, {{1, {1, 4}}, {-1, {1, 5}}, {1, {4, 5}}})));
  EXPECT_TRUE(in_span(c, ker, os(c, {{1, {2, 3}}, {-1, {2, 5}}, {1, {3, 5}}})));
  EXPECT_FALSE(in_span(c, ker, os(c, {{1, {1, 4}}})));
}

TEST(FiniteDistance, TrivialKernels) {
  EXPECT_TRUE(OSComplex(load("FIX-B5")).finite_distance_basis().empty());
  EXPECT_TRUE(OSComplex(load("FIX-BOOL2")).finite_distance_basis().empty());
  try {
    OSComplex(Arrangement(2, {hp({1, 0}, 0)})).finite_distance_basis();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExpectedEssential);
  }
}

TEST(Homology, Fixtures) {
  EXPECT_EQ(OSComplex(load("FIX-A5")).homology_dims(), (std::vector<std::size_t>{0, 0, 2}));
  EXPECT_EQ(OSComplex(load("FIX-GEN3")).homology_dims(), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(OSComplex(load("FIX-BOOL2")).homology_dims(), (std::vector<std::size_t>{0, 0, 0}));
  const OSComplex central(Arrangement(2, {hp({1, 0}, 0), hp({0, 1}, 0), hp({1, 1}, 0)}));
  EXPECT_EQ(central.homology_dims(), (std::vector<std::size_t>{0, 0, 0}));
}

TEST(TextForm, RoundTrip) {
  const OSComplex c(load("FIX-A5"));
  const OSElement x = os(c, {{1, {1, 4}}, {-1, {1, 5}}, {1, {4, 5}}});
  const std::string s = c.str(x);
  EXPECT_EQ(s, "-1 * e[1^5] + 1 * e[1^4] - 1 * e[2^4] + 1 * e[2^5]");
  EXPECT_EQ(c.parse(s, 2), x);
  EXPECT_EQ(c.parse("1 * e[1^4] - 1 * e[1^5] + 1 * e[4^5]", 2), x);
  EXPECT_EQ(c.parse("0", 2), (OSElement{2, {}}));
  EXPECT_EQ(c.str(OSElement{2, {}}), "0");
  EXPECT_EQ(c.str(c.straighten({})), "1 * e[]");
  EXPECT_EQ(c.parse("3/2 * e[]", 0).terms.at({}), Rational(3, 2));
  try {
    c.parse("1 * e[1]", 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeMismatch);
  }
  try {
    c.parse("1 e[1^2]", 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedInput);
  }
}

TEST(Wedge, ContractingHomotopyOnCentralArrangement) {
  const OSComplex c(Arrangement(3, {hp({1, 0, 0}, 0), hp({0, 1, 0}, 0), hp({0, 0, 1}, 0), hp({1, 1, 0}, 0),
                                    hp({0, 1, 1}, 0), hp({1, 1, 1}, 0)}));
  const OSElement e1 = c.straighten({0});
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& m : c.basis(k)) {
      OSElement x{k, {{m.indices, Rational(1)}}};
      EXPECT_EQ(c.boundary(detail::wedge(c, e1, x)) + detail::wedge(c, e1, c.boundary(x)), x) << c.str(x);
    }
}

TEST(OSComplexProperties, ReorderingKeepsDimensions) {
  const Arrangement a = load("FIX-A5");
  std::vector<int> perm{4, 2, 0, 3, 1};
  const OSComplex c(a), d(a.subarrangement(perm));
  for (std::size_t k = 0; k <= 2; ++k) EXPECT_EQ(c.basis(k).size(), d.basis(k).size());
  EXPECT_EQ(c.finite_distance_basis().size(), d.finite_distance_basis().size());
}

TEST(OSComplexProperties, DeletionRestrictionKernelAdditivity) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coeff(-3, 3);
  int checked = 0;
  for (int it = 0; it < 400 && checked < 40; ++it) {
    std::vector<Hyperplane> hs;
    for (int i = 0; i < 6; ++i) hs.push_back(hp({coeff(rng), coeff(rng)}, coeff(rng)));
    std::optional<Arrangement> a;
    try {
      a.emplace(2, hs);
    } catch (const Error&) {
      continue;
    }
    if (!is_essential(*a)) continue;
    const auto dr = deletion_restriction(*a, a->size() - 1);
    if (!is_essential(dr.deletion) || !is_essential(dr.restriction.arrangement)) continue;
    const std::size_t whole = OSComplex(*a).finite_distance_basis().size();
    const std::size_t del = OSComplex(dr.deletion).finite_distance_basis().size();
    const std::size_t res = OSComplex(dr.restriction.arrangement).finite_distance_basis().size();
    EXPECT_EQ(whole, del + res);
    ++checked;
  }
  EXPECT_GE(checked, 20);
}
