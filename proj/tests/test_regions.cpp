#include <gtest/gtest.h>

#include <random>

#include "hyparr/error.hpp"
#include "hyparr/lp.hpp"
#include "hyparr/regions.hpp"
#include "support.hpp"

using namespace hyparr;
using hyparr::test::hp;
using hyparr::test::load;
using hyparr::test::q;

namespace {

LinearProgram one_dim(Sense sense, std::vector<Constraint> cs) {
  LinearProgram lp;
  lp.dim = 1;
  lp.objective = q({1});
  lp.sense = sense;
  lp.constraints = std::move(cs);
  return lp;
}

Region region(const Arrangement& a, const std::string& signs) {
  for (const Region& r : enumerate_regions(a))
    if (r.signs == signs) return r;
  throw std::runtime_error("missing region " + signs);
}

}  // namespace

TEST(LP, Examples) {
  auto r = lp_optimize(one_dim(Sense::Maximize, {{q({1}), Relation::LessEqual, Rational(3)}}));
  EXPECT_EQ(r.status, LPStatus::Optimal);
  EXPECT_EQ(r.value, Rational(3));
  EXPECT_EQ(r.point, q({3}));

  r = lp_optimize(one_dim(Sense::Maximize, {{q({1}), Relation::GreaterEqual, Rational(0)}}));
  EXPECT_EQ(r.status, LPStatus::Unbounded);

  LinearProgram inf = one_dim(Sense::Maximize,
                              {{q({1}), Relation::LessEqual, Rational(0)}, {q({1}), Relation::GreaterEqual, Rational(1)}});
  inf.objective = q({0});
  EXPECT_EQ(lp_optimize(inf).status, LPStatus::Infeasible);
}

TEST(LP, EqualitiesAndMinimization) {
  LinearProgram lp;
  lp.dim = 2;
  lp.objective = q({1, 2});
  lp.sense = Sense::Minimize;
  lp.constraints = {{q({1, 1}), Relation::Equal, Rational(4)},
                    {q({1, 0}), Relation::LessEqual, Rational(3)},
                    {q({1, -1}), Relation::GreaterEqual, Rational(-10)}};
  const LPResult r = lp_optimize(lp);
  ASSERT_EQ(r.status, LPStatus::Optimal);
  EXPECT_EQ(r.value, Rational(5));
  EXPECT_EQ(r.point, q({3, 1}));
}

TEST(Regions, Counts) {
  EXPECT_EQ(enumerate_regions(load("FIX-A5")).size(), 12u);
  EXPECT_EQ(enumerate_regions(load("FIX-GEN3")).size(), 7u);
  EXPECT_EQ(enumerate_regions(load("FIX-BOOL2")).size(), 4u);
  EXPECT_EQ(enumerate_regions(Arrangement(1, {})).size(), 1u);
}

TEST(Regions, Boundedness) {
  const Arrangement g = load("FIX-GEN3");
  EXPECT_TRUE(is_bounded(g, region(g, "++-")));
  EXPECT_FALSE(is_bounded(g, region(g, "+++")));
  const Arrangement a = load("FIX-A5");
  std::size_t bounded = 0;
  for (const Region& r : enumerate_regions(a)) bounded += is_bounded(a, r);
  EXPECT_EQ(bounded, 2u);

  Region bad = region(g, "++-");
  bad.witness = q({5, 5});
  try {
    is_bounded(g, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RegionMismatch);
  }
}

TEST(Facets, GenericTriangle) {
  const Arrangement g = load("FIX-GEN3");
  const auto facets = facets_in(g, region_cell(g, region(g, "++-")), 2);
  ASSERT_EQ(facets.size(), 1u);
  const QVector& p = facets[0].witness;
  EXPECT_GT(p[0].sign(), 0);
  EXPECT_GT(p[1].sign(), 0);
  EXPECT_EQ(p[0] + p[1], Rational(1));
  EXPECT_EQ(facets[0].signs, "++0");

  const auto open = facets_in(g, region_cell(g, region(g, "+++")), 0);
  ASSERT_EQ(open.size(), 1u);
  EXPECT_TRUE(open[0].witness[0].is_zero());
  EXPECT_GT(open[0].witness[1], Rational(1));
}

TEST(Facets, NotAWall) {
  const Arrangement a = load("FIX-A5");
  // triangle (0,0), (0,1), (1,1) never reaches x1 = 1
  EXPECT_TRUE(facets_in(a, region_cell(a, region(a, "+-+--")), 1).empty());
}

TEST(Facets, ContainedCarrier) {
  const Arrangement g = load("FIX-GEN3");
  const auto facets = facets_in(g, region_cell(g, region(g, "++-")), 2);
  try {
    facets_in(g, facets[0], 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HyperplaneContainsFlat);
  }
}

TEST(RegionProperties, BruteForceWitnessesAndBoundedness) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(1, 3), c(-3, 3);
  int done = 0;
  while (done < 40) {
    const auto n = static_cast<std::size_t>(dim(rng));
    std::uniform_int_distribution<std::size_t> count(1, 7);
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0, m = count(rng); i < m; ++i) {
      QVector normal(n);
      for (auto& x : normal) x = Rational(c(rng));
      hs.push_back(Hyperplane{normal, Rational(c(rng)), ""});
    }
    std::optional<Arrangement> a;
    try {
      a.emplace(n, hs);
    } catch (const Error&) {
      continue;
    }
    ++done;
    const auto regions = enumerate_regions(*a);
    const auto brute = brute_force_regions(*a);
    ASSERT_EQ(regions.size(), brute.size());
    for (std::size_t i = 0; i < regions.size(); ++i) {
      EXPECT_EQ(regions[i].signs, brute[i].signs);
      EXPECT_NO_THROW(check_witness(*a, regions[i]));
      // independent boundedness: every coordinate is bounded over the closure
      bool all_bounded = true;
      for (std::size_t k = 0; k < n; ++k)
        for (auto sense : {Sense::Maximize, Sense::Minimize}) {
          LinearProgram lp;
          lp.dim = n;
          lp.objective = QVector(n);
          lp.objective[k] = Rational(1);
          lp.sense = sense;
          for (std::size_t h = 0; h < a->size(); ++h) {
            const Rational s(regions[i].signs[h] == '+' ? 1 : -1);
            QVector row = (*a)[h].normal;
            for (auto& x : row) x *= s;
            lp.constraints.push_back({row, Relation::GreaterEqual, -(*a)[h].offset * s});
          }
          all_bounded = all_bounded && lp_optimize(lp).status == LPStatus::Optimal;
        }
      EXPECT_EQ(is_bounded(*a, regions[i]), all_bounded);
    }
  }
}
