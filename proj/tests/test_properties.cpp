#include <gtest/gtest.h>

#include <random>

#include "hyparr/verify.hpp"
#include "hyparr_cli/cli.hpp"
#include "support.hpp"

using namespace hyparr;

namespace {

std::string failures(const VerifyReport& rep) {
  std::string out;
  for (const Check& c : rep.checks)
    if (c.status == CheckStatus::Fail) out += c.name + ": " + c.detail + "\n";
  return out;
}

}  // namespace

class FixtureProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(FixtureProperties, AllChecksPass) {
  const VerifyReport rep = verify_all(test::load(GetParam()));
  EXPECT_TRUE(rep.ok()) << failures(rep);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, FixtureProperties,
                         ::testing::Values("FIX-A5", "FIX-B5", "FIX-BOOL2", "FIX-GEN3", "FIX-COSMO", "FIX-COSMO-Y1",
                                           "FIX-COSMO-Y7_2"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });

class RandomProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomProperties, AllChecksPass) {
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 10; ++i) {
    const Arrangement a = cli::random_arrangement(rng);
    const VerifyReport rep = verify_all(a);
    EXPECT_TRUE(rep.ok()) << arrangement_to_json(a) << "\n" << failures(rep);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomProperties, ::testing::Values(1u, 2u, 3u, 4u, 5u, 6u));

TEST(RandomArrangements, StayInRange) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Arrangement a = cli::random_arrangement(rng);
    EXPECT_GE(a.dim(), 1u);
    EXPECT_LE(a.dim(), 3u);
    EXPECT_GE(a.size(), a.dim());
    EXPECT_LE(a.size(), 8u);
    EXPECT_TRUE(is_essential(a));
  }
}

TEST(CorruptedBoundary, IsDetected) {
  VerifyOptions opts;
  opts.corrupt_boundary = true;
  const VerifyReport rep = verify_all(test::load("FIX-A5"), opts);
  EXPECT_FALSE(rep.ok());
  ASSERT_NE(rep.find("boundary_squared_zero"), nullptr);
  EXPECT_EQ(rep.find("boundary_squared_zero")->status, CheckStatus::Fail);
}
