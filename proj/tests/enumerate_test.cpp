#include <gtest/gtest.h>

#include <set>

#include "rkdist/rkdist.hpp"
#include "support/oracles.hpp"

using namespace rkdist;

namespace {

std::vector<CanonicalProfile> canonical_entries(const std::vector<std::string>& names) {
  std::vector<CanonicalProfile> out;
  for (const auto& n : names) out.push_back(canonical_form(get(n)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Enumerate, TotalThreeIsFigureOneA) {
  const auto r = enumerate_profiles(3);
  EXPECT_EQ(r.total, 3u);
  EXPECT_EQ(r.profiles, canonical_entries({"fig1a"}));
}

TEST(Enumerate, TotalFourIsFigureOneB) {
  EXPECT_EQ(enumerate_profiles(4).profiles, canonical_entries({"fig1b.1", "fig1b.2", "fig1b.3"}));
}

TEST(Enumerate, TotalFiveIsFigureTwo) {
  EXPECT_EQ(enumerate_profiles(5).profiles, canonical_entries({"fig2.1", "fig2.2", "fig2.3", "fig2.4", "fig2.5",
                                                               "fig2.6", "fig2.7", "fig2.8"}));
}

TEST(Enumerate, TotalTwoIsEmpty) { EXPECT_TRUE(enumerate_profiles(2).profiles.empty()); }

TEST(Enumerate, InvalidTotals) {
  for (Count bad : {0, 1, 13}) {
    try {
      enumerate_profiles(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidTotal);
    }
  }
  EXPECT_NO_THROW(enumerate_profiles(3, std::nullopt, 3));
  EXPECT_THROW(enumerate_profiles(4, std::nullopt, 3), Error);
}

TEST(Enumerate, VertexBudgetFilters) {
  const auto all = enumerate_profiles(6);
  const auto small = enumerate_profiles(6, 2);
  std::size_t expected = 0;
  for (const auto& c : all.profiles)
    if (parse(c.canonical_text).size() <= 2) ++expected;
  EXPECT_EQ(small.profiles.size(), expected);
  // Only the chain [0,4]: a single class of two would be the least class.
  EXPECT_EQ(small.profiles.size(), 1u);
}

TEST(Enumerate, AgreesWithNaiveOracle) {
  for (Count total = 2; total <= 7; ++total)
    EXPECT_EQ(enumerate_profiles(total).profiles.size(), test_support::naive_admissible_count(total)) << total;
}

TEST(Enumerate, ResultsAreValidDistinctAndSorted) {
  for (Count total = 3; total <= 8; ++total) {
    const auto r = enumerate_profiles(total);
    EXPECT_TRUE(std::is_sorted(r.profiles.begin(), r.profiles.end()));
    std::set<std::string> seen;
    for (const auto& c : r.profiles) {
      const auto p = parse(c.canonical_text);
      EXPECT_TRUE(validate_profile(p).admissible());
      EXPECT_EQ(counts(p).total, total);
      EXPECT_EQ(canonical_form(p), c);
      EXPECT_TRUE(seen.insert(c.canonical_text).second);
    }
  }
}

TEST(Enumerate, KnownCounts) {
  const std::vector<std::size_t> expected{0, 1, 3, 8, 23, 76, 291};
  for (Count total = 2; total <= 8; ++total) EXPECT_EQ(enumerate_profiles(total).profiles.size(), expected[total - 2]);
}

TEST(Enumerate, Deterministic) { EXPECT_EQ(enumerate_profiles(7).profiles, enumerate_profiles(7).profiles); }

TEST(PosetGeneration, SmallCounts) {
  // Unlabeled posets on 0..6 points.
  const auto levels = detail::posets_up_to(6);
  const std::vector<std::size_t> expected{1, 1, 2, 5, 16, 63, 318};
  for (std::size_t m = 0; m < levels.size(); ++m) EXPECT_EQ(levels[m].size(), expected[m]) << m;
}

TEST(Compositions, CountsAndBounds) {
  std::size_t seen = 0;
  detail::for_each_composition<std::size_t>(3, 5, {1, 0, 2}, [&](const std::vector<std::size_t>& v) {
    EXPECT_EQ(v[0] + v[1] + v[2], 5u);
    EXPECT_GE(v[0], 1u);
    EXPECT_GE(v[2], 2u);
    ++seen;
  });
  // (1,0,4) (1,1,3) (1,2,2) (2,0,3) (2,1,2) (3,0,2)
  EXPECT_EQ(seen, 6u);
}
