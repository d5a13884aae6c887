#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "support/oracles.hpp"
#include "thetavex/classify.hpp"

using namespace thetavex;

namespace {

const char* kWindow = "10 1 5 3 -2 -4 6 -9 -8 -7";

std::map<int, std::uint64_t> golden_counts() {
  std::ifstream in(std::string(THETAVEX_GOLDEN_DIR) + "/theta_vexillary_counts.txt");
  std::map<int, std::uint64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    int n = 0;
    std::uint64_t count = 0;
    fields >> n >> count;
    out[n] = count;
  }
  return out;
}

}  // namespace

TEST(PatternTable, DigestIsPinned) {
  EXPECT_EQ(pattern_table_digest(), 0xef20438858637f4full);
}

TEST(PatternTable, MatchesOracleList) {
  const auto& table = pattern_table();
  ASSERT_EQ(table.size(), oracle::patterns().size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    EXPECT_EQ(oracle::window_of(table[i]), oracle::patterns()[i]) << i;
  }
}

TEST(PatternTable, NoPatternContainsAnother) {
  for (const auto& a : pattern_table()) {
    for (const auto& b : pattern_table()) {
      if (a == b) continue;
      EXPECT_FALSE(contains_pattern(a, b)) << a.to_string() << " contains " << b.to_string();
    }
  }
}

TEST(Classify, Examples) {
  const auto r = classify(SignedPermutation::parse("2 1 4 3"));
  EXPECT_FALSE(r.theta_vexillary());
  ASSERT_TRUE(r.pattern_witness);
  EXPECT_EQ(r.pattern_witness->pattern.to_string(), "2 1 4 3");
  EXPECT_EQ(r.pattern_witness->indices, (std::vector<int>{1, 2, 3, 4}));

  const auto big = classify(SignedPermutation::parse(kWindow));
  EXPECT_TRUE(big.theta_vexillary());
  EXPECT_TRUE(big.consistent());
  ASSERT_TRUE(big.triple);
  EXPECT_EQ(big.triple->to_string(), "3 4 5 6 9; 8 6 5 4 2; 7 4 2 -3 -6");

  EXPECT_FALSE(classify(SignedPermutation::parse("-2 3 1")).theta_vexillary());

  const auto neg = classify(SignedPermutation::parse("-1 3 2"));
  EXPECT_FALSE(neg.theta_vexillary());
  ASSERT_TRUE(neg.pattern_witness);
  EXPECT_EQ(neg.pattern_witness->pattern.to_string(), "-1 3 2");
}

TEST(Classify, IdentityAndLongest) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& w : {SignedPermutation::identity(n), SignedPermutation::longest(n)}) {
      const auto r = classify(w);
      EXPECT_TRUE(r.theta_vexillary()) << w.to_string();
      EXPECT_TRUE(r.consistent()) << w.to_string();
    }
  }
  const auto r = classify(SignedPermutation::identity(3));
  ASSERT_TRUE(r.triple);
  EXPECT_EQ(r.triple->size(), 0);
}

TEST(Classify, QuickModeSkipsRecoveryAfterPattern) {
  const auto r = classify(SignedPermutation::parse("-1 3 2"), ClassifyMode::Quick);
  EXPECT_FALSE(r.by_triple.has_value());
  EXPECT_TRUE(r.by_corners.has_value());
  const auto full = classify(SignedPermutation::parse("-1 3 2"), ClassifyMode::Full);
  EXPECT_EQ(full.by_triple, std::optional<bool>(false));
}

TEST(Classify, OptionalCornerIsTagged) {
  const auto r = classify(SignedPermutation::parse(kWindow));
  std::vector<std::tuple<int, int, int>> opt;
  for (const auto& c : r.corners.corners) {
    if (c.cls == CornerClass::Optional) opt.emplace_back(c.k, c.p, c.q);
  }
  EXPECT_EQ(opt, (std::vector<std::tuple<int, int, int>>{{7, 2, -3}}));
}

TEST(Classify, ThreeWayAgreementThroughRankFive) {
  for (int n = 1; n <= 5; ++n) {
    const GroupEnumeration group(n);
    group.for_each([&](const SignedPermutation& w) {
      const auto r = classify(w, ClassifyMode::Full);
      ASSERT_TRUE(r.consistent()) << w.to_string();
      ASSERT_EQ(*r.by_patterns, oracle::avoids_all(oracle::window_of(w))) << w.to_string();
    });
  }
}

// At rank 6 the corner test accepts four elements that contain 2 1 4 3; the
// pattern and triple verdicts agree on them and decide the report.
TEST(Classify, KnownCornerDisagreementsAtRankSix) {
  const auto summary = verify_equivalence(6);
  std::vector<std::string> got;
  for (const auto& w : summary.mismatches) got.push_back(w.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"3 5 1 6 -2 4", "3 5 1 6 4 -2", "3 6 1 5 -2 4",
                                           "3 6 1 5 4 -2"}));
  for (const auto& w : summary.mismatches) {
    const auto r = classify(w);
    EXPECT_FALSE(r.consistent());
    EXPECT_TRUE(*r.by_corners);
    EXPECT_FALSE(*r.by_patterns);
    EXPECT_FALSE(*r.by_triple);
    EXPECT_FALSE(r.theta_vexillary());
    EXPECT_TRUE(oracle::contains(oracle::window_of(w), {2, 1, 4, 3}));
  }
  EXPECT_EQ(summary.theta_vexillary, golden_counts().at(6));
}

TEST(Oracle, TripleSearchMatchesRecovery) {
  const GroupEnumeration group(4);
  group.for_each([&](const SignedPermutation& w) {
    EXPECT_EQ(oracle_is_theta_vexillary(w), classify_by_triple(w).ok) << w.to_string();
  });
  EXPECT_TRUE(oracle_is_theta_vexillary(SignedPermutation::parse(kWindow), 0, true));
  EXPECT_FALSE(oracle_is_theta_vexillary(SignedPermutation::parse("-2 3 1")));
}

TEST(Oracle, GeneratedSetEqualsPatternAvoiders) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<oracle::Window> expected;
    for (const auto& w : oracle::all_windows(n)) {
      if (oracle::avoids_all(w)) expected.push_back(w);
    }
    std::vector<oracle::Window> got;
    for (const auto& w : oracle_theta_vexillary_set(n)) got.push_back(oracle::window_of(w));
    EXPECT_EQ(got, expected) << "n=" << n;
  }
}

TEST(Golden, CountsMatchNaiveOracle) {
  const auto golden = golden_counts();
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t count = 0;
    for (const auto& w : oracle::all_windows(n)) count += oracle::avoids_all(w) ? 1 : 0;
    EXPECT_EQ(count, golden.at(n)) << "n=" << n;
  }
}

TEST(Verify, SummaryIndependentOfJobs) {
  const auto one = verify_equivalence(5, 1);
  EXPECT_EQ(one.total, 3840u);
  EXPECT_EQ(one.theta_vexillary, golden_counts().at(5));
  EXPECT_TRUE(one.mismatches.empty());
  for (unsigned jobs : {2u, 3u, 7u}) {
    const auto other = verify_equivalence(5, jobs);
    EXPECT_EQ(other.to_string(), one.to_string()) << jobs;
  }
  EXPECT_EQ(verify_equivalence(2).to_string(), "8 total, 8 theta-vexillary, 0 mismatches");
}

TEST(Verify, RankGuard) {
  EXPECT_THROW(verify_equivalence(9), RankTooLargeError);
}

TEST(Enumerate, StreamIndependentOfJobs) {
  auto collect = [](unsigned jobs) {
    std::vector<SignedPermutation> out;
    for_each_theta_vexillary(5, jobs, false, [&](const SignedPermutation& w) {
      out.push_back(w);
      return true;
    });
    return out;
  };
  const auto one = collect(1);
  EXPECT_EQ(one.size(), golden_counts().at(5));
  EXPECT_TRUE(std::is_sorted(one.begin(), one.end()));
  EXPECT_EQ(collect(4), one);
}

TEST(Enumerate, StopsEarly) {
  int seen = 0;
  for_each_theta_vexillary(4, 2, false, [&](const SignedPermutation&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5);
}

TEST(Vexillary, PositiveTriplesAreThetaVexillary) {
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for_each_triple(n, n, [&](const ThetaTriple& t) {
      for (int q : t.q) {
        if (q <= 0) return true;
      }
      const auto w = construct(t, n);
      EXPECT_TRUE(classify(w).theta_vexillary()) << t.to_string();
      ++checked;
      return true;
    });
  }
  EXPECT_GT(checked, 0);
}
