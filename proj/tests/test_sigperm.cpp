#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"
#include "thetavex/sigperm.hpp"

using namespace thetavex;

namespace {

SignedPermutation P(const char* text) { return SignedPermutation::parse(text); }

}  // namespace

TEST(Parse, AcceptsWindowText) {
  const auto w = P("  -2 3   1 ");
  EXPECT_EQ(w.rank(), 3);
  EXPECT_EQ(w(1), -2);
  EXPECT_EQ(w(2), 3);
  EXPECT_EQ(w(3), 1);
  EXPECT_EQ(w.to_string(), "-2 3 1");
}

TEST(Parse, RejectsBadInputNamingTheToken) {
  const auto message = [](const char* text) {
    try {
      SignedPermutation::parse(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("1 x 2").find("'x'"), std::string::npos);
  EXPECT_NE(message("1 0 2").find("'0'"), std::string::npos);
  EXPECT_NE(message("1 4 2").find("'4'"), std::string::npos);
  EXPECT_NE(message("1 -1").find("'-1'"), std::string::npos);
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("2 --1"), ParseError);
}

TEST(Parse, RoundTripsEveryWindow) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& win : oracle::all_windows(n)) {
      const SignedPermutation w(win);
      EXPECT_EQ(P(w.to_string().c_str()), w);
    }
  }
}

TEST(Display, OverlineMarksNegatives) {
  EXPECT_EQ(P("-2 3 1").to_string(true), "2̅ 3 1");
  EXPECT_EQ(P("2 3 4 5 6 7 8 9 1 -10").to_string(true), "2 3 4 5 6 7 8 9 1 1̅0̅");
}

TEST(FullForm, AntisymmetricWithFixedPointsOutside) {
  const auto w = P("-2 3 1");
  EXPECT_EQ(w(0), 0);
  EXPECT_EQ(w(-1), 2);
  EXPECT_EQ(w(-2), -3);
  EXPECT_EQ(w(-3), -1);
  EXPECT_EQ(w(4), 4);
  EXPECT_EQ(w(-7), -7);
  const FullPermutation f = embed_odd(w);
  EXPECT_EQ(std::vector<int>(f.values().begin(), f.values().end()),
            (std::vector<int>{-1, -3, 2, 0, -2, 3, 1}));
  EXPECT_EQ(embed_even(w), (std::vector<int>{-1, -3, 2, -2, 3, 1}));
}

TEST(FullForm, InverseAndExtension) {
  const auto w = P("10 1 5 3 -2 -4 6 -9 -8 -7");
  EXPECT_EQ(w.inverse().to_string(), "2 -5 4 -6 3 7 -10 -9 -8 1");
  EXPECT_EQ(P("-2 3 1").extended(5).to_string(), "-2 3 1 4 5");
  const FullPermutation f(w);
  for (int i = -12; i <= 12; ++i) EXPECT_EQ(f.inverse(f(i)), i);
}

TEST(Special, IdentityAndLongest) {
  EXPECT_EQ(SignedPermutation::identity(3).to_string(), "1 2 3");
  EXPECT_EQ(SignedPermutation::longest(3).to_string(), "-1 -2 -3");
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(length(SignedPermutation::identity(n)), 0);
    EXPECT_EQ(length(SignedPermutation::longest(n)), n * n);
  }
}

TEST(Length, MatchesCoxeterWordLength) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& [win, len] : oracle::coxeter_lengths(n)) {
      EXPECT_EQ(length(SignedPermutation(win)), len) << SignedPermutation(win).to_string();
    }
  }
}

TEST(Length, InverseHasSameLength) {
  for (int n = 1; n <= 5; ++n) {
    GroupEnumeration(n).for_each([](const SignedPermutation& w) {
      EXPECT_EQ(length(w), length(w.inverse()));
      EXPECT_EQ(oracle::window_of(w.inverse()), oracle::inverse(oracle::window_of(w)));
      EXPECT_EQ(w.inverse().inverse(), w);
    });
  }
}

TEST(Descents, ZeroIsADescentIffFirstEntryNegative) {
  EXPECT_EQ(descents(P("-2 3 1")), (std::vector<int>{0, 2}));
  EXPECT_EQ(descents(P("1 2 3")), std::vector<int>{});
  EXPECT_EQ(descents(P("10 1 5 3 -2 -4 6 -9 -8 -7")), (std::vector<int>{1, 3, 4, 5, 7}));
}

TEST(Descents, AgreeWithLengthDrop) {
  // d is a descent iff multiplying by the generator s_d shortens w.
  for (int n = 1; n <= 4; ++n) {
    GroupEnumeration(n).for_each([&](const SignedPermutation& w) {
      const auto ds = descents(w);
      for (int d = 0; d < n; ++d) {
        std::vector<int> v(w.window().begin(), w.window().end());
        if (d == 0) {
          v[0] = -v[0];
        } else {
          std::swap(v[d - 1], v[d]);
        }
        const bool shorter = length(SignedPermutation(v)) < length(w);
        EXPECT_EQ(shorter, std::find(ds.begin(), ds.end(), d) != ds.end());
      }
    });
  }
}

TEST(Patterns, WitnessIsLexLeast) {
  const auto idx = find_pattern(P("2 1 4 3"), SignedPattern({2, 1, 4, 3}));
  ASSERT_TRUE(idx);
  EXPECT_EQ(*idx, (std::vector<int>{1, 2, 3, 4}));
  const auto idx2 = find_pattern(P("-1 -2 4 3"), SignedPattern({-1, 3, 2}));
  ASSERT_TRUE(idx2);
  EXPECT_EQ(*idx2, (std::vector<int>{1, 3, 4}));
  EXPECT_FALSE(find_pattern(P("1 2"), SignedPattern({-1, 3, 2})));
}

TEST(Patterns, AgreeWithSubsetOracle) {
  for (int n = 1; n <= 6; ++n) {
    GroupEnumeration(n).for_each([](const SignedPermutation& w) {
      const auto win = oracle::window_of(w);
      for (const auto& pat : oracle::patterns()) {
        EXPECT_EQ(contains_pattern(w, SignedPattern(pat)), oracle::contains(win, pat))
            << w.to_string() << " / " << SignedPattern(pat).to_string();
      }
    });
  }
}

TEST(Patterns, SelfContainmentAndMonotonicity) {
  // Every pattern contains itself, and padding a window keeps containment.
  for (int m = 1; m <= 3; ++m) {
    GroupEnumeration(m).for_each([&](const SignedPermutation& pi) {
      EXPECT_TRUE(contains_pattern(pi, pi));
      EXPECT_TRUE(contains_pattern(pi.extended(m + 2), pi));
      std::vector<int> shifted{-(m + 1)};
      for (int v : pi.window()) shifted.push_back(v);
      EXPECT_TRUE(contains_pattern(SignedPermutation(shifted), pi));
    });
  }
}

TEST(Enumeration, SizesAndLexOrder) {
  for (int n = 1; n <= 5; ++n) {
    const GroupEnumeration g(n);
    std::uint64_t expected = 1;
    for (int i = 1; i <= n; ++i) expected *= 2 * i;
    EXPECT_EQ(g.size(), expected);

    std::vector<std::vector<int>> seen;
    g.for_each([&](const SignedPermutation& w) { seen.push_back(oracle::window_of(w)); });
    EXPECT_EQ(seen, oracle::all_windows(n));
    for (std::uint64_t i = 0; i < g.size(); i += 7) {
      EXPECT_EQ(oracle::window_of(g.at(i)), seen[i]);
    }
  }
}

TEST(Enumeration, ChunksPartitionTheGroup) {
  const GroupEnumeration g(4);
  for (std::size_t count : {1u, 3u, 7u, 64u, 1000u}) {
    const auto chunks = g.chunks(count);
    std::uint64_t expect_begin = 0;
    for (const auto& c : chunks) {
      EXPECT_EQ(c.begin, expect_begin);
      EXPECT_LT(c.begin, c.end);
      expect_begin = c.end;
    }
    EXPECT_EQ(expect_begin, g.size());
  }
}

TEST(Enumeration, RankGuard) {
  EXPECT_THROW(GroupEnumeration(9), RankTooLargeError);
  EXPECT_NO_THROW(GroupEnumeration(9, true));
  EXPECT_THROW(GroupEnumeration(0), std::out_of_range);
}
