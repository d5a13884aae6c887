// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails. --long adds rank 6 to the exhaustive equivalence run.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "thetavex/classify.hpp"
#include "thetavex/diagram.hpp"
#include "thetavex/theta.hpp"

using namespace thetavex;

namespace {

// Every criterion is exact; these are the only knobs.
constexpr std::uint64_t kAllowedMismatches = 0;
constexpr double kFastBudgetMs = 1000.0;
constexpr double kExhaustiveBudgetMs = 60000.0;
constexpr int kEquivalenceMaxRank = 5;
constexpr int kEquivalenceLongRank = 6;
constexpr int kRoundTripMaxRank = 6;
constexpr int kStructuralMaxRank = 5;
const std::map<int, std::uint64_t> kPinnedCounts = {{3, 44}, {4, 286}, {5, 2061}};

const char* kTripleText = "3 4 5 6 9; 8 6 5 4 2; 7 4 2 -3 -6";
const char* kWindow = "10 1 5 3 -2 -4 6 -9 -8 -7";
const char* kInverse = "2 -5 4 -6 3 7 -10 -9 -8 1";

using Key = std::tuple<int, int, int>;

Key key(const CornerRecord& c) { return {c.k, c.p, c.q}; }

std::set<Key> keys(const std::vector<CornerRecord>& cs) {
  std::set<Key> out;
  for (const auto& c : cs) out.insert(key(c));
  return out;
}

class Gate {
 public:
  template <class Fn>
  void run(int id, const char* title, double budget_ms, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ms > budget_ms) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    failed_ |= !ok;
    std::printf("criterion %d: %s %s (%.0f ms)%s%s\n", id, ok ? "PASS" : "FAIL", title, ms,
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
  }
  bool failed() const { return failed_; }

 private:
  bool failed_ = false;
};

bool golden_construction(std::string& detail) {
  const auto t = ThetaTriple::parse(kTripleText, 10);
  const auto trace = construct_traced(t, 10);
  const std::vector<std::vector<std::pair<int, int>>> table = {
      {{8, -9}, {9, -8}, {10, -7}},
      {{6, -4}},
      {{5, -2}},
      {{4, 3}},
      {{2, 1}, {3, 5}, {7, 6}},
      {{1, 10}},
  };
  if (trace.result.to_string() != kWindow) {
    detail = "got " + trace.result.to_string();
    return false;
  }
  if (trace.steps.size() != table.size()) {
    detail = std::to_string(trace.steps.size()) + " steps";
    return false;
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (trace.steps[i].placed != table[i]) {
      detail = "step " + std::to_string(i + 1) + " differs";
      return false;
    }
  }
  return true;
}

bool golden_dual(std::string& detail) {
  const auto t = ThetaTriple::parse(kTripleText, 10);
  const auto inv = construct_inverse(t, 10);
  detail = inv.to_string();
  return inv.to_string() == kInverse && inv == construct(t, 10).inverse();
}

bool corner_taxonomy(std::string& detail) {
  const auto w = SignedPermutation::parse(kWindow);
  const auto cs = corners(w);
  const std::set<Key> ne = {{3, 8, 7}, {4, 6, 4}, {5, 5, 2}, {6, 4, -3}, {7, 2, -3}, {9, 2, -6}};
  const std::set<Key> unessential = {{6, 2, -1}};
  const std::set<Key> optional = {{7, 2, -3}};
  std::set<Key> all = ne;
  all.insert(unessential.begin(), unessential.end());
  const auto opt = optional_corners(w, ThetaTriple::parse(kTripleText, 10), cs);
  if (keys(cs.corners) != all) detail += "corner set differs; ";
  if (keys(cs.ne_path) != ne) detail += "NE path differs; ";
  if (keys(cs.unessential) != unessential) detail += "unessential differs; ";
  if (keys(opt) != optional) detail += "optional differs; ";
  if (!detail.empty()) detail.resize(detail.size() - 2);
  return detail.empty();
}

bool small_example(std::string& detail) {
  const auto ic = iota_corners(SignedPermutation::parse("-2 3 1"));
  const std::set<Key> want = {{1, 3, -1}, {1, 1, 2}, {3, 0, -1}, {2, -2, 2}};
  const auto got = keys(ic);
  if (got != want || ic.size() != want.size()) {
    detail = "iota corner set differs";
    return false;
  }
  for (const auto& c : ic) {
    if (!got.count(key(reflect(c))) || key(reflect(reflect(c))) != key(c)) {
      detail = "reflection breaks at (" + std::to_string(c.k) + "," + std::to_string(c.p) + "," +
               std::to_string(c.q) + ")";
      return false;
    }
  }
  return true;
}

bool equivalence(int max_rank, std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= max_rank; ++n) {
    const auto s = verify_equivalence(n, std::max(1u, std::thread::hardware_concurrency()), false);
    detail += (n > 1 ? "; " : "") + std::string("n=") + std::to_string(n) + " " + s.to_string();
    if (s.mismatches.size() > kAllowedMismatches) ok = false;
  }
  return ok;
}

bool round_trip(std::string& detail) {
  std::uint64_t checked = 0, bad = 0;
  for (int n = 1; n <= kRoundTripMaxRank; ++n) {
    for_each_triple(n, n, [&](const ThetaTriple& t) {
      ++checked;
      const auto w = construct(t, n);
      const auto back = recover(w);
      if (!back || *back != t || construct(*back, n) != w) ++bad;
      return true;
    });
  }
  detail = std::to_string(checked) + " triples, " + std::to_string(bad) + " failures";
  return checked > 0 && bad == 0;
}

bool in_region(int pos, int value, int p, int q) { return -value >= q && pos >= p; }

bool structural(std::string& detail) {
  std::map<std::string, std::uint64_t> failures;
  std::uint64_t elements = 0, triples = 0;
  for (int n = 1; n <= kStructuralMaxRank; ++n) {
    GroupEnumeration(n).for_each([&](const SignedPermutation& w) {
      ++elements;
      const auto d = build_extended_diagram(w);
      if (static_cast<int>(d.diagram_boxes.size()) != length(w)) ++failures["box count"];
    });
    for_each_triple(n, n, [&](const ThetaTriple& t) {
      ++triples;
      const auto trace = construct_traced(t, n);
      const auto& w = trace.result;
      const auto der = derive(t);
      const int s = t.size();

      std::set<int> want_desc, want_inv;
      for (int i = 1; i <= s; ++i) {
        want_desc.insert(t.p_at(i) - 1);
        want_inv.insert(i < der.a ? t.q_at(i) - 1 : -t.q_at(i));
      }
      const auto ds = descents(w);
      const auto di = descents(w.inverse());
      if (std::set<int>(ds.begin(), ds.end()) != want_desc) ++failures["descents"];
      if (std::set<int>(di.begin(), di.end()) != want_inv) ++failures["inverse descents"];

      const auto cs = corners(w);
      const auto diagram = build_extended_diagram(w);
      const auto ne = keys(cs.ne_path);
      for (int i = 1; i <= s; ++i) {
        if (count_dots_in_region(diagram, t.p_at(i), t.q_at(i)) != t.k_at(i)) ++failures["region count"];
        if (!ne.count({t.k_at(i), t.p_at(i), t.q_at(i)})) ++failures["minimality"];
      }
      for (int i = 1; i <= s + 1; ++i) {
        for (auto [pos, value] : trace.steps[i - 1].placed) {
          if (i <= s && !in_region(pos, value, t.p_at(i), t.q_at(i))) ++failures["step placement"];
          if (i > 1 && in_region(pos, value, t.p_at(i - 1), t.q_at(i - 1))) ++failures["step placement"];
        }
      }

      std::set<std::pair<int, int>> own;
      for (int i = 1; i <= s; ++i) own.emplace(t.p_at(i), t.q_at(i));
      for (int i = 1; i <= s; ++i) {
        const int next_p = i < s ? t.p_at(i + 1) : 0;
        if (t.p_at(i) <= next_p) continue;
        for (const auto& c : cs.corners) {
          if (own.count({c.p, c.q})) continue;
          if (c.p > next_p && c.q <= t.q_at(i)) ++failures["exclusion"];
        }
      }

      const auto opt = optional_corners(w, t, cs);
      std::multiset<Key> parts, all;
      for (int i = 1; i <= s; ++i) parts.emplace(t.k_at(i), t.p_at(i), t.q_at(i));
      for (const auto& c : opt) parts.insert(key(c));
      for (const auto& c : cs.unessential) parts.insert(key(c));
      for (const auto& c : cs.corners) all.insert(key(c));
      if (parts != all) ++failures["decomposition"];
      return true;
    });
  }
  detail = std::to_string(elements) + " elements, " + std::to_string(triples) + " triples";
  for (const auto& [name, count] : failures) detail += "; " + name + " x" + std::to_string(count);
  return failures.empty();
}

bool pinned_counts(std::string& detail) {
  bool ok = true;
  for (const auto& [n, want] : kPinnedCounts) {
    std::uint64_t count = 0;
    GroupEnumeration(n).for_each([&](const SignedPermutation& w) {
      count += classify_by_patterns(w).ok ? 1 : 0;
    });
    const auto generated = oracle_theta_vexillary_set(n).size();
    detail += (detail.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + " " +
              std::to_string(count) + "/" + std::to_string(generated);
    if (count != want || generated != want) ok = false;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) {
      long_run = true;
    } else {
      std::fprintf(stderr, "usage: %s [--long]\n", argv[0]);
      return 2;
    }
  }

  Gate gate;
  gate.run(1, "golden construction and placement trace", kFastBudgetMs, golden_construction);
  gate.run(2, "golden dual construction", kFastBudgetMs, golden_dual);
  gate.run(3, "corner taxonomy of the rank-10 example", kFastBudgetMs, corner_taxonomy);
  gate.run(4, "iota corners of -2 3 1 and reflection symmetry", kFastBudgetMs, small_example);
  const int max_rank = long_run ? kEquivalenceLongRank : kEquivalenceMaxRank;
  const std::string title = "three classifiers agree on W_1..W_" + std::to_string(max_rank);
  gate.run(5, title.c_str(), kExhaustiveBudgetMs,
           [&](std::string& detail) { return equivalence(max_rank, detail); });
  gate.run(6, "recover/construct round trip for triples up to rank 6", kExhaustiveBudgetMs,
           round_trip);
  gate.run(7, "structural suite up to rank 5", kExhaustiveBudgetMs, structural);
  gate.run(8, "pinned theta-vexillary counts", kExhaustiveBudgetMs, pinned_counts);
  return gate.failed() ? 1 : 0;
}
