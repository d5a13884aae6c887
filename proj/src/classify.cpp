#include "thetavex/classify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace thetavex {

const std::array<SignedPattern, 13>& pattern_table() {
  static const std::array<SignedPattern, 13> table = {
      SignedPattern({-1, 3, 2}),        SignedPattern({-2, 3, 1}),
      SignedPattern({-3, 2, 1}),        SignedPattern({-3, 2, -1}),
      SignedPattern({2, 1, 4, 3}),      SignedPattern({2, -3, 4, -1}),
      SignedPattern({-2, -3, 4, -1}),   SignedPattern({3, -4, 1, -2}),
      SignedPattern({3, -4, -1, -2}),   SignedPattern({-3, -4, 1, -2}),
      SignedPattern({-3, -4, -1, -2}),  SignedPattern({-4, 1, -2, 3}),
      SignedPattern({-4, -1, -2, 3}),
  };
  return table;
}

std::uint64_t pattern_table_digest() {
  std::string text;
  for (const auto& pi : pattern_table()) {
    text += pi.to_string();
    text += ';';
  }
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

CornerVerdict classify_by_corners(const CornerSet& cs) {
  for (const auto& c : cs.corners) {
    if (c.cls == CornerClass::Other) return {false, c};
  }
  return {true, std::nullopt};
}

CornerVerdict classify_by_corners(const SignedPermutation& w) {
  return classify_by_corners(corners(w));
}

PatternVerdict classify_by_patterns(const SignedPermutation& w) {
  for (const auto& pi : pattern_table()) {
    if (auto idx = find_pattern(w, pi)) return {false, PatternWitness{pi, std::move(*idx)}};
  }
  return {true, std::nullopt};
}

namespace {

TripleVerdict triple_verdict(const SignedPermutation& w, const CornerSet& cs) {
  auto t = recover(w, cs);
  if (!t || !validate(*t).valid()) return {false, std::nullopt};
  try {
    if (construct(*t, w.rank()) != w) return {false, std::nullopt};
  } catch (const std::runtime_error&) {
    return {false, std::nullopt};
  }
  return {true, std::move(t)};
}

void tag_optional(ClassificationReport& r) {
  if (!r.triple) return;
  const auto opt = optional_corners(r.w, *r.triple, r.corners);
  for (auto& c : r.corners.corners) {
    const bool is_opt = std::any_of(opt.begin(), opt.end(), [&](const CornerRecord& o) {
      return o.p == c.p && o.q == c.q;
    });
    if (is_opt) c.cls = CornerClass::Optional;
  }
}

}  // namespace

TripleVerdict classify_by_triple(const SignedPermutation& w) { return triple_verdict(w, corners(w)); }

bool ClassificationReport::consistent() const {
  std::optional<bool> seen;
  for (const auto& v : {by_patterns, by_corners, by_triple}) {
    if (!v) continue;
    if (seen && *seen != *v) return false;
    seen = v;
  }
  return true;
}

bool ClassificationReport::theta_vexillary() const {
  if (by_patterns) return *by_patterns;
  if (by_corners) return *by_corners;
  return by_triple.value_or(false);
}

ClassificationReport classify(const SignedPermutation& w, ClassifyMode mode) {
  ClassificationReport r;
  r.w = w;
  auto pv = classify_by_patterns(w);
  r.by_patterns = pv.ok;
  r.pattern_witness = std::move(pv.witness);

  r.corners = corners(w);
  auto cv = classify_by_corners(r.corners);
  r.by_corners = cv.ok;
  r.corner_witness = cv.witness;

  if (mode == ClassifyMode::Full || pv.ok) {
    auto tv = triple_verdict(w, r.corners);
    r.by_triple = tv.ok;
    r.triple = std::move(tv.triple);
  }
  tag_optional(r);
  return r;
}

std::string VerificationSummary::to_string() const {
  return std::to_string(total) + " total, " + std::to_string(theta_vexillary) +
         " theta-vexillary, " + std::to_string(mismatches.size()) + " mismatches";
}

VerificationSummary verify_equivalence(int n, unsigned jobs, bool allow_large) {
  const GroupEnumeration group(n, allow_large);
  if (jobs == 0) jobs = 1;
  // More chunks than workers keeps the load even; results merge in chunk order.
  const auto chunks = group.chunks(static_cast<std::size_t>(jobs) * 8);

  struct Partial {
    std::uint64_t total = 0;
    std::uint64_t theta = 0;
    std::vector<SignedPermutation> mismatches;
  };
  std::vector<Partial> partials(chunks.size());
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    for (std::size_t c = next++; c < chunks.size(); c = next++) {
      Partial& part = partials[c];
      group.for_each(chunks[c], [&](const SignedPermutation& w) {
        const ClassificationReport r = classify(w, ClassifyMode::Full);
        ++part.total;
        if (!r.consistent()) {
          part.mismatches.push_back(w);
        } else if (*r.by_patterns) {
          ++part.theta;
        }
      });
    }
  };

  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();

  VerificationSummary summary;
  summary.n = n;
  for (auto& part : partials) {
    summary.total += part.total;
    summary.theta_vexillary += part.theta;
    for (auto& m : part.mismatches) summary.mismatches.push_back(std::move(m));
  }
  return summary;
}

void for_each_theta_vexillary(int n, unsigned jobs, bool allow_large,
                              const std::function<bool(const SignedPermutation&)>& emit) {
  const GroupEnumeration group(n, allow_large);
  if (jobs == 0) jobs = 1;
  const auto chunks = group.chunks(static_cast<std::size_t>(jobs) * 64);

  for (std::size_t wave = 0; wave < chunks.size(); wave += jobs) {
    const std::size_t end = std::min(chunks.size(), wave + jobs);
    std::vector<std::vector<SignedPermutation>> found(end - wave);
    const auto scan = [&](std::size_t c) {
      group.for_each(chunks[c], [&](const SignedPermutation& w) {
        if (classify_by_patterns(w).ok) found[c - wave].push_back(w);
      });
    };
    {
      std::vector<std::jthread> pool;
      for (std::size_t c = wave + 1; c < end; ++c) pool.emplace_back(scan, c);
      scan(wave);
    }
    for (const auto& part : found) {
      for (const auto& w : part) {
        if (!emit(w)) return;
      }
    }
  }
}

bool oracle_is_theta_vexillary(const SignedPermutation& w, int s_max, bool allow_large) {
  const int n = w.rank();
  bool found = false;
  // Placements of steps 1..m never move, so a prefix that disagrees with w is dead.
  const PrefixFilter agrees = [&](const ConstructionTrace& trace) {
    for (std::size_t step = 0; step + 1 < trace.steps.size(); ++step) {
      for (auto [pos, value] : trace.steps[step].placed) {
        if (w(pos) != value) return false;
      }
    }
    return true;
  };
  for_each_triple(
      n, s_max > 0 ? s_max : n,
      [&](const ThetaTriple& t) {
        if (construct(t, n) == w) found = true;
        return !found;
      },
      allow_large, agrees);
  return found;
}

std::vector<SignedPermutation> oracle_theta_vexillary_set(int n, bool allow_large) {
  std::set<SignedPermutation> seen;
  for_each_triple(
      n, n,
      [&](const ThetaTriple& t) {
        seen.insert(construct(t, n));
        return true;
      },
      allow_large);
  return {seen.begin(), seen.end()};
}

}  // namespace thetavex
