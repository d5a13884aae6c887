#include "thetavex/theta.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace thetavex {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> parse_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    const char* first = token.data();
    if (token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("invalid token '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

std::optional<ConditionFailure> shape_failure(const ThetaTriple& t) {
  const int s = t.size();
  if (static_cast<int>(t.p.size()) != s || static_cast<int>(t.q.size()) != s) {
    return ConditionFailure{Condition::Shape, {}};
  }
  for (int i = 1; i <= s; ++i) {
    if (t.k_at(i) <= t.k_at(i - 1)) return ConditionFailure{Condition::Shape, {i}};
    if (t.p_at(i) <= 0) return ConditionFailure{Condition::Shape, {i}};
    if (i > 1 && t.p_at(i) > t.p_at(i - 1)) return ConditionFailure{Condition::Shape, {i}};
    if (i > 1 && t.q_at(i) > t.q_at(i - 1)) return ConditionFailure{Condition::Shape, {i}};
  }
  return std::nullopt;
}

// A1/A2 failures, in index order.
std::vector<ConditionFailure> sign_failures(const ThetaTriple& t) {
  std::vector<ConditionFailure> out;
  const int s = t.size();
  for (int i = 1; i <= s; ++i) {
    if (t.q_at(i) == 0) out.push_back({Condition::A1, {i}});
  }
  for (int i = 1; i <= s; ++i) {
    for (int j = i + 1; j <= s; ++j) {
      if (t.q_at(i) != 0 && t.q_at(i) == -t.q_at(j)) out.push_back({Condition::A2, {i, j}});
    }
  }
  return out;
}

}  // namespace

std::string ThetaTriple::to_string() const {
  if (k.empty()) return ";;";
  return join(k) + "; " + join(p) + "; " + join(q);
}

ThetaTriple ThetaTriple::parse(std::string_view text, int n) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) {
    throw ParseError("triple needs three ';'-separated lists, got " +
                     std::to_string(parts.size()));
  }
  ThetaTriple t;
  t.n = n;
  t.k = parse_list(parts[0]);
  t.p = parse_list(parts[1]);
  t.q = parse_list(parts[2]);
  if (t.k.size() != t.p.size() || t.k.size() != t.q.size()) {
    throw InvalidTripleError({Condition::Shape, {}});
  }
  if (auto f = shape_failure(t)) throw InvalidTripleError(*f);
  return t;
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::Shape: return "shape";
    case Condition::A1: return "A1";
    case Condition::A2: return "A2";
    case Condition::A3: return "A3";
    case Condition::B1: return "B1";
    case Condition::B2: return "B2";
    case Condition::B3: return "B3";
    case Condition::C1: return "C1";
    case Condition::C2: return "C2";
    case Condition::C2Placement: return "C2'";
  }
  return "?";
}

std::string ConditionFailure::message() const {
  std::string out(to_string(condition));
  out += " fails";
  if (condition == Condition::Shape && indices.empty()) return out + ": k, p and q differ in length";
  static constexpr const char* names[] = {"i", "j"};
  for (std::size_t t = 0; t < indices.size() && t < 2; ++t) {
    out += t == 0 ? " at " : ", ";
    out += names[t];
    out += '=';
    out += std::to_string(indices[t]);
  }
  return out;
}

bool ConditionReport::passed(Condition c) const {
  return std::none_of(failures.begin(), failures.end(),
                      [c](const ConditionFailure& f) { return f.condition == c; });
}

TripleDerived derive(const ThetaTriple& t) {
  if (auto f = shape_failure(t)) throw InvalidTripleError(*f);
  if (auto fs = sign_failures(t); !fs.empty()) throw InvalidTripleError(fs.front());

  const int s = t.size();
  TripleDerived d;
  d.a = s + 1;
  for (int i = 1; i <= s; ++i) {
    if (t.q_at(i) < 0) {
      d.a = i;
      break;
    }
  }
  d.R.assign(static_cast<std::size_t>(s) + 2, 0);
  d.L.assign(static_cast<std::size_t>(s) + 2, std::nullopt);
  const auto q_or_inf = [&](int j) {
    return j == 0 ? std::numeric_limits<int>::max() : t.q_at(j);
  };
  for (int i = d.a; i <= s; ++i) {
    const int target = -t.q_at(i);
    int r = -1;
    for (int j = 0; j <= d.a - 1; ++j) {
      if (q_or_inf(j) > target && target > t.q_at(j + 1)) {
        r = j;
        break;
      }
    }
    if (r < 0) throw InvalidTripleError({Condition::A2, {i}});
    d.R[i] = r;
    for (int j = d.a - 1; j >= r + 1; --j) {
      if (t.k_at(j) - t.k_at(r + 1) >= t.q_at(r + 1) - t.q_at(j)) {
        d.L[i] = j;
        break;
      }
    }
  }
  return d;
}

ConditionReport validate(const ThetaTriple& t) {
  ConditionReport report;
  if (auto f = shape_failure(t)) {
    report.failures.push_back(*f);
    return report;
  }
  const int s = t.size();
  report.failures = sign_failures(t);
  if (s > 0 && t.q_at(s) < 0 && t.p_at(s) <= 1) report.failures.push_back({Condition::A3, {s}});
  if (!report.passed(Condition::A1) || !report.passed(Condition::A2)) return report;

  const TripleDerived d = derive(t);
  const int a = d.a;
  for (int i = 1; i < a - 1; ++i) {
    const int lhs = (t.p_at(i) - t.p_at(i + 1)) + (t.q_at(i) - t.q_at(i + 1));
    if (!(lhs > t.k_at(i + 1) - t.k_at(i))) report.failures.push_back({Condition::B1, {i}});
  }
  for (int i = a; i < s; ++i) {
    const int lhs = (t.p_at(i) - t.p_at(i + 1)) + (t.q_at(i) - t.q_at(i + 1));
    const int rhs = (t.k_at(i + 1) - t.k_at(i)) + (t.k_at(d.R[i]) - t.k_at(d.R[i + 1]));
    if (!(lhs > rhs)) report.failures.push_back({Condition::B2, {i}});
  }
  if (a <= s) {
    if (!(t.p_at(s) + t.q_at(s) + t.k_at(s) > t.k_at(d.R[s]) + 1)) {
      report.failures.push_back({Condition::B3, {s}});
    }
  }
  for (int i = a; i <= s; ++i) {
    if (!(-t.q_at(i) >= t.k_at(i) - t.k_at(d.R[i]))) {
      report.failures.push_back({Condition::C1, {i}});
    }
  }
  for (int i = a; i <= s; ++i) {
    if (!d.L[i]) continue;
    const int l = *d.L[i];
    if (!(-t.q_at(i) >= t.q_at(l) + t.k_at(l) - t.k_at(d.R[i]))) {
      report.failures.push_back({Condition::C2, {i}});
    }
  }
  // Entries of steps 1..a-1 depend only on the triple, so the placement form of
  // C2 can be checked without fixing a rank.
  std::vector<std::vector<int>> negative_steps(static_cast<std::size_t>(a));
  std::set<int> used;
  for (int j = 1; j < a; ++j) {
    const int count = t.k_at(j) - t.k_at(j - 1);
    for (int v = -t.q_at(j); static_cast<int>(negative_steps[j].size()) < count; --v) {
      if (used.insert(std::abs(v)).second) negative_steps[j].push_back(v);
    }
  }
  for (int i = a; i <= s; ++i) {
    bool ok = true;
    for (int j = d.R[i] + 1; j < a && ok; ++j) {
      for (int v : negative_steps[j]) ok = ok && v > t.q_at(i);
    }
    if (!ok) report.failures.push_back({Condition::C2Placement, {i}});
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const ConditionFailure& x, const ConditionFailure& y) {
                     return static_cast<int>(x.condition) < static_cast<int>(y.condition);
                   });
  return report;
}

namespace {

// The placement algorithm; returns nullopt (with a reason) when entries or
// positions run out at rank n.
std::optional<ConstructionTrace> try_construct(const ThetaTriple& t, int n, std::string* why) {
  const int s = t.size();
  const auto fail = [&](std::string reason) -> std::optional<ConstructionTrace> {
    if (why) *why = std::move(reason);
    return std::nullopt;
  };
  if (n < 1) return fail("rank must be positive");
  for (int i = 1; i <= s; ++i) {
    if (t.p_at(i) > n || std::abs(t.q_at(i)) > n || t.k_at(i) > n) {
      return fail("triple entries exceed rank " + std::to_string(n));
    }
  }

  std::vector<int> window(static_cast<std::size_t>(n) + 1, 0);  // 1-based, 0 = free
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  ConstructionTrace trace;
  for (int i = 1; i <= s; ++i) {
    const int count = t.k_at(i) - t.k_at(i - 1);
    std::vector<int> values;
    for (int v = -t.q_at(i); v >= -n && static_cast<int>(values.size()) < count; --v) {
      if (v != 0 && !used[std::abs(v)]) values.push_back(v);
    }
    if (static_cast<int>(values.size()) < count) {
      return fail("step " + std::to_string(i) + " runs out of entries at rank " +
                  std::to_string(n));
    }
    std::vector<int> positions;
    for (int z = t.p_at(i); z <= n && static_cast<int>(positions.size()) < count; ++z) {
      if (window[z] == 0) positions.push_back(z);
    }
    if (static_cast<int>(positions.size()) < count) {
      return fail("step " + std::to_string(i) + " runs out of positions at rank " +
                  std::to_string(n));
    }
    std::sort(values.begin(), values.end());
    PlacementStep step{i, {}};
    for (int c = 0; c < count; ++c) {
      window[positions[c]] = values[c];
      used[std::abs(values[c])] = true;
      step.placed.emplace_back(positions[c], values[c]);
    }
    trace.steps.push_back(std::move(step));
  }

  PlacementStep last{s + 1, {}};
  int next_value = 1;
  for (int z = 1; z <= n; ++z) {
    if (window[z] != 0) continue;
    while (used[next_value]) ++next_value;
    window[z] = next_value;
    used[next_value] = true;
    last.placed.emplace_back(z, next_value);
  }
  trace.steps.push_back(std::move(last));
  trace.result = SignedPermutation(std::vector<int>(window.begin() + 1, window.end()));
  return trace;
}

void require_positive_steps(const ThetaTriple& t, const ConstructionTrace& trace) {
  for (const auto& v : step_bound_violations(t, trace)) {
    if (v.kind == StepBoundViolation::NonPositive) {
      throw std::logic_error("step " + std::to_string(v.step) + " placed non-positive entry " +
                             std::to_string(v.value) + " for valid triple " + t.to_string());
    }
  }
}

int rank_search_bound(const ThetaTriple& t) {
  int lower = 1;
  int slack = 1;
  for (int i = 1; i <= t.size(); ++i) {
    lower = std::max({lower, t.p_at(i), std::abs(t.q_at(i)), t.k_at(i)});
    slack = std::max(slack, std::abs(t.q_at(i)));
  }
  return lower + t.k_at(t.size()) + slack + 1;
}

[[noreturn]] void throw_infeasible(const ThetaTriple& t, int n, const std::string& why) {
  const int minimum = minimum_feasible_rank(t);
  std::string msg = "infeasible rank " + std::to_string(n) + ": " + why;
  if (minimum > 0) msg += "; minimum feasible rank is " + std::to_string(minimum);
  throw InfeasibleRankError(msg, minimum);
}

}  // namespace

std::vector<StepBoundViolation> step_bound_violations(const ThetaTriple& t,
                                                      const ConstructionTrace& trace) {
  std::vector<StepBoundViolation> out;
  const TripleDerived d = derive(t);
  const int s = t.size();
  for (int step = d.a; step <= s; ++step) {
    for (auto [pos, value] : trace.steps[step - 1].placed) {
      if (value <= 0) out.push_back({StepBoundViolation::NonPositive, step, 0, pos, value});
    }
  }
  for (int i = d.a; i <= s; ++i) {
    for (int step = d.R[i] + 1; step <= d.a - 1; ++step) {
      for (auto [pos, value] : trace.steps[step - 1].placed) {
        if (value <= t.q_at(i)) out.push_back({StepBoundViolation::BelowRow, step, i, pos, value});
      }
    }
  }
  return out;
}

int minimum_feasible_rank(const ThetaTriple& t) {
  const int bound = rank_search_bound(t);
  for (int m = 1; m <= bound; ++m) {
    if (try_construct(t, m, nullptr)) return m;
  }
  return 0;
}

ConstructionTrace construct_traced(const ThetaTriple& t, int n, bool checked) {
  if (checked) {
    const ConditionReport report = validate(t);
    if (!report.valid()) throw InvalidTripleError(*report.first_failure());
  } else if (auto f = shape_failure(t)) {
    throw InvalidTripleError(*f);
  }
  std::string why;
  auto trace = try_construct(t, n, &why);
  if (!trace) throw_infeasible(t, n, why);
  if (checked) require_positive_steps(t, *trace);
  return std::move(*trace);
}

SignedPermutation construct(const ThetaTriple& t, int n) {
  return construct_traced(t, n, true).result;
}

SignedPermutation construct(const ThetaTriple& t) {
  int n = t.n;
  if (n == 0) {
    const ConditionReport report = validate(t);
    if (!report.valid()) throw InvalidTripleError(*report.first_failure());
    n = minimum_feasible_rank(t);
    if (n == 0) throw InfeasibleRankError("no feasible rank found for " + t.to_string(), 0);
  }
  return construct(t, n);
}

SignedPermutation construct_unchecked(const ThetaTriple& t, int n) {
  return construct_traced(t, n, false).result;
}

SignedPermutation construct_inverse(const ThetaTriple& t, int n) {
  const ConditionReport report = validate(t);
  if (!report.valid()) throw InvalidTripleError(*report.first_failure());
  const int s = t.size();
  for (int i = 1; i <= s; ++i) {
    if (t.p_at(i) > n || std::abs(t.q_at(i)) > n || t.k_at(i) > n) {
      throw_infeasible(t, n, "triple entries exceed rank " + std::to_string(n));
    }
  }

  // Full form on [-n, n]; `filled` marks assigned positions.
  std::vector<int> full(static_cast<std::size_t>(2 * n + 1), 0);
  std::vector<bool> filled(static_cast<std::size_t>(2 * n + 1), false);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  const auto at = [n](int z) { return static_cast<std::size_t>(z + n); };
  filled[at(0)] = true;

  const auto place = [&](int z, int v) {
    full[at(z)] = v;
    full[at(-z)] = -v;
    filled[at(z)] = filled[at(-z)] = true;
    used[std::abs(v)] = true;
  };

  for (int i = 1; i <= s; ++i) {
    const int count = t.k_at(i) - t.k_at(i - 1);
    std::vector<int> values;
    for (int v = -t.p_at(i); v >= -n && static_cast<int>(values.size()) < count; --v) {
      if (!used[std::abs(v)]) values.push_back(v);
    }
    std::vector<int> positions;
    for (int z = t.q_at(i); z <= n && static_cast<int>(positions.size()) < count; ++z) {
      if (!filled[at(z)]) positions.push_back(z);
    }
    if (static_cast<int>(values.size()) < count || static_cast<int>(positions.size()) < count) {
      throw_infeasible(t, n, "dual step " + std::to_string(i) + " runs out at rank " +
                                 std::to_string(n));
    }
    std::sort(values.begin(), values.end());
    for (int c = 0; c < count; ++c) place(positions[c], values[c]);
  }
  int next_value = 1;
  for (int z = 1; z <= n; ++z) {
    if (filled[at(z)]) continue;
    while (used[next_value]) ++next_value;
    place(z, next_value);
  }
  return SignedPermutation(std::vector<int>(full.begin() + n + 1, full.end()));
}

SignedPermutation construct_inverse(const ThetaTriple& t) {
  int n = t.n;
  if (n == 0) n = minimum_feasible_rank(t);
  return construct_inverse(t, n);
}

std::vector<CornerRecord> optional_corners(const SignedPermutation& /*w*/, const ThetaTriple& t,
                                           const CornerSet& cs) {
  std::vector<CornerRecord> out;
  const int s = t.size();
  if (s == 0) return out;
  const TripleDerived d = derive(t);
  const auto in_triple = [&](const CornerRecord& c) {
    for (int i = 1; i <= s; ++i) {
      if (t.p_at(i) == c.p && t.q_at(i) == c.q) return true;
    }
    return false;
  };
  for (const auto& c : cs.corners) {
    if (in_triple(c)) continue;
    int row = 0;
    int col = 0;
    for (int i = d.a; i <= s && row == 0; ++i) {
      if (c.p != t.p_at(i)) continue;
      const bool below_previous = i == 1 || t.q_at(i - 1) >= c.q;
      if (!(c.q > t.q_at(i) && below_previous)) continue;
      // With repeated q values the last matching step is the one the rank identity uses.
      for (int j = d.a - 1; j >= 1; --j) {
        if (c.q == 1 - t.q_at(j)) {
          row = i;
          col = j;
          break;
        }
      }
    }
    if (row == 0) continue;
    const int lhs = c.q - t.q_at(row);
    const int rhs = t.k_at(row) - c.k + t.k_at(col) - t.k_at(d.R[row]);
    if (lhs != rhs) {
      throw std::logic_error("optional corner " + std::to_string(c.k) + "," +
                             std::to_string(c.p) + "," + std::to_string(c.q) +
                             " breaks the rank identity for " + t.to_string());
    }
    out.push_back(c);
    out.back().cls = CornerClass::Optional;
  }
  return out;
}

std::optional<ThetaTriple> recover(const SignedPermutation& w) { return recover(w, corners(w)); }

std::optional<ThetaTriple> recover(const SignedPermutation& w, const CornerSet& cs) {
  if (!cs.decomposes()) return std::nullopt;
  const int n = w.rank();
  ThetaTriple full;
  full.n = n;
  for (const auto& c : cs.ne_path) {
    full.k.push_back(c.k);
    full.p.push_back(c.p);
    full.q.push_back(c.q);
  }
  TripleDerived d;
  try {
    d = derive(full);
  } catch (const InvalidTripleError&) {
    return std::nullopt;
  }
  const int s = full.size();
  // Sentinel s+1 = (n, 1, -n) with R(s+1) = 0 turns B3 into the i = s case of B2.
  const auto k_ext = [&](int i) { return i == s + 1 ? n : full.k_at(i); };
  const auto p_ext = [&](int i) { return i == s + 1 ? 1 : full.p_at(i); };
  const auto q_ext = [&](int i) { return i == s + 1 ? -n : full.q_at(i); };
  const auto r_ext = [&](int i) { return i == s + 1 ? 0 : d.R[i]; };

  ThetaTriple t;
  t.n = n;
  for (int i = 1; i <= s; ++i) {
    if (i >= d.a) {
      const int lhs = (p_ext(i) - p_ext(i + 1)) + (q_ext(i) - q_ext(i + 1));
      const int rhs = (k_ext(i + 1) - k_ext(i)) + (full.k_at(r_ext(i)) - full.k_at(r_ext(i + 1)));
      if (lhs == rhs) continue;
    }
    t.k.push_back(full.k_at(i));
    t.p.push_back(full.p_at(i));
    t.q.push_back(full.q_at(i));
  }
  return t;
}

namespace {

bool prefix_viable(const ThetaTriple& t) {
  const ConditionReport r = validate(t);
  return std::all_of(r.failures.begin(), r.failures.end(), [](const ConditionFailure& f) {
    return f.condition == Condition::A3 || f.condition == Condition::B3;
  });
}

struct TripleSearch {
  int n;
  int s_max;
  const std::function<bool(const ThetaTriple&)>& visit;
  const PrefixFilter& filter;
  ThetaTriple t;
  bool stopped = false;

  void run() {
    t.n = n;
    descend();
  }

  void descend() {
    if (stopped) return;
    if (!prefix_viable(t)) return;
    const auto trace = try_construct(t, n, nullptr);
    if (!trace) return;
    if (filter && !filter(*trace)) return;
    if (validate(t).valid() && !visit(t)) {
      stopped = true;
      return;
    }
    if (t.size() >= s_max) return;
    const int k_min = t.k_at(t.size()) + 1;
    const int p_max = t.size() == 0 ? n : t.p.back();
    const int q_max = t.size() == 0 ? n : t.q.back();
    for (int k = k_min; k <= n; ++k) {
      for (int p = p_max; p >= 1; --p) {
        for (int q = q_max; q >= -n; --q) {
          if (q == 0) continue;
          t.k.push_back(k);
          t.p.push_back(p);
          t.q.push_back(q);
          descend();
          t.k.pop_back();
          t.p.pop_back();
          t.q.pop_back();
          if (stopped) return;
        }
      }
    }
  }
};

}  // namespace

void for_each_triple(int n, int s_max, const std::function<bool(const ThetaTriple&)>& visit,
                     bool allow_large, const PrefixFilter& filter) {
  check_rank_guard(n, allow_large);
  TripleSearch search{n, s_max, visit, filter, {}};
  search.run();
}

std::vector<ThetaTriple> generate_triples(int n, int s_max, bool allow_large) {
  std::vector<ThetaTriple> out;
  for_each_triple(
      n, s_max,
      [&](const ThetaTriple& t) {
        out.push_back(t);
        return true;
      },
      allow_large);
  return out;
}

}  // namespace thetavex
