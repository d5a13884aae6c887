#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thetavex/diagram.hpp"
#include "thetavex/sigperm.hpp"

namespace thetavex {

/// Three s-tuples (k, p, q) with 0 < k_1 < ... < k_s, p_1 >= ... >= p_s > 0
/// and q_1 >= ... >= q_s. Indices in the accessors are 1-based.
///
/// `n` is the ambient rank; 0 means "smallest feasible rank".
struct ThetaTriple {
  int n = 0;
  std::vector<int> k;
  std::vector<int> p;
  std::vector<int> q;

  int size() const { return static_cast<int>(k.size()); }
  int k_at(int i) const { return i == 0 ? 0 : k[i - 1]; }
  int p_at(int i) const { return p[i - 1]; }
  int q_at(int i) const { return q[i - 1]; }

  /// "3 4 5 6 9; 8 6 5 4 2; 7 4 2 -3 -6", or ";;" when s = 0.
  std::string to_string() const;
  /// Accepts the text form above; checks only that the three lists have equal length.
  static ThetaTriple parse(std::string_view text, int n = 0);

  friend bool operator==(const ThetaTriple&, const ThetaTriple&) = default;
};

/// C2Placement is the placement form of C2: every entry placed by steps
/// R(i)+1..a-1 exceeds q_i. It is checked in addition to the inequality C2,
/// which alone admits triples whose construction collides with another triple's.
enum class Condition { Shape, A1, A2, A3, B1, B2, B3, C1, C2, C2Placement };

std::string_view to_string(Condition c);

struct ConditionFailure {
  Condition condition;
  std::vector<int> indices;

  /// e.g. "B2 fails at i=4".
  std::string message() const;
};

struct ConditionReport {
  std::vector<ConditionFailure> failures;

  bool valid() const { return failures.empty(); }
  bool passed(Condition c) const;
  const ConditionFailure* first_failure() const {
    return failures.empty() ? nullptr : &failures.front();
  }
};

/// Quantities derived from q: the sign cut a, and R(i), L(i) for a <= i <= s.
struct TripleDerived {
  int a = 1;
  std::vector<int> R;                // R[i] for i in [a, s]; other slots unused
  std::vector<std::optional<int>> L;  // L[i] for i in [a, s]; empty when the range is empty

  int r_at(int i) const { return i == a - 1 ? a - 1 : R[i]; }
};

class InvalidTripleError : public std::runtime_error {
 public:
  explicit InvalidTripleError(ConditionFailure failure)
      : std::runtime_error(failure.message()), failure_(std::move(failure)) {}
  const ConditionFailure& failure() const { return failure_; }

 private:
  ConditionFailure failure_;
};

class InfeasibleRankError : public std::runtime_error {
 public:
  InfeasibleRankError(const std::string& what, int minimum_rank)
      : std::runtime_error(what), minimum_rank_(minimum_rank) {}
  /// Smallest rank at which construction succeeds, or 0 if none was found.
  int minimum_rank() const { return minimum_rank_; }

 private:
  int minimum_rank_;
};

/// Requires the monotone shape and A1/A2; throws InvalidTripleError otherwise.
TripleDerived derive(const ThetaTriple& t);

ConditionReport validate(const ThetaTriple& t);

/// Entries placed by one step, as (position, value) pairs in increasing position order.
struct PlacementStep {
  int step = 0;
  std::vector<std::pair<int, int>> placed;
};

struct ConstructionTrace {
  SignedPermutation result;
  std::vector<PlacementStep> steps;  // steps 1..s+1
};

/// An entry placed against the step bounds: a non-positive entry from a step
/// i >= a, or an entry <= q_i (row_index = i) from a step in R(i)+1..a-1.
struct StepBoundViolation {
  enum Kind { NonPositive, BelowRow } kind;
  int step;
  int row_index;
  int position;
  int value;
};

std::vector<StepBoundViolation> step_bound_violations(const ThetaTriple& t,
                                                      const ConstructionTrace& trace);

/// Runs the placement algorithm. With `checked`, the triple is validated first
/// (InvalidTripleError) and steps a..s are asserted to place positive entries
/// (std::logic_error on violation).
ConstructionTrace construct_traced(const ThetaTriple& t, int n, bool checked = true);

/// w(t) at rank n, or at t.n when n is omitted (minimum feasible rank if t.n == 0).
SignedPermutation construct(const ThetaTriple& t, int n);
SignedPermutation construct(const ThetaTriple& t);

/// The placement algorithm without validation; used to study invalid triples.
SignedPermutation construct_unchecked(const ThetaTriple& t, int n);

/// Smallest rank at which the placement algorithm succeeds; 0 if none up to a
/// generous bound.
int minimum_feasible_rank(const ThetaTriple& t);

/// w(t)^-1 built by the mirrored algorithm on the dual triple (k, q, p).
SignedPermutation construct_inverse(const ThetaTriple& t, int n);
SignedPermutation construct_inverse(const ThetaTriple& t);

/// Corners of cs outside t sitting at (p_i, 1 - q_j) between consecutive
/// triple rows, for a <= i and j < a.
std::vector<CornerRecord> optional_corners(const SignedPermutation& w, const ThetaTriple& t,
                                           const CornerSet& cs);

/// The unique triple of w, or nullopt when the corner set does not decompose
/// into NE path and unessential corners.
std::optional<ThetaTriple> recover(const SignedPermutation& w);
std::optional<ThetaTriple> recover(const SignedPermutation& w, const CornerSet& cs);

/// Optional pruning hook for triple generation: receives the placements of a
/// prefix (steps 1..m plus the final fill) and returns false to skip every
/// extension of that prefix.
using PrefixFilter = std::function<bool(const ConstructionTrace&)>;

/// Visits every valid triple with k_s, p_1, |q_i| <= n and s <= s_max that
/// constructs at rank n, in a deterministic order. Visitor returns false to stop.
void for_each_triple(int n, int s_max, const std::function<bool(const ThetaTriple&)>& visit,
                     bool allow_large = false, const PrefixFilter& filter = {});

std::vector<ThetaTriple> generate_triples(int n, int s_max, bool allow_large = false);

}  // namespace thetavex
