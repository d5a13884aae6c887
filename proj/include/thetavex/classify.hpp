#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thetavex/diagram.hpp"
#include "thetavex/sigperm.hpp"
#include "thetavex/theta.hpp"

namespace thetavex {

/// The thirteen signed patterns whose avoidance characterises the class.
const std::array<SignedPattern, 13>& pattern_table();

/// FNV-1a digest of the pattern table's text form; pinned by the tests.
std::uint64_t pattern_table_digest();

struct PatternWitness {
  SignedPattern pattern;
  std::vector<int> indices;  // 1-based
  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

struct CornerVerdict {
  bool ok = true;
  std::optional<CornerRecord> witness;  // first corner neither on the NE path nor unessential
};

struct PatternVerdict {
  bool ok = true;
  std::optional<PatternWitness> witness;
};

struct TripleVerdict {
  bool ok = false;
  std::optional<ThetaTriple> triple;
};

CornerVerdict classify_by_corners(const SignedPermutation& w);
CornerVerdict classify_by_corners(const CornerSet& cs);
PatternVerdict classify_by_patterns(const SignedPermutation& w);
TripleVerdict classify_by_triple(const SignedPermutation& w);

enum class ClassifyMode {
  Full,   // all three characterisations
  Quick,  // patterns first; triple recovery only when no pattern occurs
};

struct ClassificationReport {
  SignedPermutation w;
  std::optional<bool> by_patterns;
  std::optional<bool> by_corners;
  std::optional<bool> by_triple;
  std::optional<ThetaTriple> triple;
  std::optional<PatternWitness> pattern_witness;
  std::optional<CornerRecord> corner_witness;
  /// Corners of w; NE-path corners not in the triple are tagged Optional.
  CornerSet corners;

  /// Overall verdict: the pattern verdict, which the triple verdict matches on
  /// every rank checked. Use consistent() to detect a disagreeing corner verdict.
  bool theta_vexillary() const;
  /// True iff all computed verdicts agree.
  bool consistent() const;
};

ClassificationReport classify(const SignedPermutation& w, ClassifyMode mode = ClassifyMode::Full);

struct VerificationSummary {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t theta_vexillary = 0;
  std::vector<SignedPermutation> mismatches;  // in enumeration order

  /// "8 total, 8 theta-vexillary, 0 mismatches"
  std::string to_string() const;
};

/// Runs the three classifiers over all of W_n, split across `jobs` workers.
/// The summary does not depend on `jobs`.
VerificationSummary verify_equivalence(int n, unsigned jobs = 1, bool allow_large = false);

/// Streams the theta-vexillary elements of W_n in lexicographic window order.
/// Chunks are classified `jobs` at a time and emitted in order, so the stream
/// does not depend on `jobs`. `emit` returns false to stop.
void for_each_theta_vexillary(int n, unsigned jobs, bool allow_large,
                              const std::function<bool(const SignedPermutation&)>& emit);

/// Independent check: searches the generated triples of rank w.rank() for one
/// that constructs w. `s_max` bounds the triple length (defaults to the rank).
bool oracle_is_theta_vexillary(const SignedPermutation& w, int s_max = 0,
                               bool allow_large = false);

/// Windows of all theta-vexillary elements of W_n reachable by generated triples,
/// sorted lexicographically.
std::vector<SignedPermutation> oracle_theta_vexillary_set(int n, bool allow_large = false);

}  // namespace thetavex
